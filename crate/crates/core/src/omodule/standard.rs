use crate::error::{Error, Result};
use crate::linalg::{nullspace, operator_closure, Matrix, Subspace};
use crate::octonion::Octonion;
use crate::omodule::abstract_module::assoc_conditions;
use crate::omodule::{type_of_closed_subspace, ModuleElement, ModuleType};
use crate::scalar::Scalar;

/// The standard module 𝕆ⁿ ⊕ 𝕆̄ᵏ with its action matrices and invariant
/// subspaces precomputed. Building one once and reusing it amortizes the
/// nullspace computations across many element queries.
#[derive(Clone, Debug)]
pub struct StandardModule<T> {
    mtype: ModuleType,
    action: Vec<Matrix<T>>,
    assoc: Subspace<T>,
    conjassoc: Subspace<T>,
}

impl<T: Scalar> StandardModule<T> {
    pub fn new(mtype: ModuleType) -> Self {
        let action = standard_action(mtype);
        // The invariant subspaces come from the defining linear conditions,
        // not from their known coordinate description; the dimensions are
        // cross-checked against the type.
        let (assoc, conjassoc) = if mtype.dim() == 0 {
            (Subspace::empty(0), Subspace::empty(0))
        } else {
            (
                nullspace(&assoc_conditions(&action, false)),
                nullspace(&assoc_conditions(&action, true)),
            )
        };
        assert_eq!(assoc.dim(), mtype.n(), "associative part has dimension n");
        assert_eq!(
            conjassoc.dim(),
            mtype.k(),
            "conjugate-associative part has dimension k"
        );
        StandardModule {
            mtype,
            action,
            assoc,
            conjassoc,
        }
    }

    pub fn mtype(&self) -> ModuleType {
        self.mtype
    }

    /// The seven action matrices of e₁…e₇.
    pub fn action(&self) -> &[Matrix<T>] {
        &self.action
    }

    pub fn assoc(&self) -> &Subspace<T> {
        &self.assoc
    }

    pub fn conjassoc(&self) -> &Subspace<T> {
        &self.conjassoc
    }

    /// Closure of the element's coordinate vector under the action.
    pub fn generated_submodule(&self, m: &ModuleElement<T>) -> Subspace<T> {
        assert_eq!(m.mtype(), self.mtype, "element type mismatch");
        operator_closure(&[m.coords()], &self.action)
            .expect("action matrices match the coordinate dimension")
    }

    /// Verifies that `s` is closed under the action, then classifies it by
    /// its intersections with the invariant subspaces.
    pub fn submodule_type(&self, s: &Subspace<T>) -> Result<ModuleType> {
        if s.ambient_dim() != self.mtype.dim() {
            return Err(Error::Dimension {
                context: "submodule_type",
                expected: self.mtype.dim(),
                got: s.ambient_dim(),
            });
        }
        if s.is_full() {
            return Ok(self.mtype);
        }
        let checker = s.to_rref_basis();
        for row in s.basis_rows() {
            for op in &self.action {
                if !checker.contains(&op.matvec(&row)) {
                    return Err(Error::InvalidInput(
                        "subspace is not closed under the module action".into(),
                    ));
                }
            }
        }
        type_of_closed_subspace(s, &self.assoc, &self.conjassoc)
    }
}

impl StandardModule<crate::Rat> {
    /// Closure with a modular fast path: a full-rank certificate mod a
    /// large prime proves the exact closure is everything, skipping the
    /// rational elimination; otherwise the exact computation runs.
    pub fn generated_submodule_fast(
        &self,
        m: &ModuleElement<crate::Rat>,
    ) -> Subspace<crate::Rat> {
        assert_eq!(m.mtype(), self.mtype, "element type mismatch");
        if crate::linalg::certify_full_operator_closure(&[m.coords()], &self.action) {
            return Subspace::full(self.mtype.dim());
        }
        self.generated_submodule(m)
    }
}

/// Block-diagonal action matrices of e₁…e₇ on 𝕆ⁿ ⊕ 𝕆̄ᵏ: left
/// multiplication on each plus block, conjugated multiplication (−L) on
/// each minus block.
pub fn standard_action<T: Scalar>(mtype: ModuleType) -> Vec<Matrix<T>> {
    (1..=7)
        .map(|i| {
            let e = Octonion::<T>::unit(i);
            let on_o = e.left_mult_matrix();
            let on_obar = e.conj().left_mult_matrix();
            let mut blocks: Vec<&Matrix<T>> = Vec::with_capacity(mtype.n() + mtype.k());
            for _ in 0..mtype.n() {
                blocks.push(&on_o);
            }
            for _ in 0..mtype.k() {
                blocks.push(&on_obar);
            }
            Matrix::block_diag(&blocks)
        })
        .collect()
}
