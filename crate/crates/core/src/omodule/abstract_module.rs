use crate::error::{Error, Result};
use crate::linalg::{invert, nullspace, Matrix, Subspace};
use crate::octonion::{Octonion, MUL_TABLE};
use crate::omodule::standard::standard_action;
use crate::omodule::ModuleType;
use crate::scalar::Scalar;

/// A module presented abstractly: a dimension and seven action matrices for
/// e₁…e₇. Whether they actually satisfy the required relations is decided
/// by [`validate_abstract`].
#[derive(Clone, Debug, PartialEq)]
pub struct AbstractModule<T> {
    d: usize,
    ls: Vec<Matrix<T>>,
}

impl<T: Scalar> AbstractModule<T> {
    pub fn new(ls: Vec<Matrix<T>>) -> Result<Self> {
        if ls.len() != 7 {
            return Err(Error::Dimension {
                context: "AbstractModule generators",
                expected: 7,
                got: ls.len(),
            });
        }
        let d = ls[0].rows();
        for l in &ls {
            if !l.is_square() || l.rows() != d {
                return Err(Error::Dimension {
                    context: "AbstractModule generator size",
                    expected: d,
                    got: l.rows().max(l.cols()),
                });
            }
        }
        Ok(AbstractModule { d, ls })
    }

    /// The standard module of a given type, as an abstract presentation.
    pub fn standard(mtype: ModuleType) -> Self {
        AbstractModule {
            d: mtype.dim(),
            ls: standard_action(mtype),
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Matrix<T>] {
        &self.ls
    }

    /// Action matrix of an arbitrary octonion, by linear extension.
    pub fn act(&self, x: &Octonion<T>) -> Matrix<T> {
        act_linear(&self.ls, x)
    }

    /// Conjugates every generator by `s`: L ↦ s⁻¹·L·s.
    pub fn conjugated(&self, s: &Matrix<T>) -> Result<Self> {
        if s.rows() != self.d || s.cols() != self.d {
            return Err(Error::Dimension {
                context: "AbstractModule::conjugated",
                expected: self.d,
                got: s.rows().max(s.cols()),
            });
        }
        let s_inv = invert(s).ok_or_else(|| {
            Error::InvalidInput("conjugating matrix is not invertible".into())
        })?;
        Ok(AbstractModule {
            d: self.d,
            ls: self.ls.iter().map(|l| &(&s_inv * l) * s).collect(),
        })
    }
}

/// x₀·I + Σ x_i·L_i for seven generator images.
pub fn act_linear<T: Scalar>(ls: &[Matrix<T>], x: &Octonion<T>) -> Matrix<T> {
    let d = ls[0].rows();
    let mut out = Matrix::<T>::identity(d).scale(x.coord(0));
    for i in 1..=7 {
        if x.coord(i).is_zero() {
            continue;
        }
        out = &out + &ls[i - 1].scale(x.coord(i));
    }
    out
}

/// Stacked linear conditions cutting out the associative part
/// (Act(e_ie_j) − L_iL_j over i < j) or, with `conjugate`, the conjugate
/// associative part (Act(e_ie_j) − L_jL_i). When the Clifford relations
/// hold, the i < j pairs imply the rest by antisymmetry.
pub fn assoc_conditions<T: Scalar>(ls: &[Matrix<T>], conjugate: bool) -> Matrix<T> {
    let d = ls[0].rows();
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(21 * d);
    for i in 1..=7usize {
        for j in (i + 1)..=7usize {
            let (sign, k) = MUL_TABLE[i][j];
            let act_eiej = if sign > 0 {
                ls[k - 1].clone()
            } else {
                -&ls[k - 1]
            };
            let product = if conjugate {
                &ls[j - 1] * &ls[i - 1]
            } else {
                &ls[i - 1] * &ls[j - 1]
            };
            let block = &act_eiej - &product;
            for r in 0..d {
                rows.push(block.row(r).to_vec());
            }
        }
    }
    Matrix::from_rows(rows).expect("condition rows are uniform")
}

/// Validation outcome for an abstract module.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    /// Violated Clifford pairs (i, j), 1-based, i ≤ j.
    pub clifford_violations: Vec<(usize, usize)>,
    /// Module dimensions must be multiples of 8.
    pub dim_multiple_of_8: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.clifford_violations.is_empty() && self.dim_multiple_of_8
    }
}

/// Checks the Clifford relations and the dimension constraint; failures are
/// listed in the report rather than returned as errors.
pub fn validate_abstract<T: Scalar>(am: &AbstractModule<T>) -> ValidationReport {
    let report = crate::clifford::verify_clifford_relations(am.generators())
        .expect("AbstractModule guarantees seven uniform square matrices");
    ValidationReport {
        clifford_violations: report.violations,
        dim_multiple_of_8: am.dim() % 8 == 0,
    }
}

/// Canonical identification of an abstract module with a standard
/// 𝕆ⁿ ⊕ 𝕆̄ᵏ: the invariant subspaces in abstract coordinates and the
/// change-of-basis matrix to stacked standard coordinates.
#[derive(Clone, Debug)]
pub struct CanonicalForm<T> {
    pub mtype: ModuleType,
    pub assoc_basis: Subspace<T>,
    pub conjassoc_basis: Subspace<T>,
    /// Maps abstract coordinates to standard coordinates; conjugating the
    /// abstract action by it yields the standard action matrices.
    pub iso: Matrix<T>,
}

/// Decomposes a validated abstract module: computes the invariant
/// subspaces, reads off the type, and builds a verified isomorphism onto
/// the standard module.
///
/// The standard-coordinate basis is ordered (u_t, e₁u_t, …, e₇u_t) over the
/// associative basis vectors u_t, then (v_s, e₁v_s, …, e₇v_s) over the
/// conjugate-associative ones. A minus-part column block is conjugated so
/// that the stored octonion coordinate q satisfies q ⋆ v_s = the component,
/// matching [`crate::omodule::ModuleElement`]'s convention.
pub fn canonicalize<T: Scalar>(am: &AbstractModule<T>) -> Result<CanonicalForm<T>> {
    let report = validate_abstract(am);
    if !report.passed() {
        return Err(Error::InvalidInput(format!(
            "abstract module fails validation: {} violated Clifford pairs, dim ok: {}",
            report.clifford_violations.len(),
            report.dim_multiple_of_8
        )));
    }
    let d = am.dim();
    let ls = am.generators();
    let (assoc_basis, conjassoc_basis) = if d == 0 {
        (Subspace::empty(0), Subspace::empty(0))
    } else {
        (
            nullspace(&assoc_conditions(ls, false)),
            nullspace(&assoc_conditions(ls, true)),
        )
    };
    let (n, k) = (assoc_basis.dim(), conjassoc_basis.dim());
    if d != 8 * (n + k) {
        return Err(Error::Internal(format!(
            "dimension {d} does not match 8*(n+k) with n={n}, k={k}"
        )));
    }
    let mtype = ModuleType::new(n, k)?;

    // Column basis: each invariant vector followed by its seven images.
    let mut basis_to_abstract: Matrix<T> = Matrix::zeros(d, d);
    let mut col = 0;
    let push_block = |m: &mut Matrix<T>, col: &mut usize, v: &[T], ls: &[Matrix<T>]| {
        for c in 0..8 {
            let image = if c == 0 {
                v.to_vec()
            } else {
                ls[c - 1].matvec(v)
            };
            for (r, x) in image.into_iter().enumerate() {
                m[(r, *col)] = x;
            }
            *col += 1;
        }
    };
    for t in 0..n {
        push_block(&mut basis_to_abstract, &mut col, assoc_basis.basis().row(t), ls);
    }
    for s in 0..k {
        push_block(
            &mut basis_to_abstract,
            &mut col,
            conjassoc_basis.basis().row(s),
            ls,
        );
    }

    let to_columns = invert(&basis_to_abstract).ok_or_else(|| {
        Error::Internal("invariant-subspace column basis is not invertible".into())
    })?;

    // Conjugate the minus blocks: column coordinates c over (v, e_1 v, ...)
    // correspond to the stored octonion c0 - sum c_i e_i.
    let mut iso = to_columns;
    for s in 0..k {
        let base = 8 * (n + s);
        for c in 1..8 {
            for j in 0..d {
                let cur = iso[(base + c, j)].clone();
                iso[(base + c, j)] = -cur;
            }
        }
    }

    // The isomorphism must intertwine the abstract and standard actions.
    let std_action = standard_action::<T>(mtype);
    let iso_inv = invert(&iso)
        .ok_or_else(|| Error::Internal("canonical isomorphism is not invertible".into()))?;
    for (i, l) in ls.iter().enumerate() {
        let conjugated = &(&iso * l) * &iso_inv;
        if conjugated != std_action[i] {
            return Err(Error::Internal(format!(
                "isomorphism fails to intertwine generator {}",
                i + 1
            )));
        }
    }

    Ok(CanonicalForm {
        mtype,
        assoc_basis,
        conjassoc_basis,
        iso,
    })
}
