//! Bimodule structures: right actions compatible with a left module.
//!
//! A right action is a second family R₁…R₇ of matrices; compatibility means
//! the three associator expressions built from placements of (p, q, m)
//! coincide. In operator form, over all unit pairs (i, j):
//!
//! * right axioms  R_iR_j + R_jR_i = −2δ_ijI (and R of 1 is the identity),
//! * identity A    Act(e_ie_j) − L_iL_j = R_iL_j − L_jR_i,
//! * identity B    R_iL_j − L_jR_i = R_jR_i − R_{e_ie_j}.
//!
//! [`solve_right_action`] decides which left modules admit such a family and
//! whether it is unique; [`verify_bimodule_lemmas`] checks the structural
//! consequences on a module that does.

mod solve;

pub use solve::{
    solve_right_action, solve_stage1, QuadraticResidual, ResidualEquation, SolveOutcome, Stage,
    Stage1,
};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, Matrix, Subspace};
use crate::octonion::{Octonion, MUL_TABLE};
use crate::omodule::{assoc_conditions, AbstractModule};
use crate::scalar::Scalar;

/// Right action of the octonions: matrices for e₁…e₇, with the action of 1
/// implied as the identity and general octonions by linear extension.
#[derive(Clone, Debug, PartialEq)]
pub struct RightAction<T> {
    d: usize,
    rs: Vec<Matrix<T>>,
}

impl<T: Scalar> RightAction<T> {
    pub fn new(rs: Vec<Matrix<T>>) -> Result<Self> {
        if rs.len() != 7 {
            return Err(Error::Dimension {
                context: "RightAction generators",
                expected: 7,
                got: rs.len(),
            });
        }
        let d = rs[0].rows();
        for r in &rs {
            if !r.is_square() || r.rows() != d {
                return Err(Error::Dimension {
                    context: "RightAction generator size",
                    expected: d,
                    got: r.rows().max(r.cols()),
                });
            }
        }
        Ok(RightAction { d, rs })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Matrix<T>] {
        &self.rs
    }

    /// R_x for an arbitrary octonion x, by linear extension with R₁ = I.
    pub fn act(&self, x: &Octonion<T>) -> Matrix<T> {
        crate::omodule::act_linear(&self.rs, x)
    }
}

/// Right multiplication by `p` on the octonions themselves.
pub fn right_mult_matrix<T: Scalar>(p: &Octonion<T>) -> Matrix<T> {
    p.right_mult_matrix()
}

/// The natural right action on 𝕆ⁿ: block-diagonal right multiplication.
/// `n = 0` yields the valid degenerate action on the zero module.
pub fn standard_right_action<T: Scalar>(n: usize) -> RightAction<T> {
    let rs = (1..=7)
        .map(|i| {
            let r = Octonion::<T>::unit(i).right_mult_matrix();
            let blocks: Vec<&Matrix<T>> = (0..n).map(|_| &r).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    RightAction {
        d: 8 * n,
        rs,
    }
}

/// Which of the defining identities a violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BimoduleIdentity {
    /// R_iR_j + R_jR_i = −2δ_ijI.
    RightAxiom,
    /// Act(e_ie_j) − L_iL_j = R_iL_j − L_jR_i.
    IdentityA,
    /// R_iL_j − L_jR_i = R_jR_i − R_{e_ie_j}.
    IdentityB,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleViolation {
    pub identity: BimoduleIdentity,
    pub i: usize,
    pub j: usize,
}

/// Outcome of [`check_bimodule`]: every violated (identity, i, j).
#[derive(Clone, Debug, Default)]
pub struct BimoduleReport {
    pub violations: Vec<BimoduleViolation>,
}

impl BimoduleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// R_{e_ie_j} under the linear extension: e_ie_j is ±e_k or −1.
fn right_of_unit_product<T: Scalar>(ra: &RightAction<T>, i: usize, j: usize) -> Matrix<T> {
    let (sign, k) = MUL_TABLE[i][j];
    let base = if k == 0 {
        Matrix::identity(ra.d)
    } else {
        ra.rs[k - 1].clone()
    };
    if sign > 0 {
        base
    } else {
        -&base
    }
}

/// Verifies that `ra` makes the left module `am` a bimodule: the right
/// axioms plus identities A and B over all unit pairs. Both sides of every
/// identity are bilinear in (p, q), so unit pairs suffice.
pub fn check_bimodule<T: Scalar>(
    am: &AbstractModule<T>,
    ra: &RightAction<T>,
) -> Result<BimoduleReport> {
    if am.dim() != ra.d {
        return Err(Error::Dimension {
            context: "check_bimodule",
            expected: am.dim(),
            got: ra.d,
        });
    }
    let d = ra.d;
    let ls = am.generators();
    let rs = ra.generators();
    let minus_two_i = Matrix::<T>::identity(d).scale(&-(T::one() + T::one()));
    let zero = Matrix::<T>::zeros(d, d);
    let mut violations = Vec::new();

    for i in 1..=7usize {
        for j in 1..=7usize {
            if i <= j {
                let anti = &(&rs[i - 1] * &rs[j - 1]) + &(&rs[j - 1] * &rs[i - 1]);
                let expected = if i == j { &minus_two_i } else { &zero };
                if &anti != expected {
                    violations.push(BimoduleViolation {
                        identity: BimoduleIdentity::RightAxiom,
                        i,
                        j,
                    });
                }
            }
            let commut = &(&rs[i - 1] * &ls[j - 1]) - &(&ls[j - 1] * &rs[i - 1]);
            let (sign, k) = MUL_TABLE[i][j];
            let act_eiej = {
                let base = if k == 0 {
                    Matrix::identity(d)
                } else {
                    ls[k - 1].clone()
                };
                if sign > 0 {
                    base
                } else {
                    -&base
                }
            };
            let lhs_a = &act_eiej - &(&ls[i - 1] * &ls[j - 1]);
            if lhs_a != commut {
                violations.push(BimoduleViolation {
                    identity: BimoduleIdentity::IdentityA,
                    i,
                    j,
                });
            }
            let rhs_b = &(&rs[j - 1] * &rs[i - 1]) - &right_of_unit_product(ra, i, j);
            if commut != rhs_b {
                violations.push(BimoduleViolation {
                    identity: BimoduleIdentity::IdentityB,
                    i,
                    j,
                });
            }
        }
    }
    Ok(BimoduleReport { violations })
}

/// Structural facts verified on a working bimodule.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    /// The associative parts computed from the left and from the right
    /// action agree as subspaces.
    pub assoc_parts_equal: bool,
    pub assoc_dim: usize,
    /// pm = mp holds for every associative basis vector and every unit.
    pub center_commutes: bool,
    /// (pm)q = p(mq) holds for every associative basis vector and unit pair.
    pub assoc_sandwich: bool,
    /// Dimension of the conjugate-associative part; must be zero.
    pub conjassoc_dim: usize,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.assoc_parts_equal
            && self.center_commutes
            && self.assoc_sandwich
            && self.conjassoc_dim == 0
    }
}

/// Right-module analogue of the associative-part conditions: the nullspace
/// of R_jR_i − R_{e_ie_j} over i < j is {m : [m,p,q] = 0}.
pub fn right_assoc_part<T: Scalar>(ra: &RightAction<T>) -> Subspace<T> {
    let d = ra.d;
    if d == 0 {
        return Subspace::empty(0);
    }
    let mut rows = Vec::with_capacity(21 * d);
    for i in 1..=7usize {
        for j in (i + 1)..=7usize {
            let block = &(&ra.rs[j - 1] * &ra.rs[i - 1]) - &right_of_unit_product(ra, i, j);
            for r in 0..d {
                rows.push(block.row(r).to_vec());
            }
        }
    }
    nullspace(&Matrix::from_rows(rows).expect("condition rows are uniform"))
}

/// Verifies the structural lemmas on a bimodule: equality of the left and
/// right associative parts, commutation pm = mp and the sandwich identity
/// on associative vectors, and vanishing of the conjugate-associative part.
/// Fails with an input error if (am, ra) is not a bimodule at all.
pub fn verify_bimodule_lemmas<T: Scalar>(
    am: &AbstractModule<T>,
    ra: &RightAction<T>,
) -> Result<LemmaReport> {
    let check = check_bimodule(am, ra)?;
    if !check.passed() {
        return Err(Error::InvalidInput(format!(
            "not a bimodule: {} violated identities",
            check.violations.len()
        )));
    }
    let d = am.dim();
    let ls = am.generators();
    let (assoc_left, conjassoc_left) = if d == 0 {
        (Subspace::empty(0), Subspace::empty(0))
    } else {
        (
            nullspace(&assoc_conditions(ls, false)),
            nullspace(&assoc_conditions(ls, true)),
        )
    };
    let assoc_right = right_assoc_part(ra);
    let assoc_parts_equal = assoc_left == assoc_right;

    let mut center_commutes = true;
    let mut assoc_sandwich = true;
    for m in assoc_left.basis_rows() {
        for i in 0..7 {
            let lm = ls[i].matvec(&m);
            if ra.rs[i].matvec(&m) != lm {
                center_commutes = false;
            }
            for j in 0..7 {
                if ra.rs[j].matvec(&lm) != ls[i].matvec(&ra.rs[j].matvec(&m)) {
                    assoc_sandwich = false;
                }
            }
        }
    }

    Ok(LemmaReport {
        assoc_parts_equal,
        assoc_dim: assoc_left.dim(),
        center_commutes,
        assoc_sandwich,
        conjassoc_dim: conjassoc_left.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omodule::ModuleType;
    use crate::Rat;

    fn t(n: usize, k: usize) -> ModuleType {
        ModuleType::new(n, k).unwrap()
    }

    #[test]
    fn standard_bimodule_checks_out() {
        for n in 1..=3usize {
            let am = AbstractModule::<Rat>::standard(t(n, 0));
            let ra = standard_right_action::<Rat>(n);
            let report = check_bimodule(&am, &ra).unwrap();
            assert!(report.passed(), "violations: {:?}", report.violations);
        }
    }

    #[test]
    fn obar_with_right_multiplication_fails() {
        let am = AbstractModule::<Rat>::standard(t(0, 1));
        let ra = standard_right_action::<Rat>(1);
        let report = check_bimodule(&am, &ra).unwrap();
        assert!(!report.passed());
        // The right axioms hold for genuine right multiplication; the mixed
        // identities are what break.
        assert!(report
            .violations
            .iter()
            .all(|v| v.identity != BimoduleIdentity::RightAxiom));
    }

    #[test]
    fn left_matrices_are_not_a_right_action() {
        let am = AbstractModule::<Rat>::standard(t(1, 0));
        let ra = RightAction::new(am.generators().to_vec()).unwrap();
        let report = check_bimodule(&am, &ra).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let am = AbstractModule::<Rat>::standard(t(2, 0));
        let ra = standard_right_action::<Rat>(1);
        assert!(check_bimodule(&am, &ra).is_err());
    }

    #[test]
    fn lemmas_hold_on_standard_bimodules() {
        for n in 1..=2usize {
            let am = AbstractModule::<Rat>::standard(t(n, 0));
            let ra = standard_right_action::<Rat>(n);
            let report = verify_bimodule_lemmas(&am, &ra).unwrap();
            assert!(report.passed());
            assert_eq!(report.assoc_dim, n);
            assert_eq!(report.conjassoc_dim, 0);
        }
    }

    #[test]
    fn lemmas_reject_non_bimodules() {
        let am = AbstractModule::<Rat>::standard(t(0, 1));
        let ra = standard_right_action::<Rat>(1);
        assert!(verify_bimodule_lemmas(&am, &ra).is_err());
    }
}
