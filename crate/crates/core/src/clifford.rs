//! The matrix representation of octonion left multiplication.
//!
//! An octonion p acts on 𝕆 by L_p and on the conjugate module 𝕆̄ by L_p̄;
//! the pair of 8×8 matrices realizes p inside the algebra generated by the
//! seven anticommuting operators L_{e₁}…L_{e₇}, which is a direct sum of two
//! full 8×8 matrix algebras. The pseudoscalar ω = L₁⋯L₇ is central, squares
//! to the identity, and its two eigenprojections separate the summands.

use crate::error::{Error, Result};
use crate::linalg::{algebra_closure, Matrix};
use crate::octonion::Octonion;
use crate::scalar::Scalar;

/// The images of one octonion on 𝕆 and on 𝕆̄.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordPair<T> {
    pub on_o: Matrix<T>,
    pub on_obar: Matrix<T>,
}

impl<T: Scalar> CliffordPair<T> {
    /// 16×16 block-diagonal embedding, 𝕆 block first.
    pub fn block_diag(&self) -> Matrix<T> {
        Matrix::block_diag(&[&self.on_o, &self.on_obar])
    }
}

/// The representation p ↦ (L_p on 𝕆, L_p̄ on 𝕆̄). The 𝕆̄ action of p is
/// left multiplication by p̄, so both blocks are left-multiplication
/// matrices.
pub fn rep_pair<T: Scalar>(p: &Octonion<T>) -> CliffordPair<T> {
    CliffordPair {
        on_o: p.left_mult_matrix(),
        on_obar: p.conj().left_mult_matrix(),
    }
}

/// The seven images of e₁…e₇ on one module, here the standard ones.
pub fn unit_reps_on_o<T: Scalar>() -> Vec<Matrix<T>> {
    (1..=7)
        .map(|i| Octonion::<T>::unit(i).left_mult_matrix())
        .collect()
}

pub fn unit_reps_on_obar<T: Scalar>() -> Vec<Matrix<T>> {
    (1..=7)
        .map(|i| Octonion::<T>::unit(i).conj().left_mult_matrix())
        .collect()
}

/// Outcome of checking L_iL_j + L_jL_i = −2δ_ijI over all 1 ≤ i ≤ j ≤ 7.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordReport {
    /// Violated (i, j) pairs, 1-based, i ≤ j.
    pub violations: Vec<(usize, usize)>,
}

impl CliffordReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the anticommutation relations for seven square matrices of equal
/// size; the report lists every violated pair.
pub fn verify_clifford_relations<T: Scalar>(ls: &[Matrix<T>]) -> Result<CliffordReport> {
    if ls.len() != 7 {
        return Err(Error::Dimension {
            context: "verify_clifford_relations",
            expected: 7,
            got: ls.len(),
        });
    }
    let d = ls[0].rows();
    for l in ls {
        if !l.is_square() || l.rows() != d {
            return Err(Error::Dimension {
                context: "verify_clifford_relations",
                expected: d,
                got: l.rows().max(l.cols()),
            });
        }
    }
    let minus_two_i = Matrix::<T>::identity(d).scale(&-(T::one() + T::one()));
    let mut violations = Vec::new();
    for i in 0..7 {
        for j in i..7 {
            let anti = &(&ls[i] * &ls[j]) + &(&ls[j] * &ls[i]);
            let expected = if i == j {
                minus_two_i.clone()
            } else {
                Matrix::zeros(d, d)
            };
            if anti != expected {
                violations.push((i + 1, j + 1));
            }
        }
    }
    Ok(CliffordReport { violations })
}

/// The pseudoscalar of a family of action matrices and its eigenprojections.
#[derive(Clone, Debug, PartialEq)]
pub struct PseudoscalarData<T> {
    /// ω = L₁L₂⋯L₇ in index order.
    pub omega: Matrix<T>,
    /// `Some(±1)` when ω is the scalar matrix ±I on this module.
    pub scalar_sign: Option<i8>,
    /// (I + ω)/2.
    pub p_plus: Matrix<T>,
    /// (I − ω)/2.
    pub p_minus: Matrix<T>,
}

/// Computes ω = L₁⋯L₇ and the projectors (I ± ω)/2, verifying that ω is an
/// involution commuting with every generator. Violations mean the input is
/// not a valid family and are reported as input errors.
pub fn pseudoscalar<T: Scalar>(ls: &[Matrix<T>]) -> Result<PseudoscalarData<T>> {
    let report = verify_clifford_relations(ls)?;
    if !report.passed() {
        return Err(Error::InvalidInput(format!(
            "Clifford relations violated at pairs {:?}",
            report.violations
        )));
    }
    let d = ls[0].rows();
    let mut omega = ls[0].clone();
    for l in &ls[1..] {
        omega = &omega * l;
    }
    let identity = Matrix::<T>::identity(d);
    if &omega * &omega != identity {
        return Err(Error::InvalidInput(
            "pseudoscalar does not square to the identity".into(),
        ));
    }
    for (i, l) in ls.iter().enumerate() {
        if &omega * l != l * &omega {
            return Err(Error::InvalidInput(format!(
                "pseudoscalar does not commute with generator {}",
                i + 1
            )));
        }
    }
    let half = T::one() / (T::one() + T::one());
    let p_plus = (&identity + &omega).scale(&half);
    let p_minus = (&identity - &omega).scale(&half);
    let scalar_sign = if omega == identity {
        Some(1)
    } else if omega == -&identity {
        Some(-1)
    } else {
        None
    };
    Ok(PseudoscalarData {
        omega,
        scalar_sign,
        p_plus,
        p_minus,
    })
}

/// Dimension of the algebra generated by the seven block-diagonal pairs
/// (L_{e_i} on 𝕆, L_{e_i} on 𝕆̄); two full 8×8 matrix algebras give 128.
pub fn clifford_dimension<T: Scalar>() -> usize {
    let gens: Vec<Matrix<T>> = (1..=7)
        .map(|i| rep_pair(&Octonion::<T>::unit(i)).block_diag())
        .collect();
    algebra_closure(&gens).expect("generators are uniform 16x16 matrices")
}
