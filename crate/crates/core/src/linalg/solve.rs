use crate::error::{Error, Result};
use crate::linalg::rref::{Inserted, RrefBasis};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Solution set of a linear system a·x = b: either provably infeasible or a
/// particular solution plus the homogeneous nullspace.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSet<T> {
    Infeasible,
    Solutions {
        particular: Vec<T>,
        homogeneous: Subspace<T>,
    },
}

impl<T: Scalar> AffineSet<T> {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, AffineSet::Infeasible)
    }

    pub fn particular(&self) -> Option<&[T]> {
        match self {
            AffineSet::Infeasible => None,
            AffineSet::Solutions { particular, .. } => Some(particular),
        }
    }

    pub fn homogeneous(&self) -> Option<&Subspace<T>> {
        match self {
            AffineSet::Infeasible => None,
            AffineSet::Solutions { homogeneous, .. } => Some(homogeneous),
        }
    }

    /// Membership test: `x` solves the system iff `x - particular` lies in
    /// the homogeneous space.
    pub fn contains(&self, x: &[T]) -> bool {
        match self {
            AffineSet::Infeasible => false,
            AffineSet::Solutions {
                particular,
                homogeneous,
            } => {
                let diff: Vec<T> = x
                    .iter()
                    .zip(particular)
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect();
                homogeneous.contains(&diff)
            }
        }
    }
}

/// Several right-hand sides solved against one coefficient matrix.
#[derive(Clone, Debug)]
pub struct MultiAffineSolution<T> {
    /// Per right-hand side: a particular solution, or `None` if that system
    /// is inconsistent.
    pub particulars: Vec<Option<Vec<T>>>,
    /// Common homogeneous solution space (the nullspace of the matrix).
    pub nullspace: Subspace<T>,
}

/// Row-streaming core of the multi-rhs solver: each yielded row is the `n`
/// coefficients followed by `k` right-hand-side entries. Rows are folded
/// into the elimination one at a time, so systems too large to materialize
/// (the solver's Sylvester blocks) stay cheap.
pub fn solve_affine_multi_rows<T: Scalar>(
    n: usize,
    k: usize,
    rows: impl Iterator<Item = Vec<T>>,
) -> MultiAffineSolution<T> {
    let mut basis = RrefBasis::with_pivot_limit(n + k, n);
    let mut inconsistent = vec![false; k];
    for row in rows {
        assert_eq!(row.len(), n + k, "augmented row length");
        if let Inserted::Dependent(rem) = basis.insert(row) {
            // A dependent equation 0 = c certifies infeasibility for every
            // right-hand side with c ≠ 0.
            for (j, flag) in inconsistent.iter_mut().enumerate() {
                if !rem[n + j].is_zero() {
                    *flag = true;
                }
            }
        }
    }

    // Free variables set to zero give a particular solution per rhs.
    let mut particulars = Vec::with_capacity(k);
    for (j, &bad) in inconsistent.iter().enumerate() {
        if bad {
            particulars.push(None);
            continue;
        }
        let mut x = vec![T::zero(); n];
        for (row, &p) in basis.rows().iter().zip(basis.pivots()) {
            x[p] = row[n + j].clone();
        }
        particulars.push(Some(x));
    }

    let nullsp = nullspace_of_rref(n, basis.rows(), basis.pivots());
    MultiAffineSolution {
        particulars,
        nullspace: nullsp,
    }
}

/// Gauss–Jordan on the augmented system, with pivots restricted to the
/// coefficient columns. One elimination serves every right-hand side.
pub fn solve_affine_multi<T: Scalar>(
    a: &Matrix<T>,
    rhss: &[Vec<T>],
) -> Result<MultiAffineSolution<T>> {
    let (m, n) = (a.rows(), a.cols());
    let k = rhss.len();
    for b in rhss {
        if b.len() != m {
            return Err(Error::Dimension {
                context: "solve_affine",
                expected: m,
                got: b.len(),
            });
        }
    }
    let rows = (0..m).map(|r| {
        let mut row = Vec::with_capacity(n + k);
        row.extend_from_slice(a.row(r));
        for b in rhss {
            row.push(b[r].clone());
        }
        row
    });
    Ok(solve_affine_multi_rows(n, k, rows))
}

/// Full solution set of a·x = b.
pub fn solve_affine<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<AffineSet<T>> {
    let multi = solve_affine_multi(a, std::slice::from_ref(&b.to_vec()))?;
    Ok(match multi.particulars.into_iter().next().flatten() {
        None => AffineSet::Infeasible,
        Some(particular) => AffineSet::Solutions {
            particular,
            homogeneous: multi.nullspace,
        },
    })
}

/// Exact inverse via Gauss–Jordan on [M | I]; `None` for singular input.
pub fn invert<T: Scalar>(m: &Matrix<T>) -> Option<Matrix<T>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut basis = RrefBasis::with_pivot_limit(2 * n, n);
    for r in 0..n {
        let mut row = Vec::with_capacity(2 * n);
        row.extend_from_slice(m.row(r));
        for c in 0..n {
            row.push(if c == r { T::one() } else { T::zero() });
        }
        basis.insert(row);
    }
    if basis.rank() < n {
        return None;
    }
    // RREF([M | I]) = [I | M^-1]; rows are pivot-sorted, so the tails are
    // the inverse rows in order.
    let rows: Vec<Vec<T>> = basis.rows().iter().map(|r| r[n..].to_vec()).collect();
    Some(Matrix::from_rows(rows).expect("inverse rows are uniform"))
}

/// Canonical basis of {x : m·x = 0}.
pub fn nullspace<T: Scalar>(m: &Matrix<T>) -> Subspace<T> {
    let mut basis = RrefBasis::new(m.cols());
    for r in 0..m.rows() {
        basis.insert(m.row(r).to_vec());
    }
    nullspace_of_rref(m.cols(), basis.rows(), basis.pivots())
}

/// Nullspace read off an RREF: one basis vector per free column. The rows
/// may carry a right-hand-side tail beyond `n`, which is ignored.
fn nullspace_of_rref<T: Scalar>(n: usize, rows: &[Vec<T>], pivots: &[usize]) -> Subspace<T> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut out = RrefBasis::new(n);
    for f in 0..n {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![T::zero(); n];
        v[f] = T::one();
        for (row, &p) in rows.iter().zip(pivots) {
            if !row[f].is_zero() {
                v[p] = -row[f].clone();
            }
        }
        out.insert(v);
    }
    Subspace::from_rref(out)
}
