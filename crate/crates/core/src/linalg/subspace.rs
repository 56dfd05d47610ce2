use num::traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rref::RrefBasis;
use crate::linalg::{nullspace, Matrix};
use crate::scalar::Scalar;

/// Linear subspace in canonical form: the basis matrix is the RREF of any
/// spanning set, one basis vector per row, no zero rows. Two subspaces are
/// equal iff they are equal field by field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Matrix<T>,
}

impl<T: Scalar> Subspace<T> {
    pub fn empty(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    pub(crate) fn from_rref(basis: RrefBasis<T>) -> Self {
        let ambient_dim = basis.ambient();
        let rows = basis.into_rows();
        Subspace {
            ambient_dim,
            basis: Matrix::from_rows(rows).expect("RREF rows are uniform"),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<T>> {
        self.basis.row_vecs()
    }

    /// Rebuilds the incremental form, e.g. to run many membership tests.
    pub fn to_rref_basis(&self) -> RrefBasis<T> {
        let mut b = RrefBasis::new(self.ambient_dim);
        for r in 0..self.basis.rows() {
            b.insert(self.basis.row(r).to_vec());
        }
        b
    }

    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        for r in 0..self.basis.rows() {
            let row = self.basis.row(r);
            let p = match row.iter().position(|x| !x.is_zero()) {
                Some(p) => p,
                None => continue,
            };
            if w[p].is_zero() {
                continue;
            }
            let coef = std::mem::replace(&mut w[p], T::zero());
            for (j, x) in row.iter().enumerate().skip(p + 1) {
                if !x.is_zero() {
                    w[j] = w[j].clone() - coef.clone() * x.clone();
                }
            }
        }
        w.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace<T>) -> bool {
        other
            .basis_rows()
            .iter()
            .all(|row| self.contains(row))
    }
}

/// Canonical span of a set of vectors. All vectors must share one length;
/// the span of no vectors is the empty subspace of the zero-dimensional
/// space.
pub fn span<T: Scalar>(vectors: &[Vec<T>]) -> Result<Subspace<T>> {
    let ambient = vectors.first().map_or(0, Vec::len);
    let mut basis = RrefBasis::new(ambient);
    for v in vectors {
        if v.len() != ambient {
            return Err(Error::Dimension {
                context: "span",
                expected: ambient,
                got: v.len(),
            });
        }
        basis.insert(v.clone());
    }
    Ok(Subspace::from_rref(basis))
}

/// Canonical intersection of two subspaces of one ambient space.
///
/// Solves B1ᵀa = B2ᵀb: nullspace vectors of [B1ᵀ | −B2ᵀ] give the
/// coefficient pairs, and the a-part mapped through B1 spans s1 ∩ s2.
pub fn intersect<T: Scalar>(s1: &Subspace<T>, s2: &Subspace<T>) -> Result<Subspace<T>> {
    if s1.ambient_dim() != s2.ambient_dim() {
        return Err(Error::Dimension {
            context: "intersect",
            expected: s1.ambient_dim(),
            got: s2.ambient_dim(),
        });
    }
    if s1.is_full() {
        return Ok(s2.clone());
    }
    if s2.is_full() {
        return Ok(s1.clone());
    }
    if s1.is_empty() || s2.is_empty() {
        return Ok(Subspace::empty(s1.ambient_dim()));
    }
    let (d1, d2, n) = (s1.dim(), s2.dim(), s1.ambient_dim());
    let stacked = Matrix::from_fn(n, d1 + d2, |r, c| {
        if c < d1 {
            s1.basis()[(c, r)].clone()
        } else {
            -s2.basis()[(c - d1, r)].clone()
        }
    });
    let kernel = nullspace(&stacked);
    let mut basis = RrefBasis::new(n);
    for coeffs in kernel.basis_rows() {
        let mut v = vec![T::zero(); n];
        for (i, a) in coeffs[..d1].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, x) in s1.basis().row(i).iter().enumerate() {
                if !x.is_zero() {
                    v[j] = v[j].clone() + a.clone() * x.clone();
                }
            }
        }
        basis.insert(v);
    }
    Ok(Subspace::from_rref(basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rat;

    fn vecs(rows: Vec<Vec<i64>>) -> Vec<Vec<Rat>> {
        rows.into_iter()
            .map(|r| r.into_iter().map(|x| rat(x, 1)).collect())
            .collect()
    }

    #[test]
    fn span_examples() {
        assert_eq!(span(&vecs(vec![vec![1, 0], vec![0, 1]])).unwrap().dim(), 2);
        assert_eq!(span(&vecs(vec![vec![1, 2], vec![2, 4]])).unwrap().dim(), 1);
        let empty: Vec<Vec<Rat>> = vec![];
        assert_eq!(span(&empty).unwrap().dim(), 0);
    }

    #[test]
    fn span_rejects_mixed_lengths() {
        let bad = vec![vec![rat(1, 1)], vec![rat(1, 1), rat(2, 1)]];
        assert!(span(&bad).is_err());
    }

    #[test]
    fn span_is_canonical() {
        let a = span(&vecs(vec![vec![2, 4], vec![1, 3]])).unwrap();
        let b = span(&vecs(vec![vec![1, 3], vec![0, 1], vec![3, 7]])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn intersect_examples() {
        let s = span(&vecs(vec![vec![1, 0, 1]])).unwrap();
        assert_eq!(intersect(&s, &s).unwrap(), s);
        let full = Subspace::<Rat>::full(3);
        assert_eq!(intersect(&full, &s).unwrap(), s);
        let x = span(&vecs(vec![vec![1, 0]])).unwrap();
        let y = span(&vecs(vec![vec![0, 1]])).unwrap();
        assert_eq!(intersect(&x, &y).unwrap().dim(), 0);
    }

    #[test]
    fn intersect_rejects_mixed_ambient() {
        let x = span(&vecs(vec![vec![1, 0]])).unwrap();
        let y = span(&vecs(vec![vec![1, 0, 0]])).unwrap();
        assert!(intersect(&x, &y).is_err());
    }

    #[test]
    fn plane_intersection() {
        // Two planes in R^3 meeting in a line.
        let p1 = span(&vecs(vec![vec![1, 0, 0], vec![0, 1, 0]])).unwrap();
        let p2 = span(&vecs(vec![vec![0, 1, 0], vec![0, 0, 1]])).unwrap();
        let line = intersect(&p1, &p2).unwrap();
        assert_eq!(line.dim(), 1);
        assert!(line.contains(&[rat(0, 1), rat(5, 1), rat(0, 1)]));
    }
}
