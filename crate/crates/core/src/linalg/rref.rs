use num::traits::Zero;

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Incrementally maintained reduced row-echelon basis.
///
/// Rows are kept fully reduced (unit pivots, zeros above and below every
/// pivot) and ordered by pivot column, so the row set is the canonical RREF
/// of everything inserted so far. `pivot_limit` restricts pivot selection to
/// a column prefix, which is how augmented systems carry right-hand sides
/// without ever pivoting on them.
#[derive(Clone, Debug)]
pub struct RrefBasis<T> {
    ambient: usize,
    pivot_limit: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

/// Result of feeding one vector to [`RrefBasis::insert`].
pub enum Inserted<T> {
    /// Rank grew; the new pivot column is reported.
    Added(usize),
    /// The vector was dependent; the fully reduced remainder is returned.
    /// It is zero on the pivot-eligible prefix but may have a nonzero tail.
    Dependent(Vec<T>),
}

impl<T: Scalar> RrefBasis<T> {
    pub fn new(ambient: usize) -> Self {
        Self::with_pivot_limit(ambient, ambient)
    }

    pub fn with_pivot_limit(ambient: usize, pivot_limit: usize) -> Self {
        assert!(pivot_limit <= ambient);
        RrefBasis {
            ambient,
            pivot_limit,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.pivot_limit
    }

    /// Subtracts the projection of `v` onto every basis row, in place.
    pub fn reduce_in_place(&self, v: &mut [T]) {
        assert_eq!(v.len(), self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let coef = std::mem::replace(&mut v[p], T::zero());
            // row[p] == 1 and row is zero left of p.
            for (j, x) in row.iter().enumerate().skip(p + 1) {
                if x.is_zero() {
                    continue;
                }
                let delta = coef.clone() * x.clone();
                v[j] = v[j].clone() - delta;
            }
        }
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Reduces `v` against the basis and adjoins it if independent on the
    /// pivot-eligible prefix, keeping the basis in canonical RREF.
    pub fn insert(&mut self, mut v: Vec<T>) -> Inserted<T> {
        self.reduce_in_place(&mut v);
        let pivot = match v[..self.pivot_limit].iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return Inserted::Dependent(v),
        };
        // Normalize to a unit pivot.
        let lead = std::mem::replace(&mut v[pivot], T::one());
        for x in v[pivot + 1..].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() / lead.clone();
            }
        }
        // Clear the new pivot column from every existing row.
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let coef = std::mem::replace(&mut row[pivot], T::zero());
            for (j, x) in v.iter().enumerate().skip(pivot + 1) {
                if x.is_zero() {
                    continue;
                }
                let delta = coef.clone() * x.clone();
                row[j] = row[j].clone() - delta;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        Inserted::Added(pivot)
    }

    /// Convenience wrapper that only reports whether the rank grew.
    pub fn insert_grows(&mut self, v: Vec<T>) -> bool {
        matches!(self.insert(v), Inserted::Added(_))
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }
}

/// Reduced row-echelon form of `m` together with its rank.
///
/// The output has the same shape as `m`, with the zero rows collected at the
/// bottom; it is the unique RREF, so it is canonical for equality tests.
pub fn reduce<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, usize) {
    let mut basis = RrefBasis::new(m.cols());
    for r in 0..m.rows() {
        basis.insert(m.row(r).to_vec());
    }
    let rank = basis.rank();
    let mut rows = basis.into_rows();
    rows.resize(m.rows(), vec![T::zero(); m.cols()]);
    (
        Matrix::from_rows(rows).expect("rows are uniform by construction"),
        rank,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rat;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| rat(x, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_is_fixed() {
        let i = Matrix::<Rat>::identity(2);
        let (rref, rank) = reduce(&i);
        assert_eq!(rref, i);
        assert_eq!(rank, 2);
    }

    #[test]
    fn dependent_rows_drop_rank() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        let (rref, rank) = reduce(&a);
        assert_eq!(rank, 1);
        assert_eq!(rref, m(vec![vec![1, 2], vec![0, 0]]));
    }

    #[test]
    fn zero_matrix() {
        let z = Matrix::<Rat>::zeros(3, 3);
        let (rref, rank) = reduce(&z);
        assert_eq!(rank, 0);
        assert_eq!(rref, z);
    }

    #[test]
    fn reduce_is_idempotent() {
        let a = m(vec![vec![2, 4, 6], vec![1, 3, 5], vec![0, 1, 2]]);
        let (r1, k1) = reduce(&a);
        let (r2, k2) = reduce(&r1);
        assert_eq!(r1, r2);
        assert_eq!(k1, k2);
    }

    #[test]
    fn insert_reports_dependence() {
        let mut b = RrefBasis::<Rat>::new(2);
        assert!(b.insert_grows(vec![rat(1, 1), rat(2, 1)]));
        assert!(!b.insert_grows(vec![rat(2, 1), rat(4, 1)]));
        assert!(b.contains(&[rat(-3, 1), rat(-6, 1)]));
        assert!(!b.contains(&[rat(1, 1), rat(0, 1)]));
    }

    #[test]
    fn pivot_limit_leaves_tail() {
        let mut b = RrefBasis::<Rat>::with_pivot_limit(3, 2);
        b.insert(vec![rat(1, 1), rat(0, 1), rat(5, 1)]);
        // Dependent on the prefix, nonzero tail survives reduction.
        match b.insert(vec![rat(2, 1), rat(0, 1), rat(11, 1)]) {
            Inserted::Dependent(rem) => {
                assert_eq!(rem, vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
            }
            Inserted::Added(_) => panic!("tail column must not host a pivot"),
        }
    }
}
