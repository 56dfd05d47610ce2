use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::rref::{Inserted, RrefBasis};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

fn check_ops_square<T: Scalar>(ops: &[Matrix<T>], ambient: usize, context: &'static str) -> Result<()> {
    for op in ops {
        if !op.is_square() || op.rows() != ambient {
            return Err(Error::Dimension {
                context,
                expected: ambient,
                got: op.rows().max(op.cols()),
            });
        }
    }
    Ok(())
}

/// Smallest subspace containing `seed` and closed under every operator.
///
/// Worklist closure: every newly independent vector is pushed and its images
/// under all operators are offered to the incremental RREF basis. Each
/// insertion raises the rank, so the loop terminates within `ambient`
/// rounds; reaching full rank short-circuits, since the whole space is
/// trivially closed.
pub fn operator_closure<T: Scalar>(
    seed: &[Vec<T>],
    ops: &[Matrix<T>],
) -> Result<Subspace<T>> {
    let ambient = seed
        .first()
        .map(Vec::len)
        .or_else(|| ops.first().map(Matrix::rows))
        .unwrap_or(0);
    for v in seed {
        if v.len() != ambient {
            return Err(Error::Dimension {
                context: "operator_closure seed",
                expected: ambient,
                got: v.len(),
            });
        }
    }
    check_ops_square(ops, ambient, "operator_closure ops")?;

    let mut basis = RrefBasis::new(ambient);
    let mut queue: VecDeque<Vec<T>> = VecDeque::new();
    for v in seed {
        if let Inserted::Added(_) = basis.insert(v.clone()) {
            queue.push_back(v.clone());
        }
    }
    let mut inserted = basis.rank();
    while let Some(v) = queue.pop_front() {
        for op in ops {
            if basis.is_full() {
                return Ok(Subspace::full(ambient));
            }
            let image = op.matvec(&v);
            if let Inserted::Added(_) = basis.insert(image.clone()) {
                inserted += 1;
                assert!(inserted <= ambient, "closure exceeded ambient dimension");
                queue.push_back(image);
            }
        }
    }
    if basis.is_full() {
        return Ok(Subspace::full(ambient));
    }
    Ok(Subspace::from_rref(basis))
}

/// Dimension of the unital matrix algebra generated by `gens`: the span of
/// the identity is closed under left multiplication by every generator until
/// the rank stabilizes. Every word in the generators is reached this way.
pub fn algebra_closure<T: Scalar>(gens: &[Matrix<T>]) -> Result<usize> {
    let n = match gens.first() {
        Some(g) => g.rows(),
        None => return Ok(1),
    };
    check_ops_square(gens, n, "algebra_closure gens")?;

    let ambient = n * n;
    let mut basis = RrefBasis::new(ambient);
    let identity = Matrix::<T>::identity(n);
    basis.insert(identity.to_vec());
    let mut queue: VecDeque<Matrix<T>> = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        if basis.is_full() {
            break;
        }
        for g in gens {
            let product = g * &w;
            if let Inserted::Added(_) = basis.insert(product.to_vec()) {
                queue.push_back(product);
            }
        }
    }
    Ok(basis.rank())
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

    fn v(xs: Vec<i64>) -> Vec<Rat> {
        xs.into_iter().map(|x| rat(x, 1)).collect()
    }

    #[test]
    fn swap_generates_plane() {
        let swap = m(vec![vec![0, 1], vec![1, 0]]);
        let s = operator_closure(&[v(vec![1, 0])], &[swap]).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn identity_op_is_inert() {
        let s = operator_closure(&[v(vec![1, 0])], &[Matrix::<Rat>::identity(2)]).unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn closure_invariant_under_permutation() {
        let a = m(vec![vec![0, -1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        let b = m(vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]);
        let seeds = [v(vec![1, 2, 0]), v(vec![0, 0, 3])];
        let s1 = operator_closure(&seeds, &[a.clone(), b.clone()]).unwrap();
        let seeds_rev = [seeds[1].clone(), seeds[0].clone()];
        let s2 = operator_closure(&seeds_rev, &[b, a]).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn closure_rejects_mismatched_ops() {
        let op = m(vec![vec![1, 0], vec![0, 1]]);
        assert!(operator_closure(&[v(vec![1, 0, 0])], &[op]).is_err());
    }

    #[test]
    fn algebra_of_identity_is_scalars() {
        assert_eq!(algebra_closure(&[Matrix::<Rat>::identity(3)]).unwrap(), 1);
        assert_eq!(algebra_closure::<Rat>(&[]).unwrap(), 1);
    }

    #[test]
    fn diagonal_generator_gives_two_dims() {
        let d = m(vec![vec![1, 0], vec![0, -1]]);
        assert_eq!(algebra_closure(&[d]).unwrap(), 2);
    }

    #[test]
    fn block_diag_bound() {
        // Two 2x2 blocks: the closure dimension can never exceed 2 * 4.
        let b1 = m(vec![vec![0, 1], vec![-1, 0]]);
        let b2 = m(vec![vec![1, 1], vec![0, 1]]);
        let g1 = Matrix::block_diag(&[&b1, &b2]);
        let g2 = Matrix::block_diag(&[&b2, &b1]);
        let dim = algebra_closure(&[g1, g2]).unwrap();
        assert!(dim <= 8);
    }
}
