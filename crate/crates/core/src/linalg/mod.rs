//! Dense exact linear algebra: matrices, canonical subspaces, affine solving,
//! and the closure computations used by the module and bimodule layers.
//!
//! All decision procedures (rank, membership, feasibility) rely on exact
//! scalar equality; see [`crate::scalar::Scalar`].

mod closure;
mod matrix;
mod modp;
mod rref;
mod solve;
mod subspace;

pub use closure::{algebra_closure, operator_closure};
pub use modp::{certify_full_operator_closure, rank_lower_bound};
pub use matrix::Matrix;
pub use rref::{reduce, RrefBasis};
pub use solve::{
    invert, nullspace, solve_affine, solve_affine_multi, solve_affine_multi_rows, AffineSet,
    MultiAffineSolution,
};
pub use subspace::{intersect, span, Subspace};
