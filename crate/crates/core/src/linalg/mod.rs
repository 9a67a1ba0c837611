//! Exact linear algebra over ℚ(i): ranks, kernels, images, intersections,
//! quotients and solves.

mod elim;
mod matrix;
mod subspace;

pub use elim::{
    bareiss_rank, dense_rref, determinant, inverse, kernel_basis, rank, rref, solve, solve_with_order,
    sparse_echelon, Echelon, DENSE_LIMIT,
};
pub use matrix::{is_zero_vector, zero_vector, ExactMatrix, Vector};
pub use subspace::{image, image_dim, intersect, kernel, preimage, quotient_dim, Subspace};
