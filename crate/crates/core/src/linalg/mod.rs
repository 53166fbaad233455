//! Exact linear algebra over the Gaussian rationals.

mod matrix;
mod scalar;

pub use matrix::{
    format_vec, inner, is_zero_vec, kron_vec, rref_rows, Echelon, ExactMatrix, Vector,
};
pub use scalar::{gr_arith, ArithOp, GaussianRational};
