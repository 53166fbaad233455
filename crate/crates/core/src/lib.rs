//! Exact-arithmetic quantum logic over finite-dimensional Hilbert spaces.
//!
//! Propositions are subspaces of `C^n` with Gaussian-rational coordinates.
//! Contexts generate Boolean blocks; blocks may be pasted into a single
//! lattice or kept apart, and the truth engine assigns factual and
//! counter-factual values accordingly. [`epr`] builds the two-particle spin
//! scenario on top of these pieces.

pub mod epr;
pub mod error;
pub mod linalg;
pub mod logic;
pub mod subspace;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, GaussianRational, Vector};
pub use subspace::{Order, ProjectionOp, Subspace};
