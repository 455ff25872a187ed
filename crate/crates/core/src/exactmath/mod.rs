//! Exact rational arithmetic, projective linear algebra, and sparse
//! multivariate polynomials over the rationals.
//!
//! All values are immutable after construction and every operation is pure.
//! Equality of projective objects is defined through canonical forms only;
//! there are no epsilon comparisons anywhere in this crate.

mod linalg;
mod multipoly;
mod projpoint;
mod rational;
mod subspace;

pub use multipoly::{jacobian_rank, MultiPoly};
pub use projpoint::{canonical_coords, ProjPoint};
pub use rational::Rational;
pub use subspace::LinearSubspace;

pub(crate) use linalg::{kernel_basis, rank, rref};
pub(crate) use multipoly::{sum_of_cubes, sum_of_vars};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("substitution expects {expected} image polynomials, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("substitution image is not homogeneous linear")]
    NonLinearImage,
    #[error("projective point must have a nonzero coordinate")]
    ZeroVector,
    #[error("point does not satisfy the system equations")]
    PointNotOnVariety,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("denominator must be nonzero")]
    ZeroDenominator,
}
