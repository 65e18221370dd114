//! Flat limits of zero-dimensional subschemes under diagonal one-parameter
//! subgroups, and the corner-cut combinatorics that governs limits of
//! generic configurations.

mod corner;
mod initial;

pub use corner::{
    affine_weight_of, corner_cut, corner_cut_ideal, generic_limit, off_wall, AffineWeight,
    CornerCut, LimitSide,
};
pub use initial::{flat_limit, initial_form, initial_subspace};

use graded_ideal::IdealError;

/// Errors raised by the degeneration layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DegenerationError {
    #[error("weight lies on a wall for length {n}: {reason}")]
    WallWeight { n: u32, reason: String },
    #[error("length {0} is not triangular")]
    NotTriangular(u32),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}
