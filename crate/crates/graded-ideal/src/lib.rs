//! Homogeneous ideals in `x, y, z` evaluated degree-by-degree.
//!
//! An ideal here is a recipe for producing graded pieces: either a generator
//! list, or a degree-wise combination (intersection, saturation, colon) of
//! other ideals.  Graded pieces are exact row-echelon bases over the
//! canonical monomial order, cached with fill-once semantics so concurrent
//! readers are safe.
//!
//! On top of the ideals sit [`PointScheme`] (a saturated ideal with a known
//! finite length and optional support hints) and [`Cycle`] (a weighted point
//! configuration), together with the configuration constructors used by the
//! stability layers.

mod catalog;
mod constructors;
mod ideal;
mod io;
mod sampler;
mod scheme;

pub use catalog::{catalog_witness, WitnessName};
pub use constructors::{collinear_points, monomial_ideal, point_ideal, reduced_points};
pub use ideal::{binom2, HomogeneousIdeal};
pub use io::{parse_ideal_file, render_ideal_file, IdealFile};
pub use sampler::Sampler;
pub use scheme::{Cycle, PointPlace, PointScheme, SupportHint};

/// Errors raised by the graded layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("Hilbert function does not stabilize at a constant (scanned degrees up to {0}); the vanishing locus is not zero-dimensional")]
    NotZeroDimensional(u32),
    #[error("stabilized colength {found} differs from the expected length {expected}")]
    WrongColength { expected: u32, found: u32 },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("support hints are required for this query but absent")]
    HintsMissing,
    #[error("core error: {0}")]
    Core(#[from] exact_core::CoreError),
    #[error("ideal file format error: {0}")]
    FileFormat(String),
}
