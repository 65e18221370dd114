//! The final birational model for seven points in the plane, realized as
//! ℙ¹⁴ = ℙ(V) where V is the 15-dimensional space of triples of cubics
//! (f, g, h) with x·f + y·g + z·h = 0.  This crate provides the explicit
//! basis e₀, …, e₁₄ of V, the induced SL₃ action, the weight table of the
//! diagonal subgroups λ_r, the coordinate support test for instability,
//! the three distinguished unstable/non-stable families, and the closed
//! strictly semistable orbits together with their stabilizers.

mod families;
mod orbits;
mod section;
mod weights;

pub use families::{family_x1, family_x2, family_x3};
pub use orbits::{
    ideal_of_section, involution_s, involution_t, lambda0_matrix, minimal_orbit, minimal_section,
    orbit_image, stabilizer_check, MinimalOrbit, MinimalOrbitParam, SectionIdeal,
};
pub use section::{act, basis, coordinates, CoordVector, Section};
pub use weights::{
    lambda_r_matrix, mu14, mu14_max, unstable_pattern, weight_slopes, weight_table, PatternVerdict,
};

use exact_core::CoreError;
use graded_ideal::IdealError;

/// Errors raised by the final-model layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FinalModelError {
    #[error("the matrix is singular and does not act on the model")]
    SingularMatrix,
    #[error("the triple (f, g, h) violates x·f + y·g + z·h = 0")]
    EulerViolation,
    #[error("all components must be cubics; found degree {0}")]
    WrongDegree(u32),
    #[error("the zero section has no projective class")]
    ZeroSection,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
