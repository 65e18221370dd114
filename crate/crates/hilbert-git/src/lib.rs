//! Hilbert points of zero-dimensional plane subschemes and their
//! Hilbert-Mumford stability data: state polytopes, the index μ_m(Z, λ),
//! the root m₀ of μ as a function of the linearization, destabilization
//! scans over the diagonal torus and over explicit shear-conjugated tori,
//! Chow stability of cycles, and the plane-curve instability criterion.

mod chow;
mod mu;
mod state;

pub use chow::{chow_stability, curve_criterion, ChowVerdict, ChowWitness, CurveWitness};
pub use mu::{
    check_shear_tori, destabilize_diagonal, destabilize_torus, m_zero, mu, mu_conjugated,
    verify_certificate, Certificate, DiagonalScan, Linearization, MZero, MuOutcome, ShearFamily,
};
pub use state::{
    hilbert_point_defined, mu_brute_force, mu_integer, state_polytope, StatePolytope,
};

/// Errors raised by the stability layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GitError {
    #[error("the degree-{degree} Hilbert point of a length-{length} subscheme is not defined")]
    HilbertPointUndefined { length: u32, degree: u32 },
    #[error(transparent)]
    Ideal(#[from] graded_ideal::IdealError),
    #[error(transparent)]
    Core(#[from] exact_core::CoreError),
}
