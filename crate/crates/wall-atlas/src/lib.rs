//! Atlas of GIT walls for configurations of points in the plane: exact
//! closed-form wall positions for the three witness families (a fat point
//! plus residual points, collinear points, and points on a conic), builders
//! for the witness ideals, end-to-end verification that each witness is
//! strictly semistable exactly at its wall, and the complete stability
//! classification for five points.

mod forms;
mod n5;
mod verify;
mod witness;

pub use forms::{
    largest_git_wall, m_collinear, m_conic, m_curvilinear, mu_collinear_pair, mu_conic_at_wall,
    mu_conic_pair, mu_curvilinear_at_wall, mu_curvilinear_pair, mu_largest_witness,
    triangular_decompose, CoefficientCase, LargestWall,
};
pub use n5::{n5_classify, verify_n5_certificate, Chamber, N5Certificate, N5Reason, N5Verdict};
pub use verify::{
    default_probe_offsets, verify_special_triple_point_7, verify_wall, ProbeCheck,
    SpecialTripleReport, WallReport,
};
pub use witness::{wall_table, witness, witness_largest, witness_with_case, WallFamily, WallRecord};

/// Errors raised by the wall atlas.
#[derive(Debug, thiserror::Error)]
pub enum AtlasError {
    #[error("parameters outside the family's domain: {0}")]
    Domain(String),
    #[error("length {0} is divisible by three; the top wall is undefined there")]
    DivisibleByThree(u32),
    #[error("expected a subscheme of length {expected}, found {found}")]
    WrongLength { expected: u32, found: u32 },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Ideal(#[from] graded_ideal::IdealError),
    #[error(transparent)]
    Git(#[from] hilbert_git::GitError),
}
