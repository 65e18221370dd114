//! Exact arithmetic foundations for stability computations on the projective plane.
//!
//! Everything downstream works with homogeneous polynomials in the three
//! variables `x, y, z` over the rationals, and with exact linear algebra on
//! their coefficient vectors.  No floating point appears anywhere: all
//! coefficients are arbitrary-precision rationals and all comparisons are
//! exact.
//!
//! # Contents
//! - [`Rational`]: arbitrary-precision rational scalar (re-export).
//! - [`Monomial`]: exponent triple for `x^i y^j z^k` with a deterministic
//!   graded-lex order (`x > y > z`).
//! - [`HomogeneousPolynomial`]: sparse polynomial of a fixed degree, with a
//!   text parser and printer.
//! - [`RationalMatrix`]: dense rational matrix with exact reduced row-echelon
//!   form.
//! - [`OneParamSubgroup`]: diagonal weight triple `(a, b, c)` with
//!   `a + b + c = 0`, shared by the degeneration and stability layers.

mod matrix;
mod monomial;
mod one_param;
mod parse;
mod poly;

pub use matrix::RationalMatrix;
pub use monomial::Monomial;
pub use one_param::OneParamSubgroup;
pub use parse::{parse_polynomial, ParseError};
pub use poly::HomogeneousPolynomial;

/// Exact rational scalar used throughout the workspace.
pub type Rational = num_rational::BigRational;

/// Convenience constructor: the rational `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Convenience constructor: the rational `n / d` (exact, `d != 0`).
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Errors raised by the core layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("polynomial parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("input mixes degrees {0:?}; homogeneous polynomial required")]
    Inhomogeneous(Vec<u32>),
    #[error("matrix is singular")]
    SingularMatrix,
}
