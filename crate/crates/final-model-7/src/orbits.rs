//! Ideals generated by sections, the closed strictly semistable orbits
//! s_w = e₄ + e₈ + w·e₉ (and s_∞ = e₄ + e₉), and their stabilizers inside
//! the diagonal torus together with the two antidiagonal involutions.

use exact_core::{rat, HomogeneousPolynomial, Rational, RationalMatrix};
use graded_ideal::{catalog_witness, HomogeneousIdeal, IdealError, PointScheme, WitnessName};
use num_traits::{One, Zero};

use crate::section::{act, coordinates, CoordVector, Section};
use crate::FinalModelError;

/// Parameter of a closed strictly semistable orbit: w ∈ ℚ ∪ {∞}.  The
/// values 0, −1, and ∞ are flagged: their sections generate ideals with a
/// one-dimensional component instead of seven points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalOrbitParam {
    Finite(Rational),
    Infinity,
}

impl MinimalOrbitParam {
    /// Whether the section of this parameter cuts out seven points.
    pub fn is_ideal_point(&self) -> bool {
        match self {
            MinimalOrbitParam::Finite(w) => !w.is_zero() && *w != -Rational::one(),
            MinimalOrbitParam::Infinity => false,
        }
    }
}

/// The coordinate vector s_w = e₄ + e₈ + w·e₉, or s_∞ = e₄ + e₉.
pub fn minimal_section(param: &MinimalOrbitParam) -> CoordVector {
    let entries = match param {
        MinimalOrbitParam::Finite(w) => {
            if w.is_zero() {
                vec![(4usize, rat(1)), (8, rat(1))]
            } else {
                vec![(4, rat(1)), (8, rat(1)), (9, w.clone())]
            }
        }
        MinimalOrbitParam::Infinity => vec![(4, rat(1)), (9, rat(1))],
    };
    CoordVector::from_support(&entries).expect("the orbit sections are nonzero")
}

/// A closed strictly semistable orbit representative.
#[derive(Debug, Clone)]
pub struct MinimalOrbit {
    pub param: MinimalOrbitParam,
    pub coords: CoordVector,
    /// The seven points cut out by s_w, absent for w ∈ {0, −1, ∞}.
    pub scheme: Option<PointScheme>,
}

/// Outcome of turning a section into the ideal it generates.
#[derive(Debug, Clone)]
pub enum SectionIdeal {
    /// The ideal cuts out seven points.
    Scheme(PointScheme),
    /// The cokernel has torsion: the vanishing locus is not seven points.
    /// The unsaturated generator ideal is kept for inspection.
    NonIdeal(HomogeneousIdeal),
}

/// The homogeneous ideal (f, g, h) of a section.  When its stabilized
/// colength is exactly seven the saturated point scheme is returned;
/// otherwise the section is flagged as a non-ideal boundary point.
pub fn ideal_of_section(s: &Section) -> Result<SectionIdeal, FinalModelError> {
    if s.is_zero() {
        return Err(FinalModelError::ZeroSection);
    }
    let (f, g, h) = s.components();
    let generators: Vec<HomogeneousPolynomial> = [f, g, h]
        .into_iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    let ideal = HomogeneousIdeal::from_generators(generators);
    // three cubics cutting out seven points stabilize well before degree
    // 12; a longer plateau or no plateau at all means a one-dimensional
    // component
    match ideal.stabilized_colength(12) {
        Ok((7, _)) => Ok(SectionIdeal::Scheme(PointScheme::new(ideal, 7, vec![])?)),
        Ok(_) | Err(IdealError::NotZeroDimensional(_)) => Ok(SectionIdeal::NonIdeal(ideal)),
        Err(e) => Err(e.into()),
    }
}

/// The expected seven points of s_w for w ∉ {0, −1}: the intersection of
/// the two curvilinear triple points J_w at (0:0:1) and K_w at (1:0:0)
/// with the reduced point (0:1:0).
fn expected_orbit_scheme(w: &Rational) -> Result<PointScheme, FinalModelError> {
    let j = catalog_witness(&WitnessName::FinalModelJ { w: w.clone() })?;
    let k = catalog_witness(&WitnessName::FinalModelK { w: w.clone() })?;
    let corner = HomogeneousIdeal::from_generators(vec![
        HomogeneousPolynomial::x(),
        HomogeneousPolynomial::z(),
    ]);
    let ideal = HomogeneousIdeal::intersect_all(vec![
        j.ideal().clone(),
        k.ideal().clone(),
        corner,
    ]);
    Ok(PointScheme::new(ideal, 7, vec![])?)
}

/// Build the orbit representative for the given parameter.  For good w the
/// seven points are computed from the section and validated against the
/// product decomposition J_w ∩ K_w ∩ (x, z) up to degree 10.
pub fn minimal_orbit(param: &MinimalOrbitParam) -> Result<MinimalOrbit, FinalModelError> {
    let coords = minimal_section(param);
    let scheme = match ideal_of_section(&coords.section())? {
        SectionIdeal::Scheme(z) => {
            if !param.is_ideal_point() {
                return Err(FinalModelError::VerificationFailed(
                    "a flagged boundary parameter produced seven points".into(),
                ));
            }
            let w = match param {
                MinimalOrbitParam::Finite(w) => w,
                MinimalOrbitParam::Infinity => unreachable!("flagged above"),
            };
            let expected = expected_orbit_scheme(w)?;
            if !z.ideal().equal_up_to(expected.ideal(), 10) {
                return Err(FinalModelError::VerificationFailed(format!(
                    "the section of w = {w} does not match its product decomposition"
                )));
            }
            Some(z)
        }
        SectionIdeal::NonIdeal(_) => {
            if param.is_ideal_point() {
                return Err(FinalModelError::VerificationFailed(
                    "an interior parameter failed to produce seven points".into(),
                ));
            }
            None
        }
    };
    Ok(MinimalOrbit {
        param: param.clone(),
        coords,
        scheme,
    })
}

/// The involution exchanging the two triple points: the antidiagonal
/// matrix with entries (1, −1, −1), which sends [s_w] to [s_{−w−1}].
pub fn involution_t() -> RationalMatrix {
    RationalMatrix::from_rows(vec![
        vec![rat(0), rat(0), rat(1)],
        vec![rat(0), rat(-1), rat(0)],
        vec![rat(-1), rat(0), rat(0)],
    ])
}

/// The antidiagonal involution with entries (1, 1, 1), which fixes [s_∞].
pub fn involution_s() -> RationalMatrix {
    RationalMatrix::from_rows(vec![
        vec![rat(0), rat(0), rat(1)],
        vec![rat(0), rat(1), rat(0)],
        vec![rat(1), rat(0), rat(0)],
    ])
}

/// The diagonal matrix λ₀(t) = diag(t, 1, 1/t).
pub fn lambda0_matrix(t: &Rational) -> Result<RationalMatrix, FinalModelError> {
    if t.is_zero() {
        return Err(FinalModelError::SingularMatrix);
    }
    Ok(RationalMatrix::diagonal(&[
        t.clone(),
        Rational::one(),
        Rational::one() / t.clone(),
    ]))
}

/// Apply A to [s_w] and recognize the image as some [s_{w'}], if it is one.
pub fn orbit_image(
    param: &MinimalOrbitParam,
    a: &RationalMatrix,
) -> Result<Option<MinimalOrbitParam>, FinalModelError> {
    let moved = act(a, &minimal_section(param).section())?;
    let coords = match coordinates(&moved) {
        Some(v) => v,
        None => return Ok(None),
    };
    let c = coords.coords();
    if c[4].is_zero() || (0..15).any(|i| i != 4 && i != 8 && i != 9 && !c[i].is_zero()) {
        return Ok(None);
    }
    let a8 = c[8].clone() / c[4].clone();
    let a9 = c[9].clone() / c[4].clone();
    if a8.is_one() {
        Ok(Some(MinimalOrbitParam::Finite(a9)))
    } else if a8.is_zero() && a9.is_one() {
        Ok(Some(MinimalOrbitParam::Infinity))
    } else {
        Ok(None)
    }
}

/// Whether A fixes the projective class [s_w].
pub fn stabilizer_check(
    param: &MinimalOrbitParam,
    a: &RationalMatrix,
) -> Result<bool, FinalModelError> {
    Ok(orbit_image(param, a)?.as_ref() == Some(param))
}
