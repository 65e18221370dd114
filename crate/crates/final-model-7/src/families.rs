//! The three distinguished families of the model: explicit coordinate
//! vectors whose sections generate the printed intersection ideals, one
//! family per locus of the stability stratification.

use exact_core::{rat, Rational};
use graded_ideal::{catalog_witness, PointScheme, WitnessName};

use crate::orbits::{ideal_of_section, SectionIdeal};
use crate::section::CoordVector;
use crate::FinalModelError;

fn validated_pair(
    coords: CoordVector,
    reference: PointScheme,
) -> Result<(CoordVector, PointScheme), FinalModelError> {
    let z = match ideal_of_section(&coords.section())? {
        SectionIdeal::Scheme(z) => z,
        SectionIdeal::NonIdeal(_) => {
            return Err(FinalModelError::VerificationFailed(
                "the family section does not cut out seven points".into(),
            ))
        }
    };
    if !z.ideal().equal_up_to(reference.ideal(), 10) {
        return Err(FinalModelError::VerificationFailed(
            "the family section does not generate the printed intersection ideal".into(),
        ));
    }
    Ok((coords, reference))
}

/// The unstable family [u·e₀ + e₂ + e₄ + e₆]: a length-5 point at
/// (0:0:1) of a fixed projective type together with two points on a conic
/// section residual to it.
pub fn family_x1(u: &Rational) -> Result<(CoordVector, PointScheme), FinalModelError> {
    let coords = CoordVector::from_support(&[
        (0, u.clone()),
        (2, rat(1)),
        (4, rat(1)),
        (6, rat(1)),
    ])?;
    let reference = catalog_witness(&WitnessName::FamilyX1 { u: u.clone() })?;
    validated_pair(coords, reference)
}

/// The unstable family [e₂ + e₃ + e₇ + t·e₈ + u·e₉]: a length-4 point at
/// (0:0:1) of type (x², y²) plus a reduced point and a length-2 point.
/// Requires t, u, and t + u nonzero.
pub fn family_x2(t: &Rational, u: &Rational) -> Result<(CoordVector, PointScheme), FinalModelError> {
    let reference = catalog_witness(&WitnessName::FamilyX2 {
        t: t.clone(),
        u: u.clone(),
    })?;
    let coords = CoordVector::from_support(&[
        (2, rat(1)),
        (3, rat(1)),
        (7, rat(1)),
        (8, t.clone()),
        (9, u.clone()),
    ])?;
    validated_pair(coords, reference)
}

/// The non-stable family [e₀ + e₂ + e₃ + u·e₄ + v·e₈ + w·e₉]: a
/// curvilinear triple point and four reduced points with a line meeting
/// the triple point in length two and passing through one of them.
pub fn family_x3(
    u: &Rational,
    v: &Rational,
    w: &Rational,
) -> Result<(CoordVector, PointScheme), FinalModelError> {
    let reference = catalog_witness(&WitnessName::FamilyX3 {
        u: u.clone(),
        v: v.clone(),
        w: w.clone(),
    })?;
    let coords = CoordVector::from_support(&[
        (0, rat(1)),
        (2, rat(1)),
        (3, rat(1)),
        (4, u.clone()),
        (8, v.clone()),
        (9, w.clone()),
    ])?;
    validated_pair(coords, reference)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{mu14_max, unstable_pattern, PatternVerdict};
    use exact_core::ratio;

    #[test]
    fn first_family_is_coherent_and_unstable() {
        for u in [rat(1), rat(0), ratio(-2, 3), rat(5)] {
            let (coords, z) = family_x1(&u).unwrap();
            assert_eq!(z.length(), 7);
            assert_eq!(unstable_pattern(&coords), PatternVerdict::Unstable, "u = {u}");
            let (max, _) = mu14_max(&coords);
            assert!(max > rat(0), "u = {u}");
        }
    }

    #[test]
    fn second_family_is_coherent_and_unstable() {
        for (t, u) in [
            (rat(1), rat(1)),
            (rat(2), ratio(-1, 2)),
            (ratio(1, 3), rat(1)),
        ] {
            let (coords, z) = family_x2(&t, &u).unwrap();
            assert_eq!(z.length(), 7);
            assert_eq!(unstable_pattern(&coords), PatternVerdict::Unstable);
        }
    }

    #[test]
    fn second_family_rejects_degenerate_parameters() {
        assert!(family_x2(&rat(0), &rat(1)).is_err());
        assert!(family_x2(&rat(1), &rat(0)).is_err());
        assert!(family_x2(&rat(1), &rat(-1)).is_err());
    }

    #[test]
    fn third_family_is_coherent_and_non_stable() {
        for (u, v, w) in [
            (rat(1), rat(1), rat(1)),
            (rat(2), rat(1), rat(3)),
            (ratio(1, 2), rat(-1), rat(3)),
        ] {
            let (coords, z) = family_x3(&u, &v, &w).unwrap();
            assert_eq!(z.length(), 7);
            assert_eq!(unstable_pattern(&coords), PatternVerdict::NonStable);
            let (max, _) = mu14_max(&coords);
            assert_eq!(max, rat(0));
        }
    }
}
