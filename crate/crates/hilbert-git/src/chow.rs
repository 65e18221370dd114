//! Chow stability of zero-dimensional cycles in the plane and the
//! multiplicity criterion for instability of plane curves.
//!
//! A length-`n` cycle is Chow stable iff every line carries mass `< 2n/3`
//! and every point has multiplicity `< n/3`; replacing both strict
//! inequalities by non-strict ones characterizes semistability.  All
//! comparisons are done on cleared denominators (`3·mass` vs `2n`,
//! `3·mult` vs `n`).

use exact_core::{HomogeneousPolynomial, RationalMatrix};
use num_traits::One;

use graded_ideal::{Cycle, PointPlace, PointScheme};

use crate::state::defined_piece;
use crate::GitError;

/// The structure blocking (or bounding) Chow stability.
#[derive(Debug, Clone)]
pub enum ChowWitness {
    /// A line carrying the extremal mass.  The line itself is absent only
    /// when the cycle is supported at a single point, where every line
    /// through it carries the full mass.
    Line {
        line: Option<HomogeneousPolynomial>,
        mass: u32,
    },
    Point { point: PointPlace, multiplicity: u32 },
}

/// Chow stability verdict with an extremal witness where applicable.
#[derive(Debug, Clone)]
pub enum ChowVerdict {
    Stable,
    StrictlySemistable(ChowWitness),
    Unstable(ChowWitness),
}

/// Decide Chow stability of a cycle by exact threshold comparisons.
pub fn chow_stability(cycle: &Cycle) -> ChowVerdict {
    let n = cycle.total();
    assert!(n > 0, "Chow stability needs a nonempty cycle");
    let (mass, line) = cycle.max_collinear_multiplicity();
    let (point, multiplicity) = cycle
        .max_point_multiplicity()
        .expect("nonempty cycle has a support point");
    if 3 * mass > 2 * n {
        return ChowVerdict::Unstable(ChowWitness::Line { line, mass });
    }
    if 3 * multiplicity > n {
        return ChowVerdict::Unstable(ChowWitness::Point {
            point,
            multiplicity,
        });
    }
    if 3 * mass == 2 * n {
        return ChowVerdict::StrictlySemistable(ChowWitness::Line { line, mass });
    }
    if 3 * multiplicity == n {
        return ChowVerdict::StrictlySemistable(ChowWitness::Point {
            point,
            multiplicity,
        });
    }
    ChowVerdict::Stable
}

/// Outcome of the plane-curve multiplicity test at one point: the curve
/// cut out by the product of a degree-`degree` basis is unstable when a
/// point of multiplicity exceeding two thirds of its degree exists.
#[derive(Debug, Clone)]
pub struct CurveWitness {
    pub point: PointPlace,
    pub degree: u32,
    pub basis_size: u32,
    pub multiplicity_sum: u32,
    /// True exactly when `3·multiplicity_sum > 2·degree·basis_size`.
    pub unstable: bool,
}

/// Translation taking the point to a coordinate vertex, together with the
/// index pair whose exponent sum reads off the local multiplicity there.
fn translation_chart(p: &PointPlace) -> (RationalMatrix, [usize; 2]) {
    let c = p.coords();
    let mut g = RationalMatrix::identity(3);
    if c[2].is_one() {
        // x ↦ x + a·z, y ↦ y + b·z moves (a:b:1) to (0:0:1)
        g.set(2, 0, c[0].clone());
        g.set(2, 1, c[1].clone());
        (g, [0, 1])
    } else if c[1].is_one() {
        // x ↦ x + a·y moves (a:1:0) to (0:1:0)
        g.set(1, 0, c[0].clone());
        (g, [0, 2])
    } else {
        (g, [1, 2])
    }
}

fn local_multiplicity(
    f: &HomogeneousPolynomial,
    chart: &(RationalMatrix, [usize; 2]),
) -> Result<u32, GitError> {
    let moved = f.substitute(&chart.0)?;
    let [u, v] = chart.1;
    Ok(moved
        .terms()
        .map(|(m, _)| {
            let e = [m.i, m.j, m.k];
            e[u] + e[v]
        })
        .min()
        .expect("basis polynomials are nonzero"))
}

/// Sum the local multiplicities of a degree-`degree` basis of the ideal at
/// one point and compare against the curve-instability threshold.
pub fn curve_criterion(
    z: &PointScheme,
    degree: u32,
    point: &PointPlace,
) -> Result<CurveWitness, GitError> {
    let piece = defined_piece(z, degree)?;
    let chart = translation_chart(point);
    let mut sum = 0u32;
    for r in 0..piece.rows() {
        let f = HomogeneousPolynomial::from_coefficient_row(degree, piece.row(r));
        sum += local_multiplicity(&f, &chart)?;
    }
    let basis_size = piece.rows() as u32;
    Ok(CurveWitness {
        point: point.clone(),
        degree,
        basis_size,
        multiplicity_sum: sum,
        unstable: 3 * sum > 2 * degree * basis_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{parse_polynomial, rat, Monomial};
    use graded_ideal::{monomial_ideal, reduced_points, Sampler};

    fn pt(a: i64, b: i64, c: i64) -> PointPlace {
        PointPlace::new([rat(a), rat(b), rat(c)]).unwrap()
    }

    #[test]
    fn three_double_points_sit_on_the_boundary() {
        let cycle =
            Cycle::new(vec![(pt(0, 0, 1), 2), (pt(0, 1, 0), 2), (pt(1, 0, 0), 2)]).unwrap();
        match chow_stability(&cycle) {
            ChowVerdict::StrictlySemistable(ChowWitness::Line { mass, line }) => {
                assert_eq!(mass, 4);
                assert!(line.is_some());
            }
            other => panic!("expected strict semistability, got {other:?}"),
        }
    }

    #[test]
    fn heavy_line_destabilizes() {
        // five collinear among seven: 3·5 > 2·7
        let cycle = Cycle::new(vec![
            (pt(0, 0, 1), 1),
            (pt(0, 1, 1), 1),
            (pt(0, 2, 1), 1),
            (pt(0, 3, 1), 1),
            (pt(0, 1, 0), 1),
            (pt(1, 1, 1), 1),
            (pt(1, 2, 3), 1),
        ])
        .unwrap();
        match chow_stability(&cycle) {
            ChowVerdict::Unstable(ChowWitness::Line { mass, line }) => {
                assert_eq!(mass, 5);
                let x = parse_polynomial("x").unwrap();
                let witness = line.unwrap();
                // the witness line is x = 0 up to scale
                assert!(pt(0, 5, 7).on_line(&witness));
                assert!(pt(0, 1, 0).on_line(&witness));
                assert!(!pt(1, 1, 1).on_line(&witness));
                assert_eq!(x.degree(), witness.degree());
            }
            other => panic!("expected a line witness, got {other:?}"),
        }
    }

    #[test]
    fn heavy_point_destabilizes() {
        // a triple point among six: every line carries at most 4 = 2n/3,
        // so the point threshold 3·3 > 6 is the binding one
        let cycle = Cycle::new(vec![
            (pt(0, 0, 1), 3),
            (pt(1, 0, 1), 1),
            (pt(0, 1, 1), 1),
            (pt(1, 1, 2), 1),
        ])
        .unwrap();
        match chow_stability(&cycle) {
            ChowVerdict::Unstable(ChowWitness::Point { multiplicity, .. }) => {
                assert_eq!(multiplicity, 3)
            }
            other => panic!("expected a point witness, got {other:?}"),
        }
    }

    #[test]
    fn generic_configurations_are_chow_stable() {
        let mut sampler = Sampler::new(404);
        let z = reduced_points(&sampler.general_points(9, &[])).unwrap();
        let cycle = z.cycle().unwrap();
        assert!(matches!(chow_stability(&cycle), ChowVerdict::Stable));
    }

    #[test]
    fn single_support_point_masses_everything() {
        let cycle = Cycle::new(vec![(pt(1, 2, 1), 4)]).unwrap();
        match chow_stability(&cycle) {
            ChowVerdict::Unstable(ChowWitness::Line { mass, line }) => {
                assert_eq!(mass, 4);
                assert!(line.is_none());
            }
            other => panic!("expected a line witness, got {other:?}"),
        }
    }

    #[test]
    fn fat_origin_fails_the_curve_test() {
        // the third infinitesimal neighborhood of (0:0:1): length 6, every
        // cubic in the ideal vanishes to order 3 there
        let gens: Vec<Monomial> = Monomial::all_of_degree(3)
            .into_iter()
            .filter(|m| m.i + m.j >= 3)
            .collect();
        let z = PointScheme::new(monomial_ideal(&gens), 6, vec![]).unwrap();
        let w = curve_criterion(&z, 3, &pt(0, 0, 1)).unwrap();
        assert_eq!(w.basis_size, 4);
        assert_eq!(w.multiplicity_sum, 12);
        assert!(w.unstable);
        // away from the support the basis has no common zero of high order
        let away = curve_criterion(&z, 3, &pt(1, 1, 1)).unwrap();
        assert!(!away.unstable);
    }

    #[test]
    fn translated_fat_point_matches_the_coordinate_one() {
        // same local picture at (2:-1:1), reached by translation
        let mut gens = Vec::new();
        let x = parse_polynomial("x - 2*z").unwrap();
        let y = parse_polynomial("y + z").unwrap();
        for a in 0..=3u32 {
            let mut f = parse_polynomial("1").unwrap();
            let mut g = f.clone();
            for _ in 0..a {
                f = f.mul(&x);
            }
            for _ in 0..(3 - a) {
                g = g.mul(&y);
            }
            gens.push(f.mul(&g));
        }
        let ideal = graded_ideal::HomogeneousIdeal::from_generators(gens);
        let z = PointScheme::new(ideal, 6, vec![]).unwrap();
        let w = curve_criterion(&z, 3, &pt(2, -1, 1)).unwrap();
        assert_eq!(w.multiplicity_sum, 12);
        assert!(w.unstable);
    }

    #[test]
    fn reduced_points_have_unit_multiplicities() {
        let z = reduced_points(&[pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 4)]).unwrap();
        let w = curve_criterion(&z, 2, &pt(0, 0, 1)).unwrap();
        // conics through three general points form a 3-dimensional space
        assert_eq!(w.basis_size, 3);
        assert_eq!(w.multiplicity_sum, 3);
        assert!(!w.unstable);
    }

    #[test]
    fn points_at_infinity_use_their_own_charts() {
        let z = reduced_points(&[pt(0, 1, 0), pt(1, 0, 0), pt(1, 1, 1)]).unwrap();
        for p in [pt(0, 1, 0), pt(1, 0, 0), pt(2, 1, 0)] {
            let w = curve_criterion(&z, 2, &p).unwrap();
            assert!(w.multiplicity_sum <= w.basis_size * 2);
            assert!(!w.unstable);
        }
    }
}
