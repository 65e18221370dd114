//! Named witness configurations used by the stability layers.
//!
//! Each entry builds a specific ideal, exactly as printed in its source
//! construction, together with the support hints that are known for it.
//! Lengths are validated on construction.

use exact_core::{parse_polynomial, HomogeneousPolynomial, Monomial, Rational};
use num_traits::{One, Zero};

use crate::{
    HomogeneousIdeal, IdealError, PointPlace, PointScheme, Sampler, SupportHint,
};

/// The catalog of named witness configurations.
#[derive(Debug, Clone)]
pub enum WitnessName {
    /// Length 5: full triple point on a conic plus two conic points.
    TriplePoint5,
    /// Length 5: four distinct points on the line `x = 0` (at the given
    /// nonzero parameters) plus the point `(1:0:0)`.
    FourCollinear5 { roots: [Rational; 4] },
    /// Length 5: three points on `x = 0` and two more off it.
    ThreeCollinear5 { a: Rational },
    /// Length 5 special configuration `(x, (y+z)z) ∩ (x², y) ∩ (y, z)`.
    SpecialConfigI5,
    /// Length 5 special configuration `(x, z²) ∩ (x², y) ∩ (x+y, z)`.
    SpecialConfigII5,
    /// Length 5 special configuration `(x², y) ∩ (x², z) ∩ (x, y+z)`.
    SpecialConfigIII5,
    /// Length 5 minimal-orbit family `(x, (y+z)(y−z)(ay+bz)) ∩ (z, y²)`.
    ZeroFamily5 { a: Rational, b: Rational },
    /// Length 5 degenerate member `(xz, xy², y²z)`.
    ZeroLimit5,
    /// Length 2k on a smooth conic: `(y² + xz, x^k)`, k ≥ 3.
    ConicEven { k: u32 },
    /// Length 2k−1 on a smooth conic: `(y² + xz, x^k, x^{k−1}y)`, k ≥ 2.
    ConicOdd { k: u32 },
    /// Length 7: conic triple point, a line point, and three seeded
    /// general points.
    SpecialTriplePoint7 { seed: u64 },
    /// Length 7 minimal-orbit member `I_w`, w ∉ {0, −1}.
    FinalModelW { w: Rational },
    /// Length 3 component `J_w = (xy, x², (w+1)y² + xz)`, w ≠ −1.
    FinalModelJ { w: Rational },
    /// Length 3 component `K_w = (yz, z², wy² + xz)`, w ≠ 0.
    FinalModelK { w: Rational },
    /// Length 7 family `I_u = (x², xy², y³+xyz+xz²) ∩ (z, ux²+y²)`.
    FamilyX1 { u: Rational },
    /// Length 7 family `J_{t,u} ∩ K_{t,u} ∩ L_{t,u}`; t, u, t+u nonzero.
    FamilyX2 { t: Rational, u: Rational },
    /// Length 7 family `J_{u,v,w} ∩ K_{u,v,w} ∩ L_{u,v,w}` (general
    /// parameters).
    FamilyX3 { u: Rational, v: Rational, w: Rational },
}

fn p(text: &str) -> HomogeneousPolynomial {
    parse_polynomial(text).expect("static polynomial")
}

fn pt(a: i64, b: i64, c: i64) -> PointPlace {
    PointPlace::new([
        Rational::from_integer(a.into()),
        Rational::from_integer(b.into()),
        Rational::from_integer(c.into()),
    ])
    .expect("static point")
}

fn hint(point: PointPlace, multiplicity: u32, tangent: Option<&str>) -> SupportHint {
    SupportHint {
        point,
        multiplicity,
        tangent: tangent.map(p),
    }
}

fn term(c: Rational, i: u32, j: u32, k: u32) -> HomogeneousPolynomial {
    HomogeneousPolynomial::term(Monomial::new(i, j, k), c)
}

/// Merge coinciding points, summing multiplicities.
fn merge_hints(hints: Vec<SupportHint>) -> Vec<SupportHint> {
    let mut out: Vec<SupportHint> = Vec::new();
    for h in hints {
        if let Some(existing) = out.iter_mut().find(|e| e.point == h.point) {
            existing.multiplicity += h.multiplicity;
            if existing.tangent.is_none() {
                existing.tangent = h.tangent;
            }
        } else {
            out.push(h);
        }
    }
    out
}

/// Build the named witness configuration.
pub fn catalog_witness(name: &WitnessName) -> Result<PointScheme, IdealError> {
    match name {
        WitnessName::TriplePoint5 => {
            let ideal = HomogeneousIdeal::from_generators(vec![
                p("x*z + y^2"),
                p("x^2*y + x*y*z"),
                p("x^3 + x^2*z"),
            ]);
            PointScheme::new(
                ideal,
                5,
                vec![
                    hint(pt(0, 0, 1), 3, Some("x")),
                    hint(pt(-1, 1, 1), 1, None),
                    hint(pt(-1, -1, 1), 1, None),
                ],
            )
        }
        WitnessName::FourCollinear5 { roots } => {
            for (i, r) in roots.iter().enumerate() {
                if r.is_zero() {
                    return Err(IdealError::DegenerateParameters(format!(
                        "root {i} vanishes; both extreme coefficients must be nonzero"
                    )));
                }
                for s in &roots[..i] {
                    if r == s {
                        return Err(IdealError::DegenerateParameters(
                            "roots must be pairwise distinct".into(),
                        ));
                    }
                }
            }
            // p4 = Π (y - r z): degree-4 form on the line x = 0
            let mut p4 = term(Rational::one(), 0, 0, 0);
            for r in roots {
                let factor = HomogeneousPolynomial::linear_form(
                    Rational::zero(),
                    Rational::one(),
                    -r.clone(),
                );
                p4 = p4.mul(&factor);
            }
            let ideal = HomogeneousIdeal::from_generators(vec![p("x*y"), p("x*z"), p4]);
            let mut hints = vec![hint(pt(1, 0, 0), 1, None)];
            for r in roots {
                hints.push(SupportHint {
                    point: PointPlace::new([Rational::zero(), r.clone(), Rational::one()])?,
                    multiplicity: 1,
                    tangent: None,
                });
            }
            PointScheme::new(ideal, 5, hints)
        }
        WitnessName::ThreeCollinear5 { a } => {
            if a.is_zero() {
                return Err(IdealError::DegenerateParameters(
                    "parameter a must be nonzero".into(),
                ));
            }
            // (xy, yz(y + az), xz(x + z))
            let g2 = term(Rational::one(), 0, 2, 1).add(&term(a.clone(), 0, 1, 2));
            let g3 = p("x^2*z + x*z^2");
            let ideal = HomogeneousIdeal::from_generators(vec![p("x*y"), g2, g3]);
            let fifth = PointPlace::new([Rational::zero(), -a.clone(), Rational::one()])?;
            PointScheme::new(
                ideal,
                5,
                merge_hints(vec![
                    hint(pt(0, 0, 1), 1, None),
                    hint(pt(0, 1, 0), 1, None),
                    hint(pt(1, 0, 0), 1, None),
                    hint(pt(-1, 0, 1), 1, None),
                    SupportHint {
                        point: fifth,
                        multiplicity: 1,
                        tangent: None,
                    },
                ]),
            )
        }
        WitnessName::SpecialConfigI5 => PointScheme::new(
            HomogeneousIdeal::from_generators(vec![p("x*y"), p("x^2*z"), p("y^2*z + y*z^2")]),
            5,
            vec![
                hint(pt(0, 1, 0), 1, None),
                hint(pt(0, -1, 1), 1, None),
                hint(pt(0, 0, 1), 2, Some("y")),
                hint(pt(1, 0, 0), 1, None),
            ],
        ),
        WitnessName::SpecialConfigII5 => PointScheme::new(
            HomogeneousIdeal::from_generators(vec![p("x^2 + x*y"), p("y*z^2"), p("x*y*z")]),
            5,
            vec![
                hint(pt(0, 1, 0), 2, Some("x")),
                hint(pt(0, 0, 1), 2, Some("y")),
                hint(pt(1, -1, 0), 1, None),
            ],
        ),
        WitnessName::SpecialConfigIII5 => PointScheme::new(
            HomogeneousIdeal::from_generators(vec![p("x^2"), p("y^2*z + y*z^2"), p("x*y*z")]),
            5,
            vec![
                hint(pt(0, 0, 1), 2, Some("y")),
                hint(pt(0, 1, 0), 2, Some("z")),
                hint(pt(0, -1, 1), 1, None),
            ],
        ),
        WitnessName::ZeroFamily5 { a, b } => {
            if a.is_zero() && b.is_zero() {
                return Err(IdealError::DegenerateParameters(
                    "(a, b) = (0, 0) does not define a cubic".into(),
                ));
            }
            // (y + z)(y - z)(ay + bz) = a y³ + b y²z - a yz² - b z³
            let cubic = term(a.clone(), 0, 3, 0)
                .add(&term(b.clone(), 0, 2, 1))
                .add(&term(-a.clone(), 0, 1, 2))
                .add(&term(-b.clone(), 0, 0, 3));
            let ideal =
                HomogeneousIdeal::from_generators(vec![p("x*z"), p("x*y^2"), cubic]);
            let third_root = PointPlace::new([Rational::zero(), -b.clone(), a.clone()])?;
            PointScheme::new(
                ideal,
                5,
                merge_hints(vec![
                    hint(pt(1, 0, 0), 2, Some("z")),
                    hint(pt(0, -1, 1), 1, None),
                    hint(pt(0, 1, 1), 1, None),
                    SupportHint {
                        point: third_root,
                        multiplicity: 1,
                        tangent: None,
                    },
                ]),
            )
        }
        WitnessName::ZeroLimit5 => PointScheme::new(
            HomogeneousIdeal::from_generators(vec![p("x*z"), p("x*y^2"), p("y^2*z")]),
            5,
            vec![
                hint(pt(0, 0, 1), 2, Some("x")),
                hint(pt(0, 1, 0), 1, None),
                hint(pt(1, 0, 0), 2, Some("z")),
            ],
        ),
        WitnessName::ConicEven { k } => {
            if *k < 3 {
                return Err(IdealError::DegenerateParameters("k must be at least 3".into()));
            }
            let ideal = HomogeneousIdeal::from_generators(vec![
                p("y^2 + x*z"),
                HomogeneousPolynomial::monomial(Monomial::new(*k, 0, 0)),
            ]);
            PointScheme::new(ideal, 2 * k, vec![hint(pt(0, 0, 1), 2 * k, Some("x"))])
        }
        WitnessName::ConicOdd { k } => {
            if *k < 2 {
                return Err(IdealError::DegenerateParameters("k must be at least 2".into()));
            }
            let ideal = HomogeneousIdeal::from_generators(vec![
                p("y^2 + x*z"),
                HomogeneousPolynomial::monomial(Monomial::new(*k, 0, 0)),
                HomogeneousPolynomial::monomial(Monomial::new(*k - 1, 1, 0)),
            ]);
            PointScheme::new(ideal, 2 * k - 1, vec![hint(pt(0, 0, 1), 2 * k - 1, Some("x"))])
        }
        WitnessName::SpecialTriplePoint7 { seed } => {
            let triple =
                HomogeneousIdeal::from_generators(vec![p("y^2 + x*z"), p("x*y"), p("x^2")]);
            let line_point = HomogeneousIdeal::from_generators(vec![p("x"), p("z")]);
            let mut sampler = Sampler::new(*seed);
            let free = sampler.general_points(3, &[p("x"), p("z")]);
            let mut parts = vec![triple, line_point];
            for q in &free {
                parts.push(crate::point_ideal(q));
            }
            let ideal = HomogeneousIdeal::intersect_all(parts);
            let mut hints = vec![hint(pt(0, 0, 1), 3, Some("x")), hint(pt(0, 1, 0), 1, None)];
            for q in free {
                hints.push(SupportHint {
                    point: q,
                    multiplicity: 1,
                    tangent: None,
                });
            }
            PointScheme::new(ideal, 7, hints)
        }
        WitnessName::FinalModelW { w } => {
            if w.is_zero() || *w == -Rational::one() {
                return Err(IdealError::DegenerateParameters(
                    "w ∈ {0, -1} does not cut out a length-7 subscheme".into(),
                ));
            }
            // (xz² + (w+1)y²z, xyz, x²z + w·xy²)
            let w1 = w.clone() + Rational::one();
            let g1 = term(Rational::one(), 1, 0, 2).add(&term(w1, 0, 2, 1));
            let g3 = term(Rational::one(), 2, 0, 1).add(&term(w.clone(), 1, 2, 0));
            let ideal = HomogeneousIdeal::from_generators(vec![g1, p("x*y*z"), g3]);
            PointScheme::new(
                ideal,
                7,
                vec![
                    hint(pt(0, 0, 1), 3, Some("x")),
                    hint(pt(1, 0, 0), 3, Some("z")),
                    hint(pt(0, 1, 0), 1, None),
                ],
            )
        }
        WitnessName::FinalModelJ { w } => {
            if *w == -Rational::one() {
                return Err(IdealError::DegenerateParameters("w = -1 degenerates J_w".into()));
            }
            let g = term(w.clone() + Rational::one(), 0, 2, 0).add(&term(Rational::one(), 1, 0, 1));
            let ideal = HomogeneousIdeal::from_generators(vec![p("x*y"), p("x^2"), g]);
            PointScheme::new(ideal, 3, vec![hint(pt(0, 0, 1), 3, Some("x"))])
        }
        WitnessName::FinalModelK { w } => {
            if w.is_zero() {
                return Err(IdealError::DegenerateParameters("w = 0 degenerates K_w".into()));
            }
            let g = term(w.clone(), 0, 2, 0).add(&term(Rational::one(), 1, 0, 1));
            let ideal = HomogeneousIdeal::from_generators(vec![p("y*z"), p("z^2"), g]);
            PointScheme::new(ideal, 3, vec![hint(pt(1, 0, 0), 3, Some("z"))])
        }
        WitnessName::FamilyX1 { u } => {
            let j = HomogeneousIdeal::from_generators(vec![
                p("x^2"),
                p("x*y^2"),
                p("y^3 + x*y*z + x*z^2"),
            ]);
            let k = HomogeneousIdeal::from_generators(vec![
                p("z"),
                term(u.clone(), 2, 0, 0).add(&p("y^2")),
            ]);
            let ideal = j.intersect(&k);
            PointScheme::new(ideal, 7, vec![hint(pt(0, 0, 1), 5, Some("x"))])
        }
        WitnessName::FamilyX2 { t, u } => {
            let sum = t.clone() + u.clone();
            if t.is_zero() || u.is_zero() || sum.is_zero() {
                return Err(IdealError::DegenerateParameters(
                    "t, u, and t + u must all be nonzero".into(),
                ));
            }
            let j = HomogeneousIdeal::from_generators(vec![
                p("x*y"),
                term(Rational::one(), 2, 0, 0).add(&term(sum.clone(), 0, 2, 0)),
            ]);
            let k = HomogeneousIdeal::from_generators(vec![
                p("x"),
                HomogeneousPolynomial::linear_form(Rational::zero(), Rational::one(), sum),
            ]);
            let l = HomogeneousIdeal::from_generators(vec![
                HomogeneousPolynomial::linear_form(Rational::zero(), Rational::one(), t.clone()),
                p("x^2 + x*y").add(&term(u.clone(), 0, 2, 0)),
            ]);
            let ideal = HomogeneousIdeal::intersect_all(vec![j, k, l]);
            PointScheme::new(ideal, 7, vec![])
        }
        WitnessName::FamilyX3 { u, v, w } => {
            let vw = v.clone() + w.clone();
            let j = HomogeneousIdeal::from_generators(vec![
                p("x*y"),
                p("x^2"),
                term(u.clone(), 1, 0, 1).add(&term(vw.clone(), 0, 2, 0)),
            ]);
            let k = HomogeneousIdeal::from_generators(vec![
                p("x"),
                HomogeneousPolynomial::linear_form(Rational::zero(), Rational::one(), vw),
            ]);
            let l = HomogeneousIdeal::from_generators(vec![
                p("x^2 + y^2").add(&term(v.clone(), 0, 1, 1)),
                p("x^2")
                    .add(&term(u.clone(), 1, 0, 1))
                    .add(&term(w.clone(), 0, 2, 0)),
                term(Rational::one() - w.clone(), 1, 1, 0)
                    .add(&term(v.clone(), 1, 0, 1))
                    .add(&term(u.clone(), 0, 1, 1))
                    .add(&term(u.clone() * v.clone(), 0, 0, 2)),
            ]);
            let ideal = HomogeneousIdeal::intersect_all(vec![j, k, l]);
            PointScheme::new(ideal, 7, vec![])
        }
    }
}
