//! Complete stability classification for configurations of length five.
//!
//! There are exactly two chambers.  For linearizations beyond three, a
//! configuration is stable iff it is reduced with no four points on a
//! line; between two and three, iff no line and no point carries a
//! length-three subscheme.  Unstable configurations are certified by an
//! explicit one-parameter subgroup conjugated into position from the
//! geometry: a fat point pins a flag, a heavy line pins a line, and
//! non-reduced points degenerate onto a generic line.  Certificates are
//! replayable.

use exact_core::{rat, ratio, HomogeneousPolynomial, OneParamSubgroup, Rational, RationalMatrix};
use num_traits::{One, Zero};

use graded_ideal::{PointPlace, PointScheme, SupportHint};
use hilbert_git::{
    destabilize_torus, hilbert_point_defined, mu_conjugated, Linearization, MuOutcome,
};

use crate::AtlasError;

/// The two stability chambers for length five.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chamber {
    /// Linearizations with `3 < m`.
    ThreeToInfinity,
    /// Linearizations with `2 < m < 3`.
    TwoToThree,
}

impl Chamber {
    /// The two sample linearizations bounding the chamber; μ is affine in
    /// `m`, so its signs there control the whole chamber.
    pub fn samples(&self) -> (Rational, Rational) {
        match self {
            Chamber::ThreeToInfinity => (rat(3), rat(4)),
            Chamber::TwoToThree => (rat(2), rat(3)),
        }
    }

    fn midpoint(&self) -> Rational {
        match self {
            Chamber::ThreeToInfinity => ratio(7, 2),
            Chamber::TwoToThree => ratio(5, 2),
        }
    }

    /// Whether endpoint values `(μ(lo), μ(hi))` prove μ positive on the
    /// whole open chamber.
    fn certified(&self, lo: &Rational, hi: &Rational) -> bool {
        let zero = Rational::zero();
        match self {
            // positive on (3, ∞): nonnegative at 3, positive and
            // non-decreasing at 4
            Chamber::ThreeToInfinity => *lo >= zero && *hi > zero && hi >= lo,
            // positive on (2, 3): nonnegative at both ends, not both zero
            Chamber::TwoToThree => {
                *lo >= zero && *hi >= zero && !(lo.is_zero() && hi.is_zero())
            }
        }
    }
}

/// The geometric feature a certificate exploits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum N5Reason {
    NonReduced,
    FourCollinear,
    ThreeCollinear,
    FatPoint,
}

/// A replayable instability certificate for one chamber: μ against the
/// conjugated subgroup at the two chamber sample points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct N5Certificate {
    pub reason: N5Reason,
    pub lambda: OneParamSubgroup,
    pub conjugation: RationalMatrix,
    pub base_degree: u32,
    /// `(m, μ_m)` at the chamber sample points, in increasing `m`.
    pub samples: Vec<(Rational, Rational)>,
}

/// Outcome of the classification in one chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum N5Verdict {
    Stable,
    Unstable(N5Certificate),
}

fn finite(
    z: &PointScheme,
    m: &Rational,
    lambda: &OneParamSubgroup,
    base_degree: u32,
    conjugation: &RationalMatrix,
) -> Result<Rational, AtlasError> {
    match mu_conjugated(
        z,
        &Linearization::finite(m.clone()),
        lambda,
        base_degree,
        conjugation,
    )? {
        MuOutcome::Finite(v) => Ok(v),
        MuOutcome::InfinitySlope(_) => unreachable!("finite linearization"),
    }
}

fn coordinate_vertex(i: usize) -> PointPlace {
    let mut coords = [Rational::zero(), Rational::zero(), Rational::zero()];
    coords[i] = Rational::one();
    PointPlace::new(coords).expect("coordinate vertex")
}

fn generic_point_pool() -> Vec<PointPlace> {
    let raw: [[i64; 3]; 7] = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [1, -1, 1],
        [1, 2, -1],
        [2, -1, 3],
    ];
    raw.iter()
        .map(|c| PointPlace::new([rat(c[0]), rat(c[1]), rat(c[2])]).expect("pool point"))
        .collect()
}

fn line_coefficients(ell: &HomogeneousPolynomial) -> [Rational; 3] {
    let mut out = [Rational::zero(), Rational::zero(), Rational::zero()];
    for (m, c) in ell.terms() {
        let idx = if m.i == 1 {
            0
        } else if m.j == 1 {
            1
        } else {
            2
        };
        out[idx] = c.clone();
    }
    out
}

fn same_line(a: &HomogeneousPolynomial, b: &HomogeneousPolynomial) -> bool {
    let ca = line_coefficients(a);
    let cb = line_coefficients(b);
    // proportionality via cross product
    (ca[0].clone() * cb[1].clone() - ca[1].clone() * cb[0].clone()).is_zero()
        && (ca[0].clone() * cb[2].clone() - ca[2].clone() * cb[0].clone()).is_zero()
        && (ca[1].clone() * cb[2].clone() - ca[2].clone() * cb[1].clone()).is_zero()
}

/// Points spanning the given line, avoiding a finite list.
fn points_on_line(
    ell: &HomogeneousPolynomial,
    avoid: &[PointPlace],
) -> Option<(PointPlace, PointPlace)> {
    let mat = RationalMatrix::from_rows(vec![line_coefficients(ell).to_vec()]);
    let kernel = mat.kernel();
    if kernel.len() != 2 {
        return None;
    }
    let (u, v) = (&kernel[0], &kernel[1]);
    let mut combos: Vec<[Rational; 3]> = Vec::new();
    combos.push([v[0].clone(), v[1].clone(), v[2].clone()]);
    for t in [0i64, 1, -1, 2, -2, 3, -3, 5, -5] {
        combos.push([
            u[0].clone() + rat(t) * v[0].clone(),
            u[1].clone() + rat(t) * v[1].clone(),
            u[2].clone() + rat(t) * v[2].clone(),
        ]);
    }
    let mut found: Vec<PointPlace> = Vec::new();
    for c in combos {
        let Ok(p) = PointPlace::new(c) else { continue };
        if avoid.contains(&p) || found.contains(&p) {
            continue;
        }
        found.push(p);
        if found.len() == 2 {
            return Some((found[0].clone(), found[1].clone()));
        }
    }
    None
}

fn point_off_line(ell: &HomogeneousPolynomial) -> PointPlace {
    generic_point_pool()
        .into_iter()
        .find(|p| !p.on_line(ell))
        .expect("some pool point misses any line")
}

fn frame(c0: &PointPlace, c1: &PointPlace, c2: &PointPlace) -> Option<RationalMatrix> {
    let m = RationalMatrix::from_rows(vec![
        c0.coords().to_vec(),
        c1.coords().to_vec(),
        c2.coords().to_vec(),
    ]);
    if m.determinant().is_zero() {
        None
    } else {
        Some(m)
    }
}

/// Candidate lines through a point: its hinted tangent, lines to the other
/// support points, and lines to coordinate vertices.
fn lines_through(p: &PointPlace, hints: &[SupportHint]) -> Vec<HomogeneousPolynomial> {
    let mut lines: Vec<HomogeneousPolynomial> = Vec::new();
    let push = |l: HomogeneousPolynomial, lines: &mut Vec<HomogeneousPolynomial>| {
        if !lines.iter().any(|k| same_line(k, &l)) {
            lines.push(l);
        }
    };
    for h in hints {
        if h.point == *p {
            if let Some(t) = &h.tangent {
                push(t.clone(), &mut lines);
            }
        } else if let Some(l) = p.line_through(&h.point) {
            push(l, &mut lines);
        }
    }
    for i in 0..3 {
        let v = coordinate_vertex(i);
        if v != *p {
            if let Some(l) = p.line_through(&v) {
                push(l, &mut lines);
            }
        }
    }
    lines
}

/// Lines from a fixed pencil that miss every listed point.
fn lines_avoiding(points: &[PointPlace], limit: usize) -> Vec<HomogeneousPolynomial> {
    let pool: [[i64; 3]; 9] = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [1, -1, 2],
        [2, 3, 5],
        [1, 2, -3],
        [3, -1, -1],
        [5, 2, 1],
    ];
    let mut out = Vec::new();
    for c in pool {
        let l = HomogeneousPolynomial::linear_form(rat(c[0]), rat(c[1]), rat(c[2]));
        if points.iter().all(|p| !p.on_line(&l)) {
            out.push(l);
            if out.len() == limit {
                break;
            }
        }
    }
    out
}

struct Candidate {
    reason: N5Reason,
    lambda: OneParamSubgroup,
    conjugation: RationalMatrix,
}

/// Frames pinned to a line only: the last two basis points span the line.
fn line_candidates(
    reason: N5Reason,
    lambda: &OneParamSubgroup,
    line: &HomogeneousPolynomial,
    support: &[PointPlace],
    off_options: &[PointPlace],
    out: &mut Vec<Candidate>,
) {
    let Some((c1, c2)) = points_on_line(line, support) else {
        return;
    };
    for c0 in off_options {
        if let Some(g) = frame(c0, &c1, &c2) {
            out.push(Candidate {
                reason,
                lambda: lambda.clone(),
                conjugation: g.clone(),
            });
            out.push(Candidate {
                reason,
                lambda: lambda.inverse(),
                conjugation: g,
            });
        }
    }
}

/// Frames pinned to a flag: the last basis point is the marked point, the
/// middle one sits on a candidate line through it.
fn flag_candidates(
    reason: N5Reason,
    lambda: &OneParamSubgroup,
    p: &PointPlace,
    hints: &[SupportHint],
    support: &[PointPlace],
    out: &mut Vec<Candidate>,
) {
    for line in lines_through(p, hints) {
        let mut avoid = support.to_vec();
        if !avoid.contains(p) {
            avoid.push(p.clone());
        }
        let Some((c1, _)) = points_on_line(&line, &avoid) else {
            continue;
        };
        let mut placed = 0usize;
        for c0 in generic_point_pool() {
            if let Some(g) = frame(&c0, &c1, p) {
                out.push(Candidate {
                    reason,
                    lambda: lambda.clone(),
                    conjugation: g.clone(),
                });
                out.push(Candidate {
                    reason,
                    lambda: lambda.inverse(),
                    conjugation: g,
                });
                placed += 1;
                if placed == 3 {
                    break;
                }
            }
        }
    }
}

/// Classify a length-five configuration in the given chamber, returning a
/// replayable certificate when it is unstable.  Support hints accounting
/// for the whole length are required.
pub fn n5_classify(z: &PointScheme, chamber: Chamber) -> Result<N5Verdict, AtlasError> {
    if z.length() != 5 {
        return Err(AtlasError::WrongLength {
            expected: 5,
            found: z.length(),
        });
    }
    let cycle = z.cycle()?;
    let profile = z.collinear_profile(&[])?;
    let max_mult = cycle
        .max_point_multiplicity()
        .expect("length-five cycle is nonempty")
        .1;
    let collinear = profile.max_length;
    let stable = match chamber {
        Chamber::ThreeToInfinity => max_mult == 1 && collinear < 4,
        Chamber::TwoToThree => collinear < 3 && max_mult < 3,
    };
    if stable {
        return Ok(N5Verdict::Stable);
    }

    let support: Vec<PointPlace> = z.hints().iter().map(|h| h.point.clone()).collect();
    let fat_points: Vec<PointPlace> = z
        .hints()
        .iter()
        .filter(|h| h.multiplicity >= 2)
        .map(|h| h.point.clone())
        .collect();
    let triple_points: Vec<PointPlace> = z
        .hints()
        .iter()
        .filter(|h| h.multiplicity >= 3)
        .map(|h| h.point.clone())
        .collect();

    let lambda0 = OneParamSubgroup::lambda0();
    let lambda1 = OneParamSubgroup::lambda1();
    let lambda_half = OneParamSubgroup::lambda_r(ratio(-1, 2));
    let lambda_heavy = OneParamSubgroup::lambda_r(ratio(-3, 4));

    let mut candidates: Vec<Candidate> = Vec::new();
    match chamber {
        Chamber::ThreeToInfinity => {
            for p in &triple_points {
                flag_candidates(N5Reason::FatPoint, &lambda0, p, z.hints(), &support, &mut candidates);
            }
            if collinear >= 4 {
                if let Some(line) = &profile.witness_line {
                    let mut offs: Vec<PointPlace> =
                        support.iter().filter(|p| !p.on_line(line)).cloned().collect();
                    offs.push(point_off_line(line));
                    line_candidates(
                        N5Reason::FourCollinear,
                        &lambda_heavy,
                        line,
                        &support,
                        &offs,
                        &mut candidates,
                    );
                }
            }
            if max_mult >= 2 {
                for p in &fat_points {
                    for line in lines_avoiding(&support, 3) {
                        if let Some((c0, c1)) = points_on_line(&line, &[]) {
                            if let Some(g) = frame(&c0, &c1, p) {
                                candidates.push(Candidate {
                                    reason: N5Reason::NonReduced,
                                    lambda: lambda1.clone(),
                                    conjugation: g,
                                });
                            }
                        }
                    }
                    flag_candidates(
                        N5Reason::NonReduced,
                        &lambda0,
                        p,
                        z.hints(),
                        &support,
                        &mut candidates,
                    );
                }
                if collinear >= 3 {
                    if let Some(line) = &profile.witness_line {
                        let offs = vec![point_off_line(line)];
                        line_candidates(
                            N5Reason::NonReduced,
                            &lambda_half,
                            line,
                            &support,
                            &offs,
                            &mut candidates,
                        );
                    }
                }
            }
        }
        Chamber::TwoToThree => {
            for p in &triple_points {
                flag_candidates(N5Reason::FatPoint, &lambda0, p, z.hints(), &support, &mut candidates);
            }
            if collinear >= 3 {
                if let Some(line) = &profile.witness_line {
                    let mut offs: Vec<PointPlace> =
                        support.iter().filter(|p| !p.on_line(line)).cloned().collect();
                    offs.push(point_off_line(line));
                    line_candidates(
                        N5Reason::ThreeCollinear,
                        &lambda_half,
                        line,
                        &support,
                        &offs,
                        &mut candidates,
                    );
                    if collinear >= 4 {
                        line_candidates(
                            N5Reason::ThreeCollinear,
                            &lambda_heavy,
                            line,
                            &support,
                            &offs,
                            &mut candidates,
                        );
                    }
                }
            }
        }
    }

    let base_degree = if hilbert_point_defined(z, 3) { 3 } else { 4 };
    let (lo_m, hi_m) = chamber.samples();
    for candidate in candidates {
        let lo = finite(z, &lo_m, &candidate.lambda, base_degree, &candidate.conjugation)?;
        let hi = finite(z, &hi_m, &candidate.lambda, base_degree, &candidate.conjugation)?;
        if chamber.certified(&lo, &hi) {
            return Ok(N5Verdict::Unstable(N5Certificate {
                reason: candidate.reason,
                lambda: candidate.lambda,
                conjugation: candidate.conjugation,
                base_degree,
                samples: vec![(lo_m, lo), (hi_m, hi)],
            }));
        }
    }

    // fallback: exact scan of the diagonal torus at the chamber midpoint
    let scan = destabilize_torus(z, &chamber.midpoint(), base_degree)?;
    if let Some(cert) = scan.certificate {
        let lo = finite(z, &lo_m, &cert.lambda, base_degree, &cert.conjugation)?;
        let hi = finite(z, &hi_m, &cert.lambda, base_degree, &cert.conjugation)?;
        if chamber.certified(&lo, &hi) {
            let reason = match chamber {
                Chamber::ThreeToInfinity => {
                    if max_mult >= 2 {
                        N5Reason::NonReduced
                    } else {
                        N5Reason::FourCollinear
                    }
                }
                Chamber::TwoToThree => {
                    if max_mult >= 3 {
                        N5Reason::FatPoint
                    } else {
                        N5Reason::ThreeCollinear
                    }
                }
            };
            return Ok(N5Verdict::Unstable(N5Certificate {
                reason,
                lambda: cert.lambda,
                conjugation: cert.conjugation,
                base_degree,
                samples: vec![(lo_m, lo), (hi_m, hi)],
            }));
        }
    }
    Err(AtlasError::VerificationFailed(
        "no destabilizing subgroup found for a configuration violating the stability criterion"
            .into(),
    ))
}

/// Replay a certificate: recompute μ at its sample points and re-check the
/// chamber criterion.
pub fn verify_n5_certificate(
    z: &PointScheme,
    chamber: Chamber,
    certificate: &N5Certificate,
) -> Result<bool, AtlasError> {
    if certificate.samples.len() != 2 {
        return Ok(false);
    }
    for (m, recorded) in &certificate.samples {
        let recomputed = finite(
            z,
            m,
            &certificate.lambda,
            certificate.base_degree,
            &certificate.conjugation,
        )?;
        if recomputed != *recorded {
            return Ok(false);
        }
    }
    let lo = &certificate.samples[0].1;
    let hi = &certificate.samples[1].1;
    Ok(chamber.certified(lo, hi))
}
