use exact_core::{HomogeneousPolynomial, Rational};
use num_traits::Zero;

use crate::{HomogeneousIdeal, IdealError};

/// A rational point of the projective plane, stored as homogeneous
/// coordinates normalized so the last nonzero coordinate is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointPlace {
    coords: [Rational; 3],
}

impl PointPlace {
    pub fn new(coords: [Rational; 3]) -> Result<Self, IdealError> {
        let last = coords.iter().rposition(|c| !c.is_zero()).ok_or_else(|| {
            IdealError::DegenerateParameters("projective point needs a nonzero coordinate".into())
        })?;
        let scale = coords[last].clone();
        let normalized = [
            coords[0].clone() / scale.clone(),
            coords[1].clone() / scale.clone(),
            coords[2].clone() / scale,
        ];
        Ok(PointPlace { coords: normalized })
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    /// Evaluate a linear form at this point.
    pub fn on_line(&self, line: &HomogeneousPolynomial) -> bool {
        assert_eq!(line.degree(), 1);
        let mut acc = Rational::zero();
        for (m, c) in line.terms() {
            let idx = if m.i == 1 { 0 } else if m.j == 1 { 1 } else { 2 };
            acc += c.clone() * self.coords[idx].clone();
        }
        acc.is_zero()
    }

    /// The line through two distinct points (coefficients by cross product).
    pub fn line_through(&self, other: &PointPlace) -> Option<HomogeneousPolynomial> {
        let p = &self.coords;
        let q = &other.coords;
        let a = p[1].clone() * q[2].clone() - p[2].clone() * q[1].clone();
        let b = p[2].clone() * q[0].clone() - p[0].clone() * q[2].clone();
        let c = p[0].clone() * q[1].clone() - p[1].clone() * q[0].clone();
        if a.is_zero() && b.is_zero() && c.is_zero() {
            None
        } else {
            Some(HomogeneousPolynomial::linear_form(a, b, c))
        }
    }
}

/// Support hint: a point of the scheme with its multiplicity and, when
/// meaningful, a distinguished tangent line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportHint {
    pub point: PointPlace,
    pub multiplicity: u32,
    pub tangent: Option<HomogeneousPolynomial>,
}

/// A weighted configuration of points (the cycle of a zero-dimensional
/// scheme).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    entries: Vec<(PointPlace, u32)>,
}

impl Cycle {
    pub fn new(entries: Vec<(PointPlace, u32)>) -> Result<Self, IdealError> {
        if entries.iter().any(|(_, m)| *m == 0) {
            return Err(IdealError::DegenerateParameters(
                "cycle multiplicities must be positive".into(),
            ));
        }
        Ok(Cycle { entries })
    }

    pub fn entries(&self) -> &[(PointPlace, u32)] {
        &self.entries
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn max_point_multiplicity(&self) -> Option<(PointPlace, u32)> {
        self.entries
            .iter()
            .max_by_key(|(_, m)| *m)
            .map(|(p, m)| (p.clone(), *m))
    }

    /// Largest total multiplicity carried by a single line.  Lines are
    /// enumerated through pairs of distinct support points; with fewer than
    /// two distinct points every line through the point carries everything.
    pub fn max_collinear_multiplicity(&self) -> (u32, Option<HomogeneousPolynomial>) {
        if self.entries.len() <= 1 {
            return (self.total(), None);
        }
        let mut best = 0u32;
        let mut best_line = None;
        for i in 0..self.entries.len() {
            for j in i + 1..self.entries.len() {
                let Some(line) = self.entries[i].0.line_through(&self.entries[j].0) else {
                    continue;
                };
                let mass: u32 = self
                    .entries
                    .iter()
                    .filter(|(p, _)| p.on_line(&line))
                    .map(|(_, m)| m)
                    .sum();
                if mass > best {
                    best = mass;
                    best_line = Some(line);
                }
            }
        }
        (best, best_line)
    }
}

/// Result of a collinearity query.
#[derive(Debug, Clone)]
pub struct CollinearProfile {
    pub max_length: u32,
    pub witness_line: Option<HomogeneousPolynomial>,
    /// False when no support hints were available, in which case the
    /// reported maximum is only a lower bound.
    pub exact: bool,
}

/// A zero-dimensional subscheme of the plane: a saturated ideal with a
/// known length and optional support hints.
#[derive(Debug, Clone)]
pub struct PointScheme {
    ideal: HomogeneousIdeal,
    length: u32,
    hints: Vec<SupportHint>,
}

impl PointScheme {
    /// Saturate the given ideal and validate its length.
    pub fn new(
        ideal: HomogeneousIdeal,
        expected_length: u32,
        hints: Vec<SupportHint>,
    ) -> Result<Self, IdealError> {
        let saturated = ideal.saturate(Some(expected_length))?;
        Ok(PointScheme {
            ideal: saturated,
            length: expected_length,
            hints,
        })
    }

    pub fn ideal(&self) -> &HomogeneousIdeal {
        &self.ideal
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn hints(&self) -> &[SupportHint] {
        &self.hints
    }

    pub fn with_hints(mut self, hints: Vec<SupportHint>) -> Self {
        self.hints = hints;
        self
    }

    /// The image of the scheme under the substitution `f ↦ f(gᵀ·)` on its
    /// defining forms; support points move by `(gᵀ)⁻¹` and tangent lines
    /// by the same substitution, so the hints stay consistent.
    pub fn transformed(&self, g: &exact_core::RationalMatrix) -> Result<Self, IdealError> {
        let degree = self.length;
        let piece = self.ideal.graded_piece(degree);
        let gens: Vec<HomogeneousPolynomial> = (0..piece.rows())
            .map(|r| HomogeneousPolynomial::from_coefficient_row(degree, piece.row(r)).substitute(g))
            .collect::<Result<_, _>>()?;
        let point_map = g
            .transpose()
            .inverse()
            .ok_or(exact_core::CoreError::SingularMatrix)?;
        let hints = self
            .hints
            .iter()
            .map(|h| {
                let c = h.point.coords();
                let moved: Vec<Rational> = (0..3)
                    .map(|i| {
                        (0..3)
                            .map(|j| point_map.get(i, j).clone() * c[j].clone())
                            .sum()
                    })
                    .collect();
                Ok(SupportHint {
                    point: PointPlace::new([
                        moved[0].clone(),
                        moved[1].clone(),
                        moved[2].clone(),
                    ])?,
                    multiplicity: h.multiplicity,
                    tangent: match &h.tangent {
                        Some(t) => Some(t.substitute(g)?),
                        None => None,
                    },
                })
            })
            .collect::<Result<Vec<_>, IdealError>>()?;
        PointScheme::new(
            HomogeneousIdeal::from_generators(gens),
            self.length,
            hints,
        )
    }

    /// The colon ideal `(I : ℓ)` of the scheme by a linear form.
    pub fn residual(&self, ell: &HomogeneousPolynomial) -> HomogeneousIdeal {
        assert_eq!(ell.degree(), 1, "residual expects a linear form");
        self.ideal.colon(ell)
    }

    /// Scheme-theoretic length of the intersection with a line:
    /// `colength(I) - colength(I : ℓ)`.
    pub fn length_on_line(&self, ell: &HomogeneousPolynomial) -> Result<u32, IdealError> {
        let residual = self.residual(ell);
        let (res_len, _) = residual.stabilized_colength(self.length + 3)?;
        Ok(self.length - res_len)
    }

    /// Maximum scheme-theoretic length on any candidate line.  Candidates
    /// are the extra lines supplied by the caller plus all lines through
    /// pairs of hinted support points and all hinted tangent lines.
    pub fn collinear_profile(
        &self,
        extra_lines: &[HomogeneousPolynomial],
    ) -> Result<CollinearProfile, IdealError> {
        let mut candidates: Vec<HomogeneousPolynomial> = extra_lines.to_vec();
        for hint in &self.hints {
            if let Some(t) = &hint.tangent {
                candidates.push(t.clone());
            }
        }
        for i in 0..self.hints.len() {
            for j in i + 1..self.hints.len() {
                if let Some(line) = self.hints[i].point.line_through(&self.hints[j].point) {
                    candidates.push(line);
                }
            }
        }
        let exact = !self.hints.is_empty();
        let mut best = 0u32;
        let mut witness = None;
        for line in candidates {
            let len = self.length_on_line(&line)?;
            if len > best {
                best = len;
                witness = Some(line);
            }
        }
        Ok(CollinearProfile {
            max_length: best,
            witness_line: witness,
            exact,
        })
    }

    /// Whether the scheme lies on a (possibly singular) conic.
    pub fn contained_in_conic(&self) -> bool {
        self.ideal.dim_piece(2) >= 1
    }

    /// The underlying cycle, when support hints fully account for the
    /// length.
    pub fn cycle(&self) -> Result<Cycle, IdealError> {
        let total: u32 = self.hints.iter().map(|h| h.multiplicity).sum();
        if self.hints.is_empty() || total != self.length {
            return Err(IdealError::HintsMissing);
        }
        Cycle::new(
            self.hints
                .iter()
                .map(|h| (h.point.clone(), h.multiplicity))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduced_points;
    use exact_core::{parse_polynomial, rat};

    fn pt(a: i64, b: i64, c: i64) -> PointPlace {
        PointPlace::new([rat(a), rat(b), rat(c)]).unwrap()
    }

    #[test]
    fn line_through_and_membership() {
        let p = pt(0, 0, 1);
        let q = pt(0, 1, 0);
        let line = p.line_through(&q).unwrap();
        // the line through (0:0:1) and (0:1:0) is x = 0
        assert!(pt(0, 5, 7).on_line(&line));
        assert!(!pt(1, 0, 0).on_line(&line));
        assert!(p.line_through(&p).is_none());
    }

    #[test]
    fn profile_of_collinear_points() {
        // 4 points on x = 0, one off
        let z = reduced_points(&[pt(0, 0, 1), pt(0, 1, 0), pt(0, 1, 1), pt(0, 1, 2), pt(1, 0, 0)])
            .unwrap();
        let profile = z.collinear_profile(&[]).unwrap();
        assert_eq!(profile.max_length, 4);
        assert!(profile.exact);
        let x = parse_polynomial("x").unwrap();
        assert_eq!(z.length_on_line(&x).unwrap(), 4);
    }

    #[test]
    fn generic_points_profile_two() {
        let z = reduced_points(&[pt(0, 0, 1), pt(0, 1, 0), pt(1, 0, 0), pt(1, 1, 1), pt(1, 2, 4)])
            .unwrap();
        let profile = z.collinear_profile(&[]).unwrap();
        assert_eq!(profile.max_length, 2);
    }

    #[test]
    fn five_points_lie_on_conic() {
        let z = reduced_points(&[pt(0, 0, 1), pt(0, 1, 0), pt(1, 0, 0), pt(1, 1, 1), pt(1, 2, 4)])
            .unwrap();
        assert!(z.contained_in_conic());
    }

    #[test]
    fn line_misses_reduced_scheme() {
        let z = reduced_points(&[pt(1, 1, 1), pt(1, 2, 4)]).unwrap();
        let ell = parse_polynomial("x").unwrap();
        assert_eq!(z.length_on_line(&ell).unwrap(), 0);
    }

    #[test]
    fn cycle_chow_counts() {
        let cycle = Cycle::new(vec![(pt(0, 0, 1), 2), (pt(0, 1, 0), 2), (pt(1, 0, 0), 2)]).unwrap();
        assert_eq!(cycle.total(), 6);
        assert_eq!(cycle.max_point_multiplicity().unwrap().1, 2);
        let (mass, line) = cycle.max_collinear_multiplicity();
        assert_eq!(mass, 4);
        assert!(line.is_some());
    }
}
