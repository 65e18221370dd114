use exact_core::{HomogeneousPolynomial, Monomial, Rational};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::PointPlace;

/// Deterministic sampler for "general" rational data.
///
/// All generic coefficients in the system flow from a single 64-bit seed so
/// runs are reproducible.  The open conditions a construction needs (e.g.
/// "both extreme coefficients nonzero") are enforced by resampling, never
/// silently assumed.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// A small integer in `[-9, 9]`.
    pub fn small_int(&mut self) -> Rational {
        Rational::from_integer(self.rng.gen_range(-9i64..=9).into())
    }

    /// A small nonzero integer.
    pub fn small_nonzero(&mut self) -> Rational {
        loop {
            let v = self.small_int();
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Binary form of the given degree in the variables with indices
    /// `v1, v2` (0 = x, 1 = y, 2 = z), written
    /// `a_0·v1^d + a_1·v1^{d-1}v2 + … + a_d·v2^d`.
    /// Coefficients whose index appears in `nonzero` are resampled until
    /// nonzero.
    pub fn binary_form(&mut self, v1: usize, v2: usize, degree: u32, nonzero: &[usize]) -> HomogeneousPolynomial {
        assert!(v1 < 3 && v2 < 3 && v1 != v2);
        let mono = |e1: u32, e2: u32| {
            let mut exps = [0u32; 3];
            exps[v1] = e1;
            exps[v2] = e2;
            Monomial::new(exps[0], exps[1], exps[2])
        };
        let mut p = HomogeneousPolynomial::zero(degree);
        for i in 0..=degree {
            let c = if nonzero.contains(&(i as usize)) {
                self.small_nonzero()
            } else {
                self.small_int()
            };
            p.add_term(mono(degree - i, i), c);
        }
        p
    }

    /// A random rational point, avoiding the listed points.
    pub fn point_avoiding(&mut self, avoid: &[PointPlace]) -> PointPlace {
        loop {
            let p = PointPlace::new([self.small_int(), self.small_int(), self.small_nonzero()])
                .expect("last coordinate nonzero");
            if !avoid.contains(&p) {
                return p;
            }
        }
    }

    /// `count` pairwise-distinct points in general position: no three of
    /// them collinear, and none on the listed excluded lines.
    pub fn general_points(
        &mut self,
        count: usize,
        excluded_lines: &[HomogeneousPolynomial],
    ) -> Vec<PointPlace> {
        let mut points: Vec<PointPlace> = Vec::with_capacity(count);
        'outer: while points.len() < count {
            let p = self.point_avoiding(&points);
            for line in excluded_lines {
                if p.on_line(line) {
                    continue 'outer;
                }
            }
            // reject if p is collinear with any existing pair
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    if let Some(line) = points[i].line_through(&points[j]) {
                        if p.on_line(&line) {
                            continue 'outer;
                        }
                    }
                }
            }
            points.push(p);
        }
        points
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::parse_polynomial;

    #[test]
    fn deterministic_per_seed() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..10 {
            assert_eq!(a.small_int(), b.small_int());
        }
        let fa = a.binary_form(0, 1, 4, &[0, 4]);
        let fb = b.binary_form(0, 1, 4, &[0, 4]);
        assert_eq!(fa, fb);
    }

    #[test]
    fn nonzero_constraints_hold() {
        for seed in 0..20 {
            let mut s = Sampler::new(seed);
            let f = s.binary_form(1, 2, 5, &[0, 5]);
            assert!(!f.coefficient(&Monomial::new(0, 5, 0)).is_zero());
            assert!(!f.coefficient(&Monomial::new(0, 0, 5)).is_zero());
        }
    }

    #[test]
    fn general_points_avoid_collinearity() {
        let mut s = Sampler::new(11);
        let ell = parse_polynomial("x").unwrap();
        let pts = s.general_points(6, &[ell.clone()]);
        assert_eq!(pts.len(), 6);
        for p in &pts {
            assert!(!p.on_line(&ell));
        }
        for i in 0..6 {
            for j in i + 1..6 {
                let line = pts[i].line_through(&pts[j]).unwrap();
                for k in 0..6 {
                    if k != i && k != j {
                        assert!(!pts[k].on_line(&line));
                    }
                }
            }
        }
    }
}
