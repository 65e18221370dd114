//! Diagonal weights on the model: the subgroup λ_r = diag(t, t^r, t^{−1−r})
//! acts on each basis section eᵢ by a character t^{wᵢ(r)} with wᵢ affine in
//! r, and the induced numerical function on coordinate vectors is the
//! minimum of the weights over the support.

use exact_core::{rat, ratio, Rational, RationalMatrix};
use num_traits::{One, ToPrimitive, Zero};

use crate::section::CoordVector;
use crate::FinalModelError;

/// The slope/intercept pairs (αᵢ, βᵢ) with wᵢ(r) = αᵢ·r + βᵢ.
pub fn weight_slopes() -> [(i64, i64); 15] {
    [
        (1, 3),
        (2, 2),
        (3, 1),
        (-1, 2),
        (-2, 0),
        (-3, -2),
        (0, 1),
        (0, 1),
        (1, 0),
        (1, 0),
        (-1, -1),
        (-1, -1),
        (2, -1),
        (0, -2),
        (-2, -3),
    ]
}

/// The 15 weights w₀(r), …, w₁₄(r).
pub fn weight_table(r: &Rational) -> [Rational; 15] {
    weight_slopes().map(|(a, b)| rat(a) * r.clone() + rat(b))
}

/// min{wᵢ(r) : aᵢ ≠ 0}: the numerical function of λ_r at the given
/// projective point.
pub fn mu14(v: &CoordVector, r: &Rational) -> Rational {
    let table = weight_table(r);
    v.support()
        .into_iter()
        .map(|i| table[i].clone())
        .min()
        .expect("coordinate vectors are nonzero")
}

/// Maximize mu14 over r ∈ [−1/2, 1].  The minimum of affine functions is
/// concave, so the maximum is attained at an interval endpoint or at a
/// crossing of two support weights; all candidates are checked exactly.
/// Returns `(max, argmax)`.
pub fn mu14_max(v: &CoordVector) -> (Rational, Rational) {
    let lo = ratio(-1, 2);
    let hi = rat(1);
    let slopes = weight_slopes();
    let support = v.support();
    let mut candidates = vec![lo.clone(), hi.clone()];
    for (pos, &i) in support.iter().enumerate() {
        for &j in support.iter().skip(pos + 1) {
            let (ai, bi) = slopes[i];
            let (aj, bj) = slopes[j];
            if ai == aj {
                continue;
            }
            let crossing = ratio(bj - bi, ai - aj);
            if crossing >= lo && crossing <= hi {
                candidates.push(crossing);
            }
        }
    }
    candidates
        .into_iter()
        .map(|r| (mu14(v, &r), r))
        .max_by(|(mu_a, r_a), (mu_b, r_b)| mu_a.cmp(mu_b).then(r_b.cmp(r_a)))
        .expect("endpoint candidates are always present")
}

/// Verdict of the coordinate support test, applied in the GIVEN
/// coordinates: instability and non-stability are orbit conditions, so a
/// firing pattern certifies the verdict while `Inconclusive` merely means
/// no conclusion without a coordinate change.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternVerdict {
    /// A diagonal subgroup has strictly positive weight minimum.
    Unstable,
    /// λ₀ has weight minimum zero (and no pattern gives a positive one).
    NonStable,
    /// The support rules out both patterns in these coordinates.
    Inconclusive,
}

/// The support test: with a₅ = a₁₀ = a₁₁ = a₁₃ = a₁₄ = 0, the point is
/// unstable when additionally a₈ = a₉ = a₁₂ = 0 (destabilized by λ_r for
/// r slightly below zero) or a₄ = 0 (destabilized by λ₁), and non-stable
/// when additionally a₁₂ = 0 (λ₀ has minimum zero).
pub fn unstable_pattern(v: &CoordVector) -> PatternVerdict {
    let a = v.coords();
    if [5, 10, 11, 13, 14].iter().any(|&i| !a[i].is_zero()) {
        return PatternVerdict::Inconclusive;
    }
    let unstable_i = [8, 9, 12].iter().all(|&i| a[i].is_zero());
    let unstable_ii = a[4].is_zero();
    if unstable_i || unstable_ii {
        return PatternVerdict::Unstable;
    }
    if a[12].is_zero() {
        return PatternVerdict::NonStable;
    }
    PatternVerdict::Inconclusive
}

/// The matrix λ_r(u^q) = diag(u^q, u^p, u^{−q−p}) for r = p/q in lowest
/// terms: substituting t = u^q keeps every basis character u^{q·wᵢ(r)}
/// integral in exponent.
pub fn lambda_r_matrix(r: &Rational, u: &Rational) -> Result<RationalMatrix, FinalModelError> {
    if u.is_zero() {
        return Err(FinalModelError::SingularMatrix);
    }
    let p = r
        .numer()
        .to_i64()
        .ok_or_else(|| FinalModelError::DegenerateParameters("r out of range".into()))?;
    let q = r
        .denom()
        .to_i64()
        .ok_or_else(|| FinalModelError::DegenerateParameters("r out of range".into()))?;
    Ok(RationalMatrix::diagonal(&[
        rational_pow(u, q),
        rational_pow(u, p),
        rational_pow(u, -q - p),
    ]))
}

pub(crate) fn rational_pow(base: &Rational, e: i64) -> Rational {
    let mut mag = Rational::one();
    for _ in 0..e.unsigned_abs() {
        mag *= base.clone();
    }
    if e < 0 {
        mag.recip()
    } else {
        mag
    }
}

/// q·wᵢ(r) as an integer exponent, for r = p/q in lowest terms.
#[cfg(test)]
pub(crate) fn integral_weight_exponent(i: usize, r: &Rational) -> i64 {
    let (alpha, beta) = weight_slopes()[i];
    let p = r.numer().to_i64().expect("small exponent");
    let q = r.denom().to_i64().expect("small exponent");
    alpha * p + beta * q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::section::{act, basis};

    #[test]
    fn printed_weight_values() {
        let at0 = weight_table(&rat(0));
        assert_eq!(at0[5], rat(-2));
        let at1 = weight_table(&rat(1));
        assert_eq!(at1[12], rat(1));
        let at_neg_half = weight_table(&ratio(-1, 2));
        assert_eq!(at_neg_half[2], ratio(-1, 2));
        assert_eq!(
            at0,
            [
                rat(3),
                rat(2),
                rat(1),
                rat(2),
                rat(0),
                rat(-2),
                rat(1),
                rat(1),
                rat(0),
                rat(0),
                rat(-1),
                rat(-1),
                rat(-1),
                rat(-2),
                rat(-3)
            ]
        );
    }

    #[test]
    fn weight_table_matches_the_action() {
        let e = basis();
        let u = rat(2);
        for r in [rat(0), rat(1), ratio(-1, 2), ratio(1, 3)] {
            let lam = lambda_r_matrix(&r, &u).unwrap();
            for (i, ei) in e.iter().enumerate() {
                let moved = act(&lam, ei).unwrap();
                let scalar = rational_pow(&u, integral_weight_exponent(i, &r));
                assert_eq!(moved, ei.scale(&scalar), "basis element {i} at r = {r}");
            }
        }
    }

    #[test]
    fn minimal_orbit_vectors_peak_at_zero() {
        for w in [rat(2), ratio(1, 2), rat(-3)] {
            let v = CoordVector::from_support(&[(4, rat(1)), (8, rat(1)), (9, w)]).unwrap();
            let (max, argmax) = mu14_max(&v);
            assert_eq!(max, rat(0));
            assert_eq!(argmax, rat(0));
        }
        let v_inf = CoordVector::from_support(&[(4, rat(1)), (9, rat(1))]).unwrap();
        let (max, argmax) = mu14_max(&v_inf);
        assert_eq!(max, rat(0));
        assert_eq!(argmax, rat(0));
    }

    #[test]
    fn first_family_pattern_is_positive_between_the_breakpoints() {
        let v = CoordVector::from_support(
            &[0, 1, 2, 3, 4, 6, 7]
                .map(|i| (i, rat(1)))
                .to_vec(),
        )
        .unwrap();
        // min{r+3, 2r+2, 3r+1, −r+2, −2r, 1, 1} > 0 exactly on (−1/3, 0)
        for r in [ratio(-1, 6), ratio(-1, 4), ratio(-1, 100)] {
            assert!(mu14(&v, &r) > rat(0));
        }
        for r in [ratio(-1, 3), rat(0), ratio(1, 2), ratio(-1, 2)] {
            assert!(mu14(&v, &r) <= rat(0));
        }
        let (max, argmax) = mu14_max(&v);
        assert!(max > rat(0));
        assert!(argmax > ratio(-1, 3) && argmax < rat(0));
    }

    #[test]
    fn isolated_coordinate_maximum_is_negative() {
        let v = CoordVector::from_support(&[(5, rat(1))]).unwrap();
        let (max, argmax) = mu14_max(&v);
        assert_eq!(max, ratio(-1, 2));
        assert_eq!(argmax, ratio(-1, 2));
    }

    #[test]
    fn support_test_fires_on_the_printed_patterns() {
        let unstable = CoordVector::from_support(
            &[0, 1, 2, 3, 6, 7].map(|i| (i, rat(1))).to_vec(),
        )
        .unwrap();
        assert_eq!(unstable_pattern(&unstable), PatternVerdict::Unstable);
        // the closed strictly semistable orbit sections satisfy the
        // non-stable pattern (they are semistable but not stable)
        let s_w = CoordVector::from_support(&[(4, rat(1)), (8, rat(1)), (9, rat(2))]).unwrap();
        assert_eq!(unstable_pattern(&s_w), PatternVerdict::NonStable);
        let non_stable = CoordVector::from_support(
            &[(0, rat(1)), (4, rat(1)), (8, rat(1)), (9, rat(1))],
        )
        .unwrap();
        assert_eq!(unstable_pattern(&non_stable), PatternVerdict::NonStable);
        let full = CoordVector::from_support(&[(4, rat(1)), (12, rat(1))]).unwrap();
        assert_eq!(unstable_pattern(&full), PatternVerdict::Inconclusive);
    }
}
