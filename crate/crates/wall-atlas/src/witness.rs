//! Builders for the wall witness configurations and the per-length wall
//! table.
//!
//! Each wall family comes with a distinguished destabilizing one-parameter
//! subgroup and a base degree for the affine interpolation of μ; a
//! [`WallRecord`] packages the three together with the exact wall
//! position.

use exact_core::{ratio, HomogeneousPolynomial, Monomial, OneParamSubgroup, Rational};

use graded_ideal::{
    catalog_witness, HomogeneousIdeal, PointPlace, PointScheme, Sampler, SupportHint, WitnessName,
};
use num_traits::{One, Zero};

use crate::forms::{m_collinear, m_conic, m_curvilinear, CoefficientCase};
use crate::AtlasError;

/// The three witness families, keyed by their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallFamily {
    /// A curvilinear point of length `n - l` together with `l` points in
    /// general position.
    Curvilinear { n: u32, l: u32 },
    /// `l` points on a line together with a triangular number
    /// `Δ(s) = n - l` of further points.
    Collinear { n: u32, l: u32, s: u32 },
    /// `n` points on a smooth conic.
    Conic { n: u32 },
}

/// A wall together with its witness family, the subgroup whose μ changes
/// sign there, and the interpolation base degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallRecord {
    pub family: WallFamily,
    pub m_star: Rational,
    pub destabilizer: OneParamSubgroup,
    pub base_degree: u32,
}

impl WallRecord {
    /// Validate the family parameters and fill in the wall data.
    pub fn new(family: WallFamily) -> Result<Self, AtlasError> {
        let (m_star, destabilizer, base_degree) = match family {
            WallFamily::Curvilinear { n, l } => {
                (m_curvilinear(n, l)?, OneParamSubgroup::lambda1(), l)
            }
            WallFamily::Collinear { n, l, s } => (
                m_collinear(n, l, s)?,
                OneParamSubgroup::lambda_r(ratio(-1, 2)),
                l,
            ),
            WallFamily::Conic { n } => (m_conic(n)?, OneParamSubgroup::lambda0(), (n + 1) / 2),
        };
        Ok(WallRecord {
            family,
            m_star,
            destabilizer,
            base_degree,
        })
    }

    /// Length of the subschemes this wall concerns.
    pub fn length(&self) -> u32 {
        match self.family {
            WallFamily::Curvilinear { n, .. }
            | WallFamily::Collinear { n, .. }
            | WallFamily::Conic { n } => n,
        }
    }
}

/// Binary form in the variables `v1, v2`, sampled with the coefficient
/// pattern the case requires: both extreme coefficients nonzero, or the
/// leading coefficient forced to vanish with the next and the trailing one
/// nonzero.
fn cased_binary_form(
    sampler: &mut Sampler,
    v1: usize,
    v2: usize,
    degree: u32,
    case: CoefficientCase,
) -> HomogeneousPolynomial {
    match case {
        CoefficientCase::Generic => sampler.binary_form(v1, v2, degree, &[0, degree as usize]),
        CoefficientCase::LeadingZero => {
            let mono = |e1: u32, e2: u32| {
                let mut exps = [0u32; 3];
                exps[v1] = e1;
                exps[v2] = e2;
                Monomial::new(exps[0], exps[1], exps[2])
            };
            let mut p = HomogeneousPolynomial::zero(degree);
            for i in 1..=degree {
                let c = if i == 1 || i == degree {
                    sampler.small_nonzero()
                } else {
                    sampler.small_int()
                };
                p.add_term(mono(degree - i, i), c);
            }
            p
        }
    }
}

fn e(i: usize) -> PointPlace {
    let mut coords = [Rational::zero(), Rational::zero(), Rational::zero()];
    coords[i] = Rational::one();
    PointPlace::new(coords).expect("coordinate vertex")
}

/// Witness for the curvilinear family: a length-`(n-l)` curvilinear point
/// at `(0:0:1)` tangent to `x = 0` together with `l` points on the line
/// `z = 0`, cut by a degree-`l` binary form in `x, y`.
fn curvilinear_witness(
    n: u32,
    l: u32,
    case: CoefficientCase,
    seed: u64,
) -> Result<PointScheme, AtlasError> {
    m_curvilinear(n, l)?; // validates the domain
    let mut sampler = Sampler::new(seed);
    let r_l = cased_binary_form(&mut sampler, 0, 1, l, case);
    let generators = vec![
        HomogeneousPolynomial::monomial(Monomial::new(1, 0, 1)),
        HomogeneousPolynomial::monomial(Monomial::new(0, n - l, 1)),
        r_l,
    ];
    let ideal = HomogeneousIdeal::from_generators(generators);
    let hints = vec![SupportHint {
        point: e(2),
        multiplicity: n - l,
        tangent: Some(HomogeneousPolynomial::x()),
    }];
    Ok(PointScheme::new(ideal, n, hints)?)
}

/// Witness with a corner-cut point of length `Δ(s) + k` at `(1:0:0)` and
/// `l` points on the line `x = 0`.  With `k = 0` this is the collinear
/// family witness.
fn corner_witness(
    s: u32,
    k: u32,
    l: u32,
    n: u32,
    case: CoefficientCase,
    seed: u64,
) -> Result<PointScheme, AtlasError> {
    let mut sampler = Sampler::new(seed);
    let p_l = cased_binary_form(&mut sampler, 1, 2, l, case);
    let mut generators = Vec::with_capacity(s as usize + 2);
    for i in 0..=s {
        let z_exp = if i <= s - k { i } else { i + 1 };
        generators.push(HomogeneousPolynomial::monomial(Monomial::new(
            1,
            s - i,
            z_exp,
        )));
    }
    generators.push(p_l);
    let ideal = HomogeneousIdeal::from_generators(generators);
    let hints = vec![SupportHint {
        point: e(0),
        multiplicity: s * (s + 1) / 2 + k,
        tangent: None,
    }];
    Ok(PointScheme::new(ideal, n, hints)?)
}

/// The witness configuration of a wall record, with the generic
/// coefficient pattern.
pub fn witness(record: &WallRecord, seed: u64) -> Result<PointScheme, AtlasError> {
    witness_with_case(record, CoefficientCase::Generic, seed)
}

/// The witness configuration of a wall record with an explicit coefficient
/// case.  The conic family has no degenerate case.
pub fn witness_with_case(
    record: &WallRecord,
    case: CoefficientCase,
    seed: u64,
) -> Result<PointScheme, AtlasError> {
    match record.family {
        WallFamily::Curvilinear { n, l } => curvilinear_witness(n, l, case, seed),
        WallFamily::Collinear { n, l, s } => corner_witness(s, 0, l, n, case, seed),
        WallFamily::Conic { n } => {
            if case != CoefficientCase::Generic {
                return Err(AtlasError::Domain(
                    "the conic witness has no degenerate coefficient case".into(),
                ));
            }
            let name = if n % 2 == 0 {
                WitnessName::ConicEven { k: n / 2 }
            } else {
                WitnessName::ConicOdd { k: (n + 1) / 2 }
            };
            Ok(catalog_witness(&name)?)
        }
    }
}

/// Witness for the top wall: a corner-cut point of length `Δ(s) + k` plus
/// `l` points on a line (`l ≥ s + 1`), of total length `Δ(s) + k + l`.
pub fn witness_largest(s: u32, k: u32, l: u32, seed: u64) -> Result<PointScheme, AtlasError> {
    if s == 0 || k > s || l < s + 1 {
        return Err(AtlasError::Domain(format!(
            "corner-cut witness needs 1 <= s, 0 <= k <= s, l >= s + 1, got s = {s}, k = {k}, l = {l}"
        )));
    }
    let n = s * (s + 1) / 2 + k + l;
    corner_witness(s, k, l, n, CoefficientCase::Generic, seed)
}

/// All walls the three families produce for length `n`, sorted by
/// decreasing wall position.
pub fn wall_table(n: u32) -> Result<Vec<WallRecord>, AtlasError> {
    let mut records = Vec::new();
    for l in 1..n {
        if 2 * l >= n && 3 * l < 2 * n {
            records.push(WallRecord::new(WallFamily::Curvilinear { n, l })?);
        }
    }
    let mut s = 1u32;
    while s * (s + 1) / 2 < n {
        let l = n - s * (s + 1) / 2;
        if s * s <= l && l < s * (s + 1) {
            records.push(WallRecord::new(WallFamily::Collinear { n, l, s })?);
        }
        s += 1;
    }
    if n >= 5 {
        records.push(WallRecord::new(WallFamily::Conic { n })?);
    }
    records.sort_by(|a, b| b.m_star.cmp(&a.m_star));
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{
        largest_git_wall, mu_collinear_pair, mu_conic_pair, mu_curvilinear_pair,
        mu_largest_witness,
    };
    use exact_core::rat;
    use hilbert_git::mu_integer;

    fn lam(a: i64, b: i64) -> OneParamSubgroup {
        OneParamSubgroup::new(rat(a), rat(b)).expect("subgroup")
    }

    #[test]
    fn curvilinear_pairs_match_direct_computation() {
        let probes = [(1, 1), (1, 2), (2, 1), (0, 1), (3, -1), (-1, 2), (1, -2)];
        for (n, l) in [(5u32, 3u32), (6, 3), (7, 4), (8, 4), (8, 5), (9, 5)] {
            for case in [CoefficientCase::Generic, CoefficientCase::LeadingZero] {
                let record = WallRecord::new(WallFamily::Curvilinear { n, l }).unwrap();
                let z = witness_with_case(&record, case, 90 + n as u64 + l as u64).unwrap();
                assert_eq!(z.length(), n);
                for (a, b) in probes {
                    let (mu_l, mu_l1) =
                        mu_curvilinear_pair(n, l, case, &rat(a), &rat(b)).unwrap();
                    let subgroup = lam(a, b);
                    assert_eq!(
                        mu_integer(&z, l, &subgroup).unwrap(),
                        mu_l,
                        "n={n} l={l} {case:?} a={a} b={b}"
                    );
                    assert_eq!(
                        mu_integer(&z, l + 1, &subgroup).unwrap(),
                        mu_l1,
                        "n={n} l={l} {case:?} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn collinear_pairs_match_direct_computation() {
        let probes = [(1, 1), (1, -2), (2, -1), (0, -1), (1, 0), (-1, -1), (3, -2)];
        for (n, l, s) in [(7u32, 4u32, 2u32), (8, 5, 2)] {
            for case in [CoefficientCase::Generic, CoefficientCase::LeadingZero] {
                let record = WallRecord::new(WallFamily::Collinear { n, l, s }).unwrap();
                let z = witness_with_case(&record, case, 700 + n as u64).unwrap();
                assert_eq!(z.length(), n);
                for (a, b) in probes {
                    let (mu_l, mu_l1) =
                        mu_collinear_pair(n, l, s, case, &rat(a), &rat(b)).unwrap();
                    let subgroup = lam(a, b);
                    assert_eq!(
                        mu_integer(&z, l, &subgroup).unwrap(),
                        mu_l,
                        "n={n} l={l} s={s} {case:?} a={a} b={b}"
                    );
                    assert_eq!(
                        mu_integer(&z, l + 1, &subgroup).unwrap(),
                        mu_l1,
                        "n={n} l={l} s={s} {case:?} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn conic_pairs_match_direct_computation() {
        let probes = [(1, 1), (1, -1), (0, 1), (0, -2), (2, 3), (3, -2), (1, 0)];
        for n in 5..=10u32 {
            let record = WallRecord::new(WallFamily::Conic { n }).unwrap();
            let z = witness(&record, 0).unwrap();
            assert_eq!(z.length(), n);
            let k = (n + 1) / 2;
            for (a, b) in probes {
                let (mu_k, mu_k1) = mu_conic_pair(n, &rat(a), &rat(b)).unwrap();
                let subgroup = lam(a, b);
                assert_eq!(mu_integer(&z, k, &subgroup).unwrap(), mu_k, "n={n} a={a} b={b}");
                assert_eq!(
                    mu_integer(&z, k + 1, &subgroup).unwrap(),
                    mu_k1,
                    "n={n} a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn corner_cut_witness_matches_closed_form() {
        let half = OneParamSubgroup::lambda_r(ratio(-1, 2));
        for (s, k, l) in [
            (1u32, 0u32, 3u32),
            (1, 1, 3),
            (1, 0, 4),
            (1, 1, 4),
            (2, 0, 4),
            (2, 1, 4),
            (2, 2, 4),
            (2, 0, 5),
            (2, 1, 5),
            (3, 0, 5),
        ] {
            let z = witness_largest(s, k, l, 40 + s as u64 * 10 + k as u64).unwrap();
            assert_eq!(
                mu_integer(&z, l, &half).unwrap(),
                mu_largest_witness(s, k, l).unwrap(),
                "s={s} k={k} l={l}"
            );
        }
    }

    #[test]
    fn top_wall_witness_agrees_end_to_end() {
        // the collinear configuration changing stability at the top wall
        // has positive μ against the halving subgroup
        let half = OneParamSubgroup::lambda_r(ratio(-1, 2));
        for n in [4u32, 5, 7, 8, 10, 11, 13] {
            let w = largest_git_wall(n).unwrap();
            let z = witness_largest(w.s, w.k, w.collinear_length, 3 + n as u64).unwrap();
            assert_eq!(z.length(), n);
            let direct = mu_integer(&z, w.collinear_length, &half).unwrap();
            assert_eq!(direct, w.mu_witness, "n={n}");
            assert!(direct > rat(0), "n={n}");
        }
    }

    #[test]
    fn wall_tables_for_small_lengths() {
        let t5 = wall_table(5).unwrap();
        assert_eq!(t5.len(), 2);
        assert!(matches!(t5[0].family, WallFamily::Curvilinear { n: 5, l: 3 }));
        assert_eq!(t5[0].m_star, rat(3));
        assert!(matches!(t5[1].family, WallFamily::Conic { n: 5 }));
        assert_eq!(t5[1].m_star, rat(2));

        let t7 = wall_table(7).unwrap();
        assert_eq!(t7.len(), 3);
        assert!(matches!(t7[0].family, WallFamily::Curvilinear { n: 7, l: 4 }));
        assert_eq!(t7[0].m_star, ratio(9, 2));
        assert!(matches!(t7[1].family, WallFamily::Collinear { n: 7, l: 4, s: 2 }));
        assert_eq!(t7[1].m_star, rat(3));
        assert!(matches!(t7[2].family, WallFamily::Conic { n: 7 }));
        assert_eq!(t7[2].m_star, rat(3));

        let t8 = wall_table(8).unwrap();
        assert_eq!(t8[0].m_star, rat(9));
        assert!(matches!(t8[0].family, WallFamily::Curvilinear { n: 8, l: 5 }));
        assert_eq!(t8[1].m_star, rat(6));
        assert!(matches!(t8[1].family, WallFamily::Collinear { n: 8, l: 5, s: 2 }));
    }

    #[test]
    fn tables_are_sorted_and_lengths_validate() {
        for n in 4..=12u32 {
            let table = wall_table(n).unwrap();
            for pair in table.windows(2) {
                assert!(pair[0].m_star >= pair[1].m_star, "n={n}");
            }
            for record in &table {
                assert_eq!(record.length(), n);
                let z = witness(record, 17).unwrap();
                assert_eq!(z.length(), n, "{:?}", record.family);
            }
        }
    }

    #[test]
    fn conic_rejects_degenerate_case() {
        let record = WallRecord::new(WallFamily::Conic { n: 6 }).unwrap();
        assert!(matches!(
            witness_with_case(&record, CoefficientCase::LeadingZero, 0),
            Err(AtlasError::Domain(_))
        ));
    }

    #[test]
    fn witnesses_are_deterministic_per_seed() {
        let record = WallRecord::new(WallFamily::Curvilinear { n: 7, l: 4 }).unwrap();
        let a = witness(&record, 9).unwrap();
        let b = witness(&record, 9).unwrap();
        assert!(a.ideal().equal_up_to(b.ideal(), 8));
    }
}
