//! Closed-form wall positions and the matching closed-form values of the
//! Hilbert-Mumford index on the witness families.
//!
//! Every function here is a polynomial or rational expression in the family
//! parameters, evaluated exactly.  The companion witness builders produce
//! the ideals these formulas describe, and the test suite pins the two
//! against each other through the direct state-polytope computation.

use exact_core::{rat, ratio, Rational};
use num_traits::Zero;

use crate::AtlasError;

/// Which open stratum of witness coefficients applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientCase {
    /// Both extreme coefficients of the binary form are nonzero.
    Generic,
    /// The leading coefficient vanishes while the next one and the trailing
    /// one are nonzero.
    LeadingZero,
}

fn check_curvilinear(n: u32, l: u32) -> Result<(), AtlasError> {
    if 2 * l >= n && 3 * l < 2 * n {
        Ok(())
    } else {
        Err(AtlasError::Domain(format!(
            "fat-point family needs n/2 <= l < 2n/3, got n = {n}, l = {l}"
        )))
    }
}

fn check_collinear(n: u32, l: u32, s: u32) -> Result<(), AtlasError> {
    if s == 0 || n <= l || n - l != s * (s + 1) / 2 {
        return Err(AtlasError::Domain(format!(
            "collinear family needs n - l to be the triangular number of s, got n = {n}, l = {l}, s = {s}"
        )));
    }
    if s * s <= l && l < s * (s + 1) {
        Ok(())
    } else {
        Err(AtlasError::Domain(format!(
            "collinear family needs s^2 <= l < s(s+1), got l = {l}, s = {s}"
        )))
    }
}

fn check_conic(n: u32) -> Result<(), AtlasError> {
    if n >= 5 {
        Ok(())
    } else {
        Err(AtlasError::Domain(format!(
            "conic family needs length at least 5, got n = {n}"
        )))
    }
}

/// Wall position `3(n - l)(n - l - 1) / (2(2n - 3l))` for a length-`(n-l)`
/// curvilinear point together with `l` residual points.
pub fn m_curvilinear(n: u32, l: u32) -> Result<Rational, AtlasError> {
    check_curvilinear(n, l)?;
    let (n, l) = (n as i64, l as i64);
    Ok(ratio(3 * (n - l) * (n - l - 1), 2 * (2 * n - 3 * l)))
}

/// Wall position `s(s + 1)(s - 1) / (s^2 + s - l)` for `l` collinear points
/// together with a triangular number `Δ(s) = n - l` of residual points.
pub fn m_collinear(n: u32, l: u32, s: u32) -> Result<Rational, AtlasError> {
    check_collinear(n, l, s)?;
    let (l, s) = (l as i64, s as i64);
    Ok(ratio(s * (s + 1) * (s - 1), s * s + s - l))
}

/// Wall position `(n - 1)/2` for `n` points on a conic.
pub fn m_conic(n: u32) -> Result<Rational, AtlasError> {
    check_conic(n)?;
    Ok(ratio(n as i64 - 1, 2))
}

/// Write `m = Δ(s) + k` with `s >= 1` and `0 <= k <= s`; unique when
/// `m >= 1`.
pub fn triangular_decompose(m: u32) -> Option<(u32, u32)> {
    if m == 0 {
        return None;
    }
    let mut s = 1u32;
    loop {
        let delta = s * (s + 1) / 2;
        if m >= delta && m - delta <= s {
            return Some((s, m - delta));
        }
        if delta > m {
            return None;
        }
        s += 1;
    }
}

/// The top wall for `n` points (defined when `3` does not divide `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargestWall {
    /// Wall index `⌊2n/3⌋`.
    pub l: u32,
    /// Wall position `m_{⌊2n/3⌋}`.
    pub m: Rational,
    /// Whether the wall lies in the interior of the ample cone.
    pub interior: bool,
    /// Length `⌈2n/3⌉` of the collinear subscheme whose stability changes.
    pub collinear_length: u32,
    /// Triangular decomposition `n - ⌈2n/3⌉ = Δ(s) + k`.
    pub s: u32,
    pub k: u32,
    /// Index value of the collinear witness against the halving subgroup,
    /// positive on the unstable side.
    pub mu_witness: Rational,
}

/// Index value `(s^3 - ls^2 + 3ks - ls - s + l^2 - 2kl)/2` of the witness
/// made of a corner-cut point of length `Δ(s) + k` and `l` collinear
/// points, measured against the subgroup with weights `(1, -1/2, -1/2)` at
/// base degree `l`.
pub fn mu_largest_witness(s: u32, k: u32, l: u32) -> Result<Rational, AtlasError> {
    if s == 0 || k > s || l < s + 1 {
        return Err(AtlasError::Domain(format!(
            "corner-cut witness needs 1 <= s, 0 <= k <= s, l >= s + 1, got s = {s}, k = {k}, l = {l}"
        )));
    }
    let (s, k, l) = (s as i64, k as i64, l as i64);
    Ok(ratio(
        s * s * s - l * s * s + 3 * k * s - l * s - s + l * l - 2 * k * l,
        2,
    ))
}

/// The top wall `m_{⌊2n/3⌋}` together with its collinear witness data.
pub fn largest_git_wall(n: u32) -> Result<LargestWall, AtlasError> {
    if n % 3 == 0 {
        return Err(AtlasError::DivisibleByThree(n));
    }
    if n < 4 {
        return Err(AtlasError::Domain(format!(
            "the top wall needs at least 4 points, got n = {n}"
        )));
    }
    let l = 2 * n / 3;
    let collinear_length = l + 1;
    let (s, k) = triangular_decompose(n - collinear_length)
        .expect("n - ⌈2n/3⌉ >= 1 for n >= 4 with 3 ∤ n");
    Ok(LargestWall {
        l,
        m: m_curvilinear(n, l)?,
        interior: n >= 11 || n == 8,
        collinear_length,
        s,
        k,
        mu_witness: mu_largest_witness(s, k, collinear_length)?,
    })
}

/// `-(a/2)·p - (b/2)·q` for integer polynomial values `p`, `q`.
fn neg_half_combo(p: i64, q: i64, a: &Rational, b: &Rational) -> Rational {
    ratio(-p, 2) * a + ratio(-q, 2) * b
}

/// Index values `(μ_l, μ_{l+1})` of the fat-point-plus-line witness against
/// the diagonal subgroup with weights `(a, b, -a-b)`.
pub fn mu_curvilinear_pair(
    n: u32,
    l: u32,
    case: CoefficientCase,
    a: &Rational,
    b: &Rational,
) -> Result<(Rational, Rational), AtlasError> {
    check_curvilinear(n, l)?;
    let (n, l) = (n as i64, l as i64);
    let q4 = 4 * l * l - 4 * l * n + n * n;
    let q5 = 5 * l * l - 6 * l * n + 2 * n * n;
    let below = a < b;
    let mu_l = match (case, below) {
        (CoefficientCase::Generic, true) => neg_half_combo(q4 - n, q5 + 3 * l - 2 * n, a, b),
        (CoefficientCase::LeadingZero, true) => {
            neg_half_combo(q4 - n + 2, q5 + 3 * l - 2 * n - 2, a, b)
        }
        (_, false) => neg_half_combo(q4 + 2 * l - n, q5 + l - 2 * n, a, b),
    };
    let mu_l1 = match (case, below) {
        (CoefficientCase::Generic, true) => {
            neg_half_combo(q4 + 2 * l - 3 * n, q5 + 7 * l - 4 * n, a, b)
        }
        (CoefficientCase::LeadingZero, true) => {
            neg_half_combo(q4 + 2 * l - 3 * n + 4, q5 + 7 * l - 4 * n - 4, a, b)
        }
        (_, false) => neg_half_combo(q4 + 6 * l - 3 * n, q5 + 3 * l - 4 * n, a, b),
    };
    Ok((mu_l, mu_l1))
}

/// Index value of the fat-point-plus-line witness at its own wall; never
/// positive on the whole diagonal torus.
pub fn mu_curvilinear_at_wall(
    n: u32,
    l: u32,
    case: CoefficientCase,
    a: &Rational,
    b: &Rational,
) -> Result<Rational, AtlasError> {
    check_curvilinear(n, l)?;
    let (n, l) = (n as i64, l as i64);
    let denom = 2 * (2 * n - 3 * l);
    let num = if a < b {
        match case {
            CoefficientCase::Generic => {
                3 * l * l * l - l * l * n - 2 * l * n * n + n * n * n - 3 * l * l + 3 * l * n
                    - n * n
            }
            CoefficientCase::LeadingZero => {
                3 * l * l * l - l * l * n - 2 * l * n * n + n * n * n - 12 * l * l + 13 * l * n
                    - 4 * n * n
                    + 3 * l
                    - n
            }
        }
    } else {
        -(2 * l - n) * (3 * l * l - 3 * l * n + n * n - n)
    };
    Ok(ratio(num, denom) * (a.clone() - b.clone()))
}

/// Index values `(μ_l, μ_{l+1})` of the collinear-points witness against
/// the diagonal subgroup with weights `(a, b, -a-b)`.
pub fn mu_collinear_pair(
    n: u32,
    l: u32,
    s: u32,
    case: CoefficientCase,
    a: &Rational,
    b: &Rational,
) -> Result<(Rational, Rational), AtlasError> {
    check_collinear(n, l, s)?;
    let (l, s) = (l as i64, s as i64);
    let c = s * s * s - l * s * s + l * l - l * s;
    let upper = a.clone() + rat(2) * b >= Rational::zero();
    let (mu_l, mu_l1) = if upper {
        (
            ratio(c - l - s, 2) * a - rat(l) * b,
            ratio(c - s * s - l - 2 * s, 2) * a - rat(2 * l) * b,
        )
    } else {
        match case {
            CoefficientCase::Generic => (
                ratio(c + l - s, 2) * a + rat(l) * b,
                ratio(c - s * s + 3 * l - 2 * s, 2) * a + rat(2 * l) * b,
            ),
            CoefficientCase::LeadingZero => (
                ratio(c + l - s - 2, 2) * a + rat(l - 2) * b,
                ratio(c - s * s + 3 * l - 2 * s - 4, 2) * a + rat(2 * (l - 2)) * b,
            ),
        }
    };
    Ok((mu_l, mu_l1))
}

/// Index values `(μ_k, μ_{k+1})` of the conic witness against the diagonal
/// subgroup with weights `(a, b, -a-b)`, where `k = ⌈n/2⌉`.
pub fn mu_conic_pair(
    n: u32,
    a: &Rational,
    b: &Rational,
) -> Result<(Rational, Rational), AtlasError> {
    check_conic(n)?;
    let k = ((n + 1) / 2) as i64;
    let nonneg = *b >= Rational::zero();
    let (mu_k, mu_k1) = if n % 2 == 0 {
        if nonneg {
            (
                rat(k) * a + ratio(-k * (k - 1), 2) * b,
                rat(3 * k) * a + ratio(-(k * k + k - 6), 2) * b,
            )
        } else {
            (
                rat(k) * a + rat(k * (k - 1)) * b,
                rat(3 * k) * a + rat(k * (k + 1)) * b,
            )
        }
    } else if nonneg {
        (
            rat(2 * k - 1) * a + ratio(-(k * k - k - 2), 2) * b,
            rat(4 * k - 2) * a + ratio(-(k * k + k - 12), 2) * b,
        )
    } else {
        (
            rat(2 * k - 1) * a + rat(k * k - k + 1) * b,
            rat(4 * k - 2) * a + rat(k * k + k) * b,
        )
    };
    Ok((mu_k, mu_k1))
}

/// Index value of the conic witness at its wall `(n-1)/2`; depends only on
/// the middle weight `b` and is never positive.
pub fn mu_conic_at_wall(n: u32, b: &Rational) -> Result<Rational, AtlasError> {
    check_conic(n)?;
    let k = ((n + 1) / 2) as i64;
    let positive = *b > Rational::zero();
    Ok(if n % 2 == 0 {
        if positive {
            ratio(-(k * k - 2 * k + 3), 2) * b
        } else {
            rat(k * (k - 2)) * b
        }
    } else if positive {
        ratio(-(k * k - 3 * k + 8), 2) * b
    } else {
        rat((k - 1) * (k - 2)) * b
    })
}
