//! Corner cuts: the lattice staircases that arise as limits of generic
//! configurations.
//!
//! Working in the chart `x ≠ 0` with chart variables `y, z`, a length-`n`
//! corner cut for a non-negative weight `w = (w₁, w₂)` is the set
//! `M = { m ∈ ℕ² : w·m ≤ s }` of the `n` lattice points of lowest weight,
//! provided the `n`-th and `(n+1)`-th weights differ strictly; such an `M`
//! is automatically an order ideal.  Its complement generates a monomial
//! ideal of colength `n`.

use exact_core::{HomogeneousPolynomial, Monomial, Rational};
use num_traits::Zero;

use graded_ideal::HomogeneousIdeal;

use crate::DegenerationError;

/// Non-negative weight on the chart lattice ℕ².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeight {
    pub w1: Rational,
    pub w2: Rational,
}

impl AffineWeight {
    pub fn new(w1: Rational, w2: Rational) -> Self {
        assert!(
            !(w1 < Rational::zero() || w2 < Rational::zero()),
            "affine weights must be non-negative"
        );
        AffineWeight { w1, w2 }
    }

    pub fn of(&self, cell: (u32, u32)) -> Rational {
        self.w1.clone() * Rational::from_integer(cell.0.into())
            + self.w2.clone() * Rational::from_integer(cell.1.into())
    }
}

/// The chart weight induced by the normalized subgroup `λ_r` in the chart
/// `x ≠ 0`: `w = (1 − r, r + 2)`.
pub fn affine_weight_of(r: &Rational) -> AffineWeight {
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    AffineWeight::new(one - r.clone(), r.clone() + two)
}

/// A length-`n` corner cut: an order ideal of `n` cells strictly separated
/// from its complement by the weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerCut {
    n: u32,
    cells: Vec<(u32, u32)>,
    weight: AffineWeight,
}

impl CornerCut {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cells(&self) -> &[(u32, u32)] {
        &self.cells
    }

    pub fn weight(&self) -> &AffineWeight {
        &self.weight
    }

    pub fn contains(&self, cell: (u32, u32)) -> bool {
        self.cells.contains(&cell)
    }

    /// Minimal generators of the complement (an up-set), as chart exponent
    /// pairs `(a, b) ↔ y^a z^b`.
    pub fn complement_generators(&self) -> Vec<(u32, u32)> {
        let bound = self.n + 1;
        let mut gens = Vec::new();
        for a in 0..=bound {
            for b in 0..=bound {
                if self.contains((a, b)) {
                    continue;
                }
                let below = b == 0 || self.contains((a, b - 1));
                let left = a == 0 || self.contains((a - 1, b));
                if below && left {
                    gens.push((a, b));
                }
            }
        }
        gens
    }
}

/// The length-`n` corner cut of the weight, or a wall error when the `n`
/// lowest-weight cells are not strictly separated from the rest.
pub fn corner_cut(w: &AffineWeight, n: u32) -> Result<CornerCut, DegenerationError> {
    assert!(n >= 1, "corner cuts need positive length");
    if w.w1.is_zero() || w.w2.is_zero() {
        return Err(DegenerationError::WallWeight {
            n,
            reason: "a vanishing weight component puts infinitely many cells at equal weight"
                .into(),
        });
    }
    // with both components positive, any cell among the n lightest
    // satisfies a, b < n
    let mut cells: Vec<(u32, u32)> = (0..n + 1)
        .flat_map(|a| (0..n + 1).map(move |b| (a, b)))
        .collect();
    cells.sort_by(|x, y| w.of(*x).cmp(&w.of(*y)).then(x.cmp(y)));
    let kept = &cells[..n as usize];
    let first_out = &cells[n as usize];
    if w.of(kept[n as usize - 1]) == w.of(*first_out) {
        return Err(DegenerationError::WallWeight {
            n,
            reason: format!(
                "cells {:?} and {:?} tie at weight {}",
                kept[n as usize - 1],
                first_out,
                w.of(*first_out)
            ),
        });
    }
    let cut = CornerCut {
        n,
        cells: kept.to_vec(),
        weight: w.clone(),
    };
    // strict separation by a positive weight forces an order ideal; check
    // anyway so the invariant is load-bearing, not assumed
    for &(a, b) in &cut.cells {
        if (a > 0 && !cut.contains((a - 1, b))) || (b > 0 && !cut.contains((a, b - 1))) {
            return Err(DegenerationError::WallWeight {
                n,
                reason: format!("selected cells are not an order ideal at ({a}, {b})"),
            });
        }
    }
    Ok(cut)
}

/// The monomial ideal of a corner cut, homogenized to the plane: generated
/// by `y^a z^b` over the minimal elements `(a, b)` of the complement.
pub fn corner_cut_ideal(cut: &CornerCut) -> HomogeneousIdeal {
    let gens = cut
        .complement_generators()
        .into_iter()
        .map(|(a, b)| HomogeneousPolynomial::monomial(Monomial::new(0, a, b)))
        .collect();
    HomogeneousIdeal::from_generators(gens)
}

/// Which side of the small parameter the limit is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitSide {
    /// Small positive perturbation: defined for every `n`.
    PositiveEps,
    /// The symmetric weight itself: defined only for triangular `n`.
    Zero,
}

fn triangular(s: u32) -> u32 {
    s * (s + 1) / 2
}

/// Decompose `n = s(s+1)/2 + k` with `0 ≤ k ≤ s`.
fn staircase_shape(n: u32) -> (u32, u32) {
    // largest s with s(s+1)/2 ≤ n; then k = n − s(s+1)/2 ≤ s
    let mut s = 0;
    while triangular(s + 1) <= n {
        s += 1;
    }
    (s, n - triangular(s))
}

/// The monomial ideal that generic length-`n` configurations degenerate to
/// under the near-symmetric chart weights.  Writing `n = s(s+1)/2 + k` with
/// `0 ≤ k ≤ s`, the chart generators are `y^{s−i} z^i` for `i ≤ s − k` and
/// `y^{s−i} z^{i+1}` for `i > s − k`; at the symmetric weight itself only
/// triangular `n` admit a corner cut, with generators `y^s, …, z^s`.
pub fn generic_limit(n: u32, side: LimitSide) -> Result<HomogeneousIdeal, DegenerationError> {
    assert!(n >= 1);
    let (s, k) = staircase_shape(n);
    let gens: Vec<Monomial> = match side {
        LimitSide::Zero => {
            if k != 0 {
                return Err(DegenerationError::NotTriangular(n));
            }
            (0..=s).map(|i| Monomial::new(0, s - i, i)).collect()
        }
        LimitSide::PositiveEps => (0..=s)
            .map(|i| {
                if i <= s - k {
                    Monomial::new(0, s - i, i)
                } else {
                    Monomial::new(0, s - i, i + 1)
                }
            })
            .collect(),
    };
    Ok(HomogeneousIdeal::from_generators(
        gens.into_iter().map(HomogeneousPolynomial::monomial).collect(),
    ))
}

/// Sample description for tests: is the normalized parameter `r` off every
/// wall for length `n`?
pub fn off_wall(r: &Rational, n: u32) -> bool {
    corner_cut(&affine_weight_of(r), n).is_ok()
}
