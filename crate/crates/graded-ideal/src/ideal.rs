use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use exact_core::{HomogeneousPolynomial, Monomial, Rational, RationalMatrix};
use num_traits::{One, Zero};

use crate::IdealError;

/// Number of monomials of degree `d` in three variables: C(d+2, 2).
pub fn binom2(d: u32) -> usize {
    ((d + 1) * (d + 2) / 2) as usize
}

/// Default degree cap when scanning for Hilbert-function stabilization
/// without a declared expected length.
const DEFAULT_SCAN_CAP: u32 = 48;

/// How many consecutive equal colengths count as "stabilized".
const STABLE_WINDOW: u32 = 3;

#[derive(Debug)]
enum Repr {
    /// Span of generator·monomial per degree.
    Generated(Vec<HomogeneousPolynomial>),
    /// Degree-wise subspace intersection of the parts.
    Intersection(Vec<HomogeneousIdeal>),
    /// Forms vanishing at every listed point: the kernel of the joint
    /// evaluation map, degree by degree.
    Vanishing(Vec<[Rational; 3]>),
    /// Degree-wise saturation of `inner`; pieces agree with `inner` from
    /// `stable_from` on, and below that are recovered by pushing up.
    Saturation {
        inner: Box<HomogeneousIdeal>,
        stable_from: u32,
    },
    /// Colon ideal `(inner : ell)` evaluated degree-wise.
    Colon {
        inner: Box<HomogeneousIdeal>,
        ell: HomogeneousPolynomial,
    },
}

#[derive(Debug)]
struct Inner {
    repr: Repr,
    cache: Mutex<HashMap<u32, Arc<RationalMatrix>>>,
}

/// A homogeneous ideal evaluated degree-by-degree.
///
/// Cloning is cheap (shared recipe and cache).  Graded pieces are reduced
/// row-echelon bases over the canonical descending graded-lex monomial
/// order of the degree, with zero rows removed.
#[derive(Debug, Clone)]
pub struct HomogeneousIdeal {
    inner: Arc<Inner>,
}

/// Reduce `v` against an echelon basis (rows in rref, no zero rows).
pub(crate) fn reduce_against(basis: &RationalMatrix, v: &mut [Rational]) {
    for r in 0..basis.rows() {
        let row = basis.row(r);
        let pivot = row.iter().position(|e| !e.is_zero()).expect("zero row in basis");
        if v[pivot].is_zero() {
            continue;
        }
        let factor = v[pivot].clone() / row[pivot].clone();
        for (vi, bi) in v.iter_mut().zip(row.iter()) {
            if !bi.is_zero() {
                *vi -= factor.clone() * bi.clone();
            }
        }
    }
}

/// `base^exp` by repeated multiplication (exponents here are tiny).
fn power(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base.clone();
    }
    acc
}

/// Row-reduce and drop zero rows.
pub(crate) fn echelon_basis(rows: Vec<Vec<Rational>>) -> RationalMatrix {
    if rows.is_empty() {
        return RationalMatrix::new(0, 0);
    }
    let cols = rows[0].len();
    let m = RationalMatrix::from_rows(rows);
    let (red, pivots) = m.reduced_row_echelon();
    let kept: Vec<Vec<Rational>> = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
    if kept.is_empty() {
        RationalMatrix::new(0, cols)
    } else {
        RationalMatrix::from_rows(kept)
    }
}

impl HomogeneousIdeal {
    fn from_repr(repr: Repr) -> Self {
        HomogeneousIdeal {
            inner: Arc::new(Inner {
                repr,
                cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    /// Ideal generated by the given homogeneous polynomials (zero
    /// polynomials are dropped).
    pub fn from_generators(generators: Vec<HomogeneousPolynomial>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Self::from_repr(Repr::Generated(generators))
    }

    /// The generator list, when this ideal is presented by generators.
    pub fn generators(&self) -> Option<&[HomogeneousPolynomial]> {
        match &self.inner.repr {
            Repr::Generated(g) => Some(g),
            _ => None,
        }
    }

    /// Ideal of all forms vanishing at every given point, computed as the
    /// kernel of the joint evaluation map degree by degree (much cheaper
    /// than intersecting the individual point ideals).
    pub fn vanishing_at(points: Vec<[Rational; 3]>) -> Self {
        assert!(!points.is_empty());
        Self::from_repr(Repr::Vanishing(points))
    }

    /// Degree-wise intersection (no generator recovery).
    pub fn intersect(&self, other: &HomogeneousIdeal) -> Self {
        Self::from_repr(Repr::Intersection(vec![self.clone(), other.clone()]))
    }

    /// Degree-wise intersection of several ideals.
    pub fn intersect_all(parts: Vec<HomogeneousIdeal>) -> Self {
        assert!(!parts.is_empty());
        Self::from_repr(Repr::Intersection(parts))
    }

    /// Colon ideal `(I : ℓ)` with `(I : ℓ)_m = {f : f·ℓ ∈ I_{m + deg ℓ}}`.
    pub fn colon(&self, ell: &HomogeneousPolynomial) -> Self {
        assert!(!ell.is_zero(), "colon by the zero polynomial");
        Self::from_repr(Repr::Colon {
            inner: Box::new(self.clone()),
            ell: ell.clone(),
        })
    }

    /// Echelon basis of the degree-`m` graded piece.
    pub fn graded_piece(&self, m: u32) -> Arc<RationalMatrix> {
        if let Some(hit) = self.inner.cache.lock().unwrap().get(&m) {
            return hit.clone();
        }
        let computed = Arc::new(self.compute_piece(m));
        let mut cache = self.inner.cache.lock().unwrap();
        cache.entry(m).or_insert(computed).clone()
    }

    fn compute_piece(&self, m: u32) -> RationalMatrix {
        match &self.inner.repr {
            Repr::Generated(gens) => {
                let mut rows = Vec::new();
                for g in gens {
                    if g.degree() > m {
                        continue;
                    }
                    for mu in Monomial::all_of_degree(m - g.degree()) {
                        rows.push(g.mul_monomial(&mu).coefficient_row());
                    }
                }
                if rows.is_empty() {
                    RationalMatrix::new(0, binom2(m))
                } else {
                    echelon_basis(rows)
                }
            }
            Repr::Intersection(parts) => {
                // A row space is the orthogonal complement of its kernel
                // under the standard pairing, so the intersection is the
                // kernel of the stacked annihilators of the parts.
                let ncols = binom2(m);
                let mut constraints: Vec<Vec<Rational>> = Vec::new();
                for part in parts {
                    let piece = part.graded_piece(m);
                    if piece.rows() == 0 {
                        return RationalMatrix::new(0, ncols);
                    }
                    if piece.rows() < ncols {
                        constraints.extend(piece.kernel());
                    }
                }
                if constraints.is_empty() {
                    // every part is the full space
                    let rows = Monomial::all_of_degree(m)
                        .iter()
                        .map(|mu| HomogeneousPolynomial::monomial(*mu).coefficient_row())
                        .collect();
                    return echelon_basis(rows);
                }
                let kernel = RationalMatrix::from_rows(constraints).kernel();
                if kernel.is_empty() {
                    RationalMatrix::new(0, ncols)
                } else {
                    echelon_basis(kernel)
                }
            }
            Repr::Vanishing(points) => {
                let ncols = binom2(m);
                let basis = Monomial::all_of_degree(m);
                let constraints: Vec<Vec<Rational>> = points
                    .iter()
                    .map(|p| {
                        basis
                            .iter()
                            .map(|mu| {
                                power(&p[0], mu.i) * power(&p[1], mu.j) * power(&p[2], mu.k)
                            })
                            .collect()
                    })
                    .collect();
                let kernel = RationalMatrix::from_rows(constraints).kernel();
                if kernel.is_empty() {
                    RationalMatrix::new(0, ncols)
                } else {
                    echelon_basis(kernel)
                }
            }
            Repr::Saturation { inner, stable_from } => {
                if m >= *stable_from {
                    return inner.graded_piece(m).as_ref().clone();
                }
                // the (x, y, z)-saturation agrees with the saturation by
                // (x^k, y^k, z^k), so three multipliers suffice
                let k = *stable_from - m;
                let multipliers: Vec<HomogeneousPolynomial> = [
                    Monomial::new(k, 0, 0),
                    Monomial::new(0, k, 0),
                    Monomial::new(0, 0, k),
                ]
                .map(HomogeneousPolynomial::monomial)
                .to_vec();
                inner.membership_piece(m, &multipliers)
            }
            Repr::Colon { inner, ell } => inner.membership_piece(m, std::slice::from_ref(ell)),
        }
    }

    /// `{f of degree m : f·g ∈ self for every multiplier g}`, degree-wise.
    fn membership_piece(&self, m: u32, multipliers: &[HomogeneousPolynomial]) -> RationalMatrix {
        let basis_m = Monomial::all_of_degree(m);
        let n_unknowns = basis_m.len();
        let mut constraints: Vec<Vec<Rational>> = Vec::new();
        for g in multipliers {
            let d = m + g.degree();
            let target = self.graded_piece(d);
            let n_target = binom2(d);
            // image of each unknown basis monomial, reduced mod the target
            let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n_unknowns);
            for mu in &basis_m {
                let img = g.mul_monomial(mu);
                let mut row = img.coefficient_row();
                if target.rows() > 0 {
                    reduce_against(&target, &mut row);
                }
                cols.push(row);
            }
            for j in 0..n_target {
                if cols.iter().all(|c| c[j].is_zero()) {
                    continue;
                }
                constraints.push(cols.iter().map(|c| c[j].clone()).collect());
            }
        }
        if constraints.is_empty() {
            // no conditions: the full space of degree m
            let rows = basis_m
                .iter()
                .map(|mu| HomogeneousPolynomial::monomial(*mu).coefficient_row())
                .collect();
            return echelon_basis(rows);
        }
        let kernel = RationalMatrix::from_rows(constraints).kernel();
        if kernel.is_empty() {
            RationalMatrix::new(0, n_unknowns)
        } else {
            echelon_basis(kernel)
        }
    }

    /// Dimension of the degree-`m` graded piece.
    pub fn dim_piece(&self, m: u32) -> usize {
        self.graded_piece(m).rows()
    }

    /// `C(m+2, 2) - dim I_m`.
    pub fn hilbert_colength(&self, m: u32) -> usize {
        binom2(m) - self.dim_piece(m)
    }

    /// Basis polynomials of the degree-`m` piece.
    pub fn basis_polynomials(&self, m: u32) -> Vec<HomogeneousPolynomial> {
        let piece = self.graded_piece(m);
        (0..piece.rows())
            .map(|r| HomogeneousPolynomial::from_coefficient_row(m, piece.row(r)))
            .collect()
    }

    /// Whether the polynomial lies in the graded piece of its degree.
    pub fn contains(&self, f: &HomogeneousPolynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        let piece = self.graded_piece(f.degree());
        if piece.rows() == 0 {
            return false;
        }
        let mut row = f.coefficient_row();
        reduce_against(&piece, &mut row);
        row.iter().all(Rational::is_zero)
    }

    /// Degree-wise equality up to and including `up_to`.
    pub fn equal_up_to(&self, other: &HomogeneousIdeal, up_to: u32) -> bool {
        (0..=up_to).all(|m| self.graded_piece(m) == other.graded_piece(m) || {
            let a = self.graded_piece(m);
            let b = other.graded_piece(m);
            a.rows() == b.rows() && a.row_vecs() == b.row_vecs()
        })
    }

    /// Scan the Hilbert function until it is constant over three
    /// consecutive degrees.  Returns `(stabilized colength, first degree of
    /// the window)`.
    pub fn stabilized_colength(&self, cap: u32) -> Result<(u32, u32), IdealError> {
        let mut run_value = None::<usize>;
        let mut run_start = 0u32;
        let mut run_len = 0u32;
        for m in 0..=cap {
            let c = self.hilbert_colength(m);
            if run_value == Some(c) {
                run_len += 1;
            } else {
                run_value = Some(c);
                run_start = m;
                run_len = 1;
            }
            if run_len >= STABLE_WINDOW {
                return Ok((c as u32, run_start));
            }
        }
        Err(IdealError::NotZeroDimensional(cap))
    }

    /// Stabilized colength with the default scan cap.
    pub fn colength(&self) -> Result<u32, IdealError> {
        self.stabilized_colength(DEFAULT_SCAN_CAP).map(|(n, _)| n)
    }

    /// Saturation of a zero-dimensional ideal.  When `expected_length` is
    /// given the stabilization scan is capped at `expected_length + 3` and
    /// the stabilized value is checked against it.
    pub fn saturate(&self, expected_length: Option<u32>) -> Result<HomogeneousIdeal, IdealError> {
        let cap = match expected_length {
            Some(n) => n + 3,
            None => DEFAULT_SCAN_CAP,
        };
        let (found, window_start) = self.stabilized_colength(cap)?;
        if let Some(expected) = expected_length {
            if found != expected {
                return Err(IdealError::WrongColength {
                    expected,
                    found,
                });
            }
        }
        // A constant colength window alone does not certify saturation:
        // the saturated quotient can still be strictly smaller in those
        // degrees.  The Hilbert function of a length-n scheme reaches n by
        // degree n - 1, so from max(window, n - 1) on, colength n pins the
        // graded piece to the saturated one.  Verify the plateau holds to
        // the cap.
        let stable_from = window_start.max(found.saturating_sub(1)).min(cap);
        for m in stable_from..=cap {
            if self.hilbert_colength(m) != found as usize {
                return Err(IdealError::WrongColength {
                    expected: found,
                    found: self.hilbert_colength(m) as u32,
                });
            }
        }
        Ok(Self::from_repr(Repr::Saturation {
            inner: Box::new(self.clone()),
            stable_from,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{parse_polynomial, rat};

    fn gens(texts: &[&str]) -> HomogeneousIdeal {
        HomogeneousIdeal::from_generators(
            texts.iter().map(|t| parse_polynomial(t).unwrap()).collect(),
        )
    }

    #[test]
    fn maximal_ideal_piece() {
        let m = gens(&["x", "y", "z"]);
        assert_eq!(m.dim_piece(1), 3);
        assert_eq!(m.hilbert_colength(0), 1);
        assert_eq!(m.hilbert_colength(5), 0);
    }

    #[test]
    fn triple_point_witness_dimension() {
        // length-5 ideal, already saturated: dim of the cubic piece is
        // 10 - 5 = 5, so the colength is the length from degree 3 on
        let i = gens(&["x*z + y^2", "x^2*y + x*y*z", "x^3 + x^2*z"]);
        assert_eq!(i.dim_piece(3), 5);
        assert_eq!(i.hilbert_colength(3), 5);
        assert_eq!(i.colength().unwrap(), 5);
    }

    #[test]
    fn intersection_matches_product_presentation() {
        // (x, y^4) ∩ (z, p) with p = y^3 + x^3 restricted appropriately:
        // check the simplest identity (x) ∩ (y) = (xy) degree-wise.
        let a = gens(&["x"]);
        let b = gens(&["y"]);
        let both = a.intersect(&b);
        let product = gens(&["x*y"]);
        assert!(both.equal_up_to(&product, 8));
    }

    #[test]
    fn intersect_self_is_identity() {
        let i = gens(&["x*z", "y^3"]);
        assert!(i.intersect(&i).equal_up_to(&i, 8));
    }

    #[test]
    fn colon_recovers_residual() {
        // ((x, y) ∩ (y, z) : x) = (y, z): removing the point (0:0:1)
        let i = gens(&["x", "y"]).intersect(&gens(&["y", "z"]));
        let residual = i.colon(&parse_polynomial("x").unwrap());
        assert!(residual.equal_up_to(&gens(&["y", "z"]), 8));
    }

    #[test]
    fn colength_of_two_points() {
        let i = gens(&["x", "y"]).intersect(&gens(&["y", "z"]));
        assert_eq!(i.colength().unwrap(), 2);
    }

    #[test]
    fn saturation_of_truncated_point() {
        // x·(x, y) = (x^2, x*y) is not saturated; its saturation should be
        // degree-wise (x) ∩ ... no: colon through, expect (x^2, xy)^sat = (x)?
        // V(x^2, xy) = V(x) set-theoretically, which is a line, so the
        // Hilbert function must NOT stabilize.
        let i = gens(&["x^2", "x*y"]);
        assert!(matches!(i.colength(), Err(IdealError::NotZeroDimensional(_))));
    }

    #[test]
    fn saturation_recovers_low_degrees() {
        // degree-shift of a point ideal: (x, y) times the maximal ideal
        let trunc = gens(&["x^2", "x*y", "x*z", "y^2", "y*z"]);
        assert_eq!(trunc.colength().unwrap(), 1);
        let sat = trunc.saturate(Some(1)).unwrap();
        assert!(sat.equal_up_to(&gens(&["x", "y"]), 8));
        // idempotent
        let sat2 = sat.saturate(Some(1)).unwrap();
        assert!(sat2.equal_up_to(&sat, 8));
    }

    #[test]
    fn saturation_never_shrinks() {
        let trunc = gens(&["x^2", "x*y", "x*z", "y^2", "y*z"]);
        let sat = trunc.saturate(None).unwrap();
        for m in 0..=8 {
            assert!(sat.dim_piece(m) >= trunc.dim_piece(m));
        }
    }

    #[test]
    fn contains_membership() {
        let i = gens(&["x*z + y^2"]);
        assert!(i.contains(&parse_polynomial("x*y*z + y^3").unwrap()));
        assert!(!i.contains(&parse_polynomial("x^2*y").unwrap()));
        let mut zero_coeff = parse_polynomial("x").unwrap();
        zero_coeff = zero_coeff.sub(&parse_polynomial("x").unwrap());
        assert!(zero_coeff.is_zero());
        assert!(i.contains(&zero_coeff));
        let _ = rat(0);
    }
}
