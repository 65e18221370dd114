//! μ as a function of the linearization parameter, destabilization scans,
//! and replayable certificates.
//!
//! For a rational parameter `m` the index is the affine interpolation
//! `μ_m = (d+1−m)·μ_d + (m−d)·μ_{d+1}` relative to an explicitly declared
//! base degree `d`; every result carries that base degree so it can be
//! replayed.  Over the normalized family `λ_r = (1, r, −1−r)`,
//! `r ∈ [−1/2, 1]`, each degree contributes the minimum of finitely many
//! affine functions of `r` (one per state-polytope vertex), so the exact
//! maximum over `r` is attained at a breakpoint or an endpoint.

use exact_core::{HomogeneousPolynomial, OneParamSubgroup, Rational, RationalMatrix};
use num_traits::{One, Zero};

use graded_ideal::PointScheme;

use crate::state::{defined_piece, mu_integer_piece, state_vertices};
use crate::GitError;

/// The polarization parameter: a positive rational `m`, or the Chow limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Linearization {
    Finite(Rational),
    Infinity,
}

impl Linearization {
    pub fn finite(m: Rational) -> Self {
        assert!(m > Rational::zero(), "the parameter must be positive");
        Linearization::Finite(m)
    }
}

/// Value of μ at a linearization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuOutcome {
    Finite(Rational),
    /// At the Chow limit only the slope `μ_{d+1} − μ_d` is meaningful;
    /// stability queries there belong to [`crate::chow_stability`].
    InfinitySlope(Rational),
}

/// The root of `m ↦ μ_m(Z, λ)` relative to a base degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MZero {
    Finite(Rational),
    Infinity,
    Indeterminate,
}

/// A replayable destabilization certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub lambda: OneParamSubgroup,
    pub conjugation: RationalMatrix,
    pub mu: Rational,
    pub base_degree: u32,
}

/// Result of the exact scan over the normalized diagonal family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalScan {
    pub max_mu: Rational,
    pub argmax_r: Rational,
    /// Present exactly when `max_mu > 0`.
    pub certificate: Option<Certificate>,
}

/// The shear-conjugated tori worth checking, indexed by the diagonal
/// subgroup the stabilizer is assumed to contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShearFamily {
    /// Stabilizer contains weights `(1, 1, −2)`: conjugate by
    /// `x ↦ x + a·y`.
    Upper,
    /// Stabilizer contains weights `(2, −1, −1)`: conjugate by
    /// `y ↦ y + a·z`.
    Lower,
}

impl ShearFamily {
    pub fn matrix(&self, a: &Rational) -> RationalMatrix {
        let (one, zero) = (Rational::one, Rational::zero);
        match self {
            // variable x ↦ x + a·y (columns carry the images)
            ShearFamily::Upper => RationalMatrix::from_rows(vec![
                vec![one(), zero(), zero()],
                vec![a.clone(), one(), zero()],
                vec![zero(), zero(), one()],
            ]),
            // variable y ↦ y + a·z
            ShearFamily::Lower => RationalMatrix::from_rows(vec![
                vec![one(), zero(), zero()],
                vec![zero(), one(), zero()],
                vec![zero(), a.clone(), one()],
            ]),
        }
    }
}

fn echelon_rows(rows: Vec<Vec<Rational>>) -> RationalMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    let (red, pivots) = RationalMatrix::from_rows(rows).reduced_row_echelon();
    let kept: Vec<Vec<Rational>> = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
    if kept.is_empty() {
        RationalMatrix::new(0, cols)
    } else {
        RationalMatrix::from_rows(kept)
    }
}

/// Graded piece of degree `m`, optionally transformed by a coordinate
/// change.
fn transformed_piece(
    z: &PointScheme,
    m: u32,
    conjugation: Option<&RationalMatrix>,
) -> Result<RationalMatrix, GitError> {
    let piece = defined_piece(z, m)?;
    match conjugation {
        None => Ok(piece.as_ref().clone()),
        Some(g) => {
            let rows = (0..piece.rows())
                .map(|r| {
                    HomogeneousPolynomial::from_coefficient_row(m, piece.row(r))
                        .substitute(g)
                        .map(|f| f.coefficient_row())
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(echelon_rows(rows))
        }
    }
}

/// `μ_m(Z, λ)` for rational `m` (or the slope at the Chow limit),
/// interpolated from the base degree `d`.
pub fn mu(
    z: &PointScheme,
    m: &Linearization,
    lambda: &OneParamSubgroup,
    base_degree: u32,
) -> Result<MuOutcome, GitError> {
    mu_conjugated(z, m, lambda, base_degree, &RationalMatrix::identity(3))
}

/// Same as [`mu`], but after the coordinate change `conjugation`: the
/// graded pieces are transformed and re-echeloned before the state weights
/// are read off.  This evaluates μ against the conjugated torus.
pub fn mu_conjugated(
    z: &PointScheme,
    m: &Linearization,
    lambda: &OneParamSubgroup,
    base_degree: u32,
    conjugation: &RationalMatrix,
) -> Result<MuOutcome, GitError> {
    let d = base_degree;
    let piece_d = transformed_piece(z, d, Some(conjugation))?;
    let piece_d1 = transformed_piece(z, d + 1, Some(conjugation))?;
    let mu_d = mu_integer_piece(&piece_d, d, lambda);
    let mu_d1 = mu_integer_piece(&piece_d1, d + 1, lambda);
    match m {
        Linearization::Infinity => Ok(MuOutcome::InfinitySlope(mu_d1 - mu_d)),
        Linearization::Finite(m) => {
            let d_rat = Rational::from_integer(d.into());
            let alpha = d_rat.clone() + Rational::one() - m.clone();
            let beta = m.clone() - d_rat;
            Ok(MuOutcome::Finite(alpha * mu_d + beta * mu_d1))
        }
    }
}

/// The root `m₀(Z, λ)` of the affine function `m ↦ μ_m` based at `d`.
pub fn m_zero(
    z: &PointScheme,
    lambda: &OneParamSubgroup,
    base_degree: u32,
) -> Result<MZero, GitError> {
    let d = base_degree;
    let piece_d = defined_piece(z, d)?;
    let piece_d1 = defined_piece(z, d + 1)?;
    let mu_d = mu_integer_piece(&piece_d, d, lambda);
    let mu_d1 = mu_integer_piece(&piece_d1, d + 1, lambda);
    if mu_d == mu_d1 {
        if mu_d.is_zero() {
            Ok(MZero::Indeterminate)
        } else {
            Ok(MZero::Infinity)
        }
    } else {
        let d_rat = Rational::from_integer(d.into());
        Ok(MZero::Finite(d_rat + mu_d.clone() / (mu_d - mu_d1)))
    }
}

/// Affine forms `a + r·b` of `⟨λ_r, v⟩` over the vertex set.
fn affine_forms(vertices: &[[u32; 3]]) -> Vec<(Rational, Rational)> {
    vertices
        .iter()
        .map(|v| {
            let (i, j, k) = (v[0] as i64, v[1] as i64, v[2] as i64);
            (
                Rational::from_integer((i - k).into()),
                Rational::from_integer((j - k).into()),
            )
        })
        .collect()
}

fn min_form_at(forms: &[(Rational, Rational)], r: &Rational) -> Rational {
    forms
        .iter()
        .map(|(a, b)| a.clone() + r.clone() * b.clone())
        .min()
        .expect("nonempty vertex set")
}

fn scan_pieces(
    piece_d: &RationalMatrix,
    piece_d1: &RationalMatrix,
    d: u32,
    m: &Rational,
) -> (Rational, Rational) {
    let forms_d = affine_forms(&state_vertices(piece_d, d));
    let forms_d1 = affine_forms(&state_vertices(piece_d1, d + 1));
    let lo = Rational::new((-1).into(), 2.into());
    let hi = Rational::one();
    let mut breakpoints = vec![lo.clone(), hi.clone()];
    for forms in [&forms_d, &forms_d1] {
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                let (a1, b1) = &forms[i];
                let (a2, b2) = &forms[j];
                if b1 != b2 {
                    let r = (a2.clone() - a1.clone()) / (b1.clone() - b2.clone());
                    if r >= lo && r <= hi {
                        breakpoints.push(r);
                    }
                }
            }
        }
    }
    breakpoints.sort();
    breakpoints.dedup();
    let d_rat = Rational::from_integer(d.into());
    let alpha = d_rat.clone() + Rational::one() - m.clone();
    let beta = m.clone() - d_rat;
    let mut best: Option<(Rational, Rational)> = None;
    for r in breakpoints {
        let value = alpha.clone() * min_form_at(&forms_d, &r)
            + beta.clone() * min_form_at(&forms_d1, &r);
        let better = match &best {
            None => true,
            Some((bv, _)) => value > *bv,
        };
        if better {
            best = Some((value, r));
        }
    }
    best.expect("at least the endpoints are evaluated")
}

/// Exact maximization of `μ_m(Z, λ_r)` over the normalized family
/// `r ∈ [−1/2, 1]`.  A certificate is attached iff the maximum is
/// positive; a zero maximum marks the semistable boundary against this
/// torus.
pub fn destabilize_diagonal(
    z: &PointScheme,
    m: &Rational,
    base_degree: u32,
) -> Result<DiagonalScan, GitError> {
    let piece_d = defined_piece(z, base_degree)?;
    let piece_d1 = defined_piece(z, base_degree + 1)?;
    Ok(scan_to_verdict(
        scan_pieces(&piece_d, &piece_d1, base_degree, m),
        RationalMatrix::identity(3),
        base_degree,
    ))
}

fn scan_to_verdict(
    (max_mu, argmax_r): (Rational, Rational),
    conjugation: RationalMatrix,
    base_degree: u32,
) -> DiagonalScan {
    let certificate = if max_mu > Rational::zero() {
        Some(Certificate {
            lambda: OneParamSubgroup::lambda_r(argmax_r.clone()),
            conjugation,
            mu: max_mu.clone(),
            base_degree,
        })
    } else {
        None
    };
    DiagonalScan {
        max_mu,
        argmax_r,
        certificate,
    }
}

/// The diagonal scan over all six coordinate permutations: normalized
/// subgroups only sort the weights, so the full diagonal torus is covered
/// by conjugating with permutation matrices.
pub fn destabilize_torus(
    z: &PointScheme,
    m: &Rational,
    base_degree: u32,
) -> Result<DiagonalScan, GitError> {
    let mut best: Option<DiagonalScan> = None;
    for perm in permutation_matrices() {
        let piece_d = transformed_piece(z, base_degree, Some(&perm))?;
        let piece_d1 = transformed_piece(z, base_degree + 1, Some(&perm))?;
        let scan = scan_to_verdict(
            scan_pieces(&piece_d, &piece_d1, base_degree, m),
            perm,
            base_degree,
        );
        let better = match &best {
            None => true,
            Some(b) => scan.max_mu > b.max_mu,
        };
        if better {
            best = Some(scan);
        }
    }
    Ok(best.expect("six permutations scanned"))
}

fn permutation_matrices() -> Vec<RationalMatrix> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    perms
        .iter()
        .map(|p| {
            let mut m = RationalMatrix::new(3, 3);
            for (col, &row) in p.iter().enumerate() {
                m.set(row, col, Rational::one());
            }
            m
        })
        .collect()
}

/// Scan shear-conjugated tori: for each sampled shear parameter, change
/// coordinates and run the diagonal scan, returning the first positive
/// certificate.  Absence of a certificate over a finite sample is not a
/// semistability proof.
pub fn check_shear_tori(
    z: &PointScheme,
    m: &Rational,
    base_degree: u32,
    samples: &[Rational],
    family: ShearFamily,
) -> Result<Option<Certificate>, GitError> {
    for a in samples {
        let g = family.matrix(a);
        let piece_d = transformed_piece(z, base_degree, Some(&g))?;
        let piece_d1 = transformed_piece(z, base_degree + 1, Some(&g))?;
        let scan = scan_to_verdict(
            scan_pieces(&piece_d, &piece_d1, base_degree, m),
            g,
            base_degree,
        );
        if let Some(cert) = scan.certificate {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Replay a certificate: apply its coordinate change, recompute μ at its
/// base degree, and compare exactly.
pub fn verify_certificate(
    z: &PointScheme,
    m: &Rational,
    certificate: &Certificate,
) -> Result<bool, GitError> {
    let d = certificate.base_degree;
    let piece_d = transformed_piece(z, d, Some(&certificate.conjugation))?;
    let piece_d1 = transformed_piece(z, d + 1, Some(&certificate.conjugation))?;
    let mu_d = mu_integer_piece(&piece_d, d, &certificate.lambda);
    let mu_d1 = mu_integer_piece(&piece_d1, d + 1, &certificate.lambda);
    let d_rat = Rational::from_integer(d.into());
    let alpha = d_rat.clone() + Rational::one() - m.clone();
    let beta = m.clone() - d_rat;
    Ok(alpha * mu_d + beta * mu_d1 == certificate.mu)
}
