//! Representations of the three-vertex quiver with arrows `x, y, z` and
//! `x', y', z'` subject to the commutation relations `y'x = x'y`,
//! `z'x = x'z`, `z'y = y'z`, together with the stability characters for
//! ideal sheaves of `n` plane points and the explicit one-parameter
//! subgroups that destabilize three families of extension objects.
//!
//! A representation is stored purely by its matrices: the `A` block is a
//! `d₂×d₁` matrix of linear forms in `x, y, z` (split into three scalar
//! matrices), the `B` block a `d₃×d₂` matrix in `x', y', z'`.  The primed
//! arrows again act by multiplication with the coordinate of the same
//! name, so a diagonal subgroup of the ambient special linear group
//! assigns one weight to each coordinate shared by both blocks.

use exact_core::{Rational, RationalMatrix};
use num_traits::{One, Zero};

/// Errors raised by the representation layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("the extension class must be nonzero")]
    ZeroExtension,
    #[error("expected an extension vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subrepresentation search supports dimensions up to 4 per vertex")]
    TooLarge,
}

/// A matrix of linear forms, split by coordinate: the block equals
/// `x·coeff[0] + y·coeff[1] + z·coeff[2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearBlock {
    coeff: [RationalMatrix; 3],
}

impl LinearBlock {
    pub fn new(x: RationalMatrix, y: RationalMatrix, z: RationalMatrix) -> Self {
        assert_eq!(x.rows(), y.rows());
        assert_eq!(x.rows(), z.rows());
        assert_eq!(x.cols(), y.cols());
        assert_eq!(x.cols(), z.cols());
        LinearBlock { coeff: [x, y, z] }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearBlock::new(
            RationalMatrix::new(rows, cols),
            RationalMatrix::new(rows, cols),
            RationalMatrix::new(rows, cols),
        )
    }

    pub fn rows(&self) -> usize {
        self.coeff[0].rows()
    }

    pub fn cols(&self) -> usize {
        self.coeff[0].cols()
    }

    /// Coordinate part: 0 for `x`, 1 for `y`, 2 for `z`.
    pub fn part(&self, variable: usize) -> &RationalMatrix {
        &self.coeff[variable]
    }
}

/// Shift matrices of a line module: the coordinate-`x` part carries ones
/// on the diagonal, the `y` part on the superdiagonal.
fn bidiagonal(rows: usize) -> LinearBlock {
    let cols = rows + 1;
    let mut x = RationalMatrix::new(rows, cols);
    let mut y = RationalMatrix::new(rows, cols);
    for i in 0..rows {
        x.set(i, i, Rational::one());
        y.set(i, i + 1, Rational::one());
    }
    LinearBlock::new(x, y, RationalMatrix::new(rows, cols))
}

/// A representation of the quiver with its dimension vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    dim: (usize, usize, usize),
    a: LinearBlock,
    b: LinearBlock,
}

impl QuiverRep {
    /// Assemble and check shapes; the commutation relations are the
    /// caller-facing invariant and are asserted.
    pub fn new(a: LinearBlock, b: LinearBlock) -> Self {
        assert_eq!(b.cols(), a.rows(), "inner dimensions must chain");
        let rep = QuiverRep {
            dim: (a.cols(), a.rows(), b.rows()),
            a,
            b,
        };
        assert!(rep.relations_hold(), "commutation relations violated");
        rep
    }

    pub fn dimension_vector(&self) -> (usize, usize, usize) {
        self.dim
    }

    pub fn a_block(&self) -> &LinearBlock {
        &self.a
    }

    pub fn b_block(&self) -> &LinearBlock {
        &self.b
    }

    /// The three commutation relations `y'x = x'y`, `z'x = x'z`,
    /// `z'y = y'z` as matrix identities.
    pub fn relations_hold(&self) -> bool {
        let prod = |bv: usize, av: usize| self.b.part(bv).mul(self.a.part(av));
        prod(1, 0) == prod(0, 1) && prod(2, 0) == prod(0, 2) && prod(2, 1) == prod(1, 2)
    }
}

/// The shifted line module supported on `z = 0` of twist `−n`: dimension
/// vector `(n, n−1, n−2)` with bidiagonal `x/y` and `x'/y'` blocks.
pub fn rep_line_bundle_shift(n: usize) -> QuiverRep {
    assert!(n >= 2);
    QuiverRep::new(bidiagonal(n - 1), bidiagonal(n - 2))
}

/// The shifted twisted ideal sheaf of the point `x = y = 0`: dimension
/// vector `(1, 1, 0)`, the only arrow being `z` acting as the identity.
pub fn rep_ideal_point() -> QuiverRep {
    let mut z = RationalMatrix::new(1, 1);
    z.set(0, 0, Rational::one());
    QuiverRep::new(
        LinearBlock::new(RationalMatrix::new(1, 1), RationalMatrix::new(1, 1), z),
        LinearBlock::zero(0, 1),
    )
}

/// Normal form of an extension of the point module by the line module of
/// twist `−n`: the quotient of the shifted line module by a one-dimensional
/// subspace of its third block, leaving bidiagonal matrices of dimension
/// vector `(n, n−1, n−3)`.
pub fn rep_locus1(n: usize) -> QuiverRep {
    assert!(n >= 4);
    let mut b = bidiagonal(n - 3);
    // the B block lives on the full middle vertex of dimension n − 1
    for part in b.coeff.iter_mut() {
        let mut wide = RationalMatrix::new(n - 3, n - 1);
        for i in 0..n - 3 {
            for j in 0..part.cols() {
                wide.set(i, j, part.get(i, j).clone());
            }
        }
        *part = wide;
    }
    QuiverRep::new(bidiagonal(n - 1), b)
}

fn block_diag_with_point(line: &LinearBlock, extra: usize) -> LinearBlock {
    // top-left the line-module A block, bottom-right the chain
    //   z                 (extra = 1)
    //   z 0 / y z         (extra = 2)
    let rows = line.rows() + extra;
    let cols = line.cols() + extra;
    let mut parts = [
        RationalMatrix::new(rows, cols),
        RationalMatrix::new(rows, cols),
        RationalMatrix::new(rows, cols),
    ];
    for (v, part) in parts.iter_mut().enumerate() {
        for i in 0..line.rows() {
            for j in 0..line.cols() {
                part.set(i, j, line.part(v).get(i, j).clone());
            }
        }
    }
    for k in 0..extra {
        parts[2].set(line.rows() + k, line.cols() + k, Rational::one());
    }
    if extra == 2 {
        parts[1].set(line.rows() + 1, line.cols(), Rational::one());
    }
    LinearBlock::new(parts[0].clone(), parts[1].clone(), parts[2].clone())
}

fn check_extension(a: &[Rational], expected: usize) -> Result<(), QuiverError> {
    if a.len() != expected {
        return Err(QuiverError::DimensionMismatch {
            expected,
            found: a.len(),
        });
    }
    if a.iter().all(Zero::is_zero) {
        return Err(QuiverError::ZeroExtension);
    }
    Ok(())
}

/// Normal form of a nontrivial extension of the point module by the line
/// module of twist `−n + 1`: dimension vector `(n, n−1, n−3)` with the
/// extension class `a ∈ ℚ^{n−3} \ {0}` entering through a `z'` column of
/// the `B` block.
pub fn rep_locus2(n: usize, a: &[Rational]) -> Result<QuiverRep, QuiverError> {
    assert!(n >= 4);
    check_extension(a, n - 3)?;
    let line_a = bidiagonal(n - 2);
    let line_b = bidiagonal(n - 3);
    let a_block = block_diag_with_point(&line_a, 1);
    let rows = n - 3;
    let cols = n - 1;
    let mut parts = [
        RationalMatrix::new(rows, cols),
        RationalMatrix::new(rows, cols),
        RationalMatrix::new(rows, cols),
    ];
    for (v, part) in parts.iter_mut().enumerate() {
        for i in 0..line_b.rows() {
            for j in 0..line_b.cols() {
                part.set(i, j, line_b.part(v).get(i, j).clone());
            }
        }
    }
    for (i, ai) in a.iter().enumerate() {
        parts[2].set(i, cols - 1, ai.clone());
    }
    Ok(QuiverRep::new(
        a_block,
        LinearBlock::new(parts[0].clone(), parts[1].clone(), parts[2].clone()),
    ))
}

/// Normal form of a nontrivial extension of the length-two module
/// `(x, y²)` twist by the line module of twist `−n + 2`: dimension vector
/// `(n, n−1, n−3)` with the extension class `a ∈ ℚ^{n−4} \ {0}`.
pub fn rep_locus3(n: usize, a: &[Rational]) -> Result<QuiverRep, QuiverError> {
    assert!(n >= 6);
    check_extension(a, n - 4)?;
    let line_a = bidiagonal(n - 3);
    let line_b = bidiagonal(n - 4);
    let a_block = block_diag_with_point(&line_a, 2);
    let rows = n - 3;
    let cols = n - 1;
    let mut parts = [
        RationalMatrix::new(rows, cols),
        RationalMatrix::new(rows, cols),
        RationalMatrix::new(rows, cols),
    ];
    for (v, part) in parts.iter_mut().enumerate() {
        for i in 0..line_b.rows() {
            for j in 0..line_b.cols() {
                part.set(i, j, line_b.part(v).get(i, j).clone());
            }
        }
    }
    // az' column against the first appended coordinate
    for (i, ai) in a.iter().enumerate() {
        parts[2].set(i, n - 3, ai.clone());
    }
    // trailing row: y' then z'
    parts[1].set(rows - 1, n - 3, Rational::one());
    parts[2].set(rows - 1, n - 2, Rational::one());
    Ok(QuiverRep::new(
        a_block,
        LinearBlock::new(parts[0].clone(), parts[1].clone(), parts[2].clone()),
    ))
}

/// A stability character on dimension vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Character {
    pub weights: [i64; 3],
}

impl Character {
    pub fn pair(&self, d: (usize, usize, usize)) -> i64 {
        self.weights[0] * d.0 as i64 + self.weights[1] * d.1 as i64 + self.weights[2] * d.2 as i64
    }
}

/// The two boundary characters for the dimension vector `(n, n−1, n−3)`
/// of a shifted ideal sheaf of `n` points: `θ₁ = (n−1, −n, 0)` at the
/// outer wall and `θ₂ = (0, n−3, −n+1)` at the inner one.
pub fn characters(n: usize) -> (Character, Character) {
    let n = n as i64;
    (
        Character {
            weights: [n - 1, -n, 0],
        },
        Character {
            weights: [0, n - 3, -n + 1],
        },
    )
}

/// A diagonal one-parameter subgroup of the block automorphism group
/// together with a weight triple for the three plane coordinates (summing
/// to zero in the special linear group).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockOneParam {
    pub w1: Vec<i64>,
    pub w2: Vec<i64>,
    pub w3: Vec<i64>,
    pub coordinate_weights: [i64; 3],
}

impl BlockOneParam {
    fn block_sums(&self) -> [i64; 3] {
        [
            self.w1.iter().sum(),
            self.w2.iter().sum(),
            self.w3.iter().sum(),
        ]
    }
}

/// Whether the subgroup fixes the representation: every nonzero entry of
/// a coordinate part must have vanishing total weight
/// (target − source + coordinate).
pub fn fixes(rep: &QuiverRep, lambda: &BlockOneParam) -> bool {
    assert_eq!(lambda.w1.len(), rep.dim.0);
    assert_eq!(lambda.w2.len(), rep.dim.1);
    assert_eq!(lambda.w3.len(), rep.dim.2);
    let block_fixed = |block: &LinearBlock, target: &[i64], source: &[i64]| {
        (0..3).all(|v| {
            let part = block.part(v);
            (0..part.rows()).all(|i| {
                (0..part.cols()).all(|j| {
                    part.get(i, j).is_zero()
                        || target[i] - source[j] + lambda.coordinate_weights[v] == 0
                })
            })
        })
    };
    block_fixed(&rep.a, &lambda.w2, &lambda.w1) && block_fixed(&rep.b, &lambda.w3, &lambda.w2)
}

/// Numerical index `−⟨θ, λ′⟩ = −Σᵢ θᵢ · (sum of block-i weights)` of a
/// fixed point against the line bundle linearized by `−θ`.
pub fn mu_quiver(theta: &Character, lambda: &BlockOneParam) -> Rational {
    let sums = lambda.block_sums();
    let pairing: i64 = theta
        .weights
        .iter()
        .zip(sums.iter())
        .map(|(t, s)| t * s)
        .sum();
    Rational::from_integer((-pairing).into())
}

/// Root of the affine interpolation between the indices at the divisor
/// slopes `n − 1` and `(n − 1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    Finite(Rational),
    Infinite,
    Indeterminate,
}

/// Solve `a + b = 1`, `a·μ_outer + b·μ_inner = 0` and return the slope
/// `m = a(n−1) + b(n−1)/2` at which the interpolated index vanishes.
pub fn threshold_m(n: usize, mu_outer: &Rational, mu_inner: &Rational) -> Threshold {
    if mu_outer == mu_inner {
        return if mu_outer.is_zero() {
            Threshold::Indeterminate
        } else {
            Threshold::Infinite
        };
    }
    let n1 = Rational::from_integer((n as i64 - 1).into());
    let two = Rational::from_integer(2.into());
    let a = -mu_inner.clone() / (mu_outer.clone() - mu_inner.clone());
    let b = Rational::one() - a.clone();
    Threshold::Finite(a * n1.clone() + b * n1 / two)
}

/// A destabilizing subrepresentation found by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubRep {
    pub dims: (usize, usize, usize),
    pub pairing: i64,
}

fn rank_of(vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RationalMatrix::from_rows(vectors.to_vec()).rank()
}

fn apply_block(block: &LinearBlock, vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for v in vectors {
        for part in 0..3 {
            let m = block.part(part);
            if m.rows() == 0 {
                continue;
            }
            let image: Vec<Rational> = (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| m.get(i, j).clone() * v[j].clone())
                        .fold(Rational::zero(), |acc, t| acc + t)
                })
                .collect();
            if image.iter().any(|c| !c.is_zero()) {
                out.push(image);
            }
        }
    }
    out
}

/// Search for a subrepresentation `U` with `θ(dim U) < 0` by closing
/// coordinate-generated subspaces under the arrows.  Only small
/// representations (each vertex dimension at most 4) are accepted; `None`
/// means no violation was found among the generated subrepresentations.
pub fn subrep_check(rep: &QuiverRep, theta: &Character) -> Result<Option<SubRep>, QuiverError> {
    let (d1, d2, d3) = rep.dim;
    if d1 > 4 || d2 > 4 || d3 > 4 {
        return Err(QuiverError::TooLarge);
    }
    let basis = |d: usize, mask: usize| -> Vec<Vec<Rational>> {
        (0..d)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| {
                let mut e = vec![Rational::zero(); d];
                e[i] = Rational::one();
                e
            })
            .collect()
    };
    for mask1 in 0..1usize << d1 {
        for mask2 in 0..1usize << d2 {
            for mask3 in 0..1usize << d3 {
                let u1 = basis(d1, mask1);
                let mut u2 = basis(d2, mask2);
                u2.extend(apply_block(&rep.a, &u1));
                let mut u3 = basis(d3, mask3);
                u3.extend(apply_block(&rep.b, &u2));
                let dims = (rank_of(&u1), rank_of(&u2), rank_of(&u3));
                let pairing = theta.pair(dims);
                if pairing < 0 {
                    return Ok(Some(SubRep { dims, pairing }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    fn lambda_locus1(n: usize) -> BlockOneParam {
        BlockOneParam {
            w1: vec![-1; n],
            w2: vec![0; n - 1],
            w3: vec![1; n - 3],
            coordinate_weights: [-1, -1, 2],
        }
    }

    fn lambda_locus2(n: usize) -> BlockOneParam {
        let mut w1 = vec![-1; n - 1];
        w1.push(5);
        let mut w2 = vec![0; n - 2];
        w2.push(3);
        BlockOneParam {
            w1,
            w2,
            w3: vec![1; n - 3],
            coordinate_weights: [-1, -1, 2],
        }
    }

    fn lambda_locus3(n: usize) -> BlockOneParam {
        let mut w1 = vec![-1; n - 2];
        w1.extend([5, 8]);
        let mut w2 = vec![0; n - 3];
        w2.extend([3, 6]);
        let mut w3 = vec![1; n - 4];
        w3.push(4);
        BlockOneParam {
            w1,
            w2,
            w3,
            coordinate_weights: [-1, -1, 2],
        }
    }

    #[test]
    fn line_module_matrices() {
        let rep = rep_line_bundle_shift(3);
        assert_eq!(rep.dimension_vector(), (3, 2, 1));
        assert_eq!(rep.a_block().part(0).get(0, 0), &rat(1));
        assert_eq!(rep.a_block().part(1).get(1, 2), &rat(1));
        assert!(rep.a_block().part(2).rank() == 0);
        assert_eq!(rep.b_block().part(0).get(0, 0), &rat(1));
        assert_eq!(rep.b_block().part(1).get(0, 1), &rat(1));
        let tiny = rep_line_bundle_shift(2);
        assert_eq!(tiny.dimension_vector(), (2, 1, 0));
    }

    #[test]
    fn point_module_matrices() {
        let rep = rep_ideal_point();
        assert_eq!(rep.dimension_vector(), (1, 1, 0));
        assert_eq!(rep.a_block().part(2).get(0, 0), &rat(1));
        assert!(rep.a_block().part(0).get(0, 0).is_zero());
    }

    #[test]
    fn all_constructors_satisfy_the_relations() {
        for n in 2..=10 {
            assert!(rep_line_bundle_shift(n).relations_hold());
        }
        assert!(rep_ideal_point().relations_hold());
        for n in 4..=10 {
            assert!(rep_locus1(n).relations_hold());
            let a = vec![rat(1); n - 3];
            assert!(rep_locus2(n, &a).unwrap().relations_hold());
        }
        for n in 6..=10 {
            let a: Vec<Rational> = (1..=n as i64 - 4).map(rat).collect();
            assert!(rep_locus3(n, &a).unwrap().relations_hold());
        }
    }

    #[test]
    fn extension_classes_must_be_nonzero() {
        assert_eq!(
            rep_locus2(5, &[rat(0), rat(0)]).unwrap_err(),
            QuiverError::ZeroExtension
        );
        assert_eq!(
            rep_locus2(5, &[rat(1)]).unwrap_err(),
            QuiverError::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
        assert_eq!(
            rep_locus3(6, &[rat(0), rat(0)]).unwrap_err(),
            QuiverError::ZeroExtension
        );
        assert_eq!(rep_locus2(4, &[rat(1)]).unwrap().dimension_vector(), (4, 3, 1));
        assert_eq!(
            rep_locus3(6, &[rat(1), rat(1)]).unwrap().dimension_vector(),
            (6, 5, 3)
        );
    }

    #[test]
    fn character_values() {
        let (t1, t2) = characters(7);
        assert_eq!(t1.weights, [6, -7, 0]);
        assert_eq!(t2.weights, [0, 4, -6]);
        let (t1, t2) = characters(4);
        assert_eq!(t1.weights, [3, -4, 0]);
        assert_eq!(t2.weights, [0, 1, -3]);
        for n in 4..=12usize {
            let d = (n, n - 1, n - 3);
            let (t1, t2) = characters(n);
            assert_eq!(t1.pair(d), 0);
            assert_eq!(t2.pair(d), 0);
        }
    }

    #[test]
    fn destabilizing_subgroups_fix_their_loci() {
        for n in 4..=9 {
            assert!(fixes(&rep_locus1(n), &lambda_locus1(n)));
            let a = vec![rat(2); n - 3];
            assert!(fixes(&rep_locus2(n, &a).unwrap(), &lambda_locus2(n)));
        }
        for n in 6..=9 {
            let a = vec![rat(1); n - 4];
            assert!(fixes(&rep_locus3(n, &a).unwrap(), &lambda_locus3(n)));
        }
        // the trivial subgroup fixes everything
        let identity = BlockOneParam {
            w1: vec![0; 5],
            w2: vec![0; 4],
            w3: vec![0; 2],
            coordinate_weights: [0, 0, 0],
        };
        assert!(fixes(&rep_locus1(5), &identity));
        // a perturbed weight breaks invariance
        let mut off = lambda_locus1(5);
        off.w1[0] = 7;
        assert!(!fixes(&rep_locus1(5), &off));
    }

    #[test]
    fn closed_form_pairings() {
        for n in 4..=10 {
            let n_i = n as i64;
            let (t1, t2) = characters(n);
            let l1 = lambda_locus1(n);
            assert_eq!(mu_quiver(&t1, &l1), rat(n_i * (n_i - 1)));
            assert_eq!(mu_quiver(&t2, &l1), rat((n_i - 3) * (n_i - 1)));
            let l2 = lambda_locus2(n);
            assert_eq!(mu_quiver(&t1, &l2), rat(n_i * n_i - 4 * n_i + 6));
            assert_eq!(mu_quiver(&t2, &l2), rat((n_i - 3) * (n_i - 4)));
            if n >= 6 {
                let l3 = lambda_locus3(n);
                assert_eq!(mu_quiver(&t1, &l3), rat(n_i * n_i - 7 * n_i + 15));
                assert_eq!(mu_quiver(&t2, &l3), rat(n_i * n_i - 10 * n_i + 27));
            }
        }
    }

    #[test]
    fn thresholds_fall_below_two() {
        for n in 4usize..=10 {
            let n_i = n as i64;
            let (t1, t2) = characters(n);
            let l2 = lambda_locus2(n);
            let expected = -rat((n_i * n_i - 10 * n_i + 18) * (n_i - 1))
                / rat(6 * (n_i - 2));
            match threshold_m(n, &mu_quiver(&t1, &l2), &mu_quiver(&t2, &l2)) {
                Threshold::Finite(m) => {
                    assert_eq!(m, expected);
                    assert!(m < rat(2));
                }
                other => panic!("expected finite threshold, got {other:?}"),
            }
            if n >= 6 {
                let l3 = lambda_locus3(n);
                let expected = -rat((n_i * n_i - 13 * n_i + 39) * (n_i - 1))
                    / rat(6 * (n_i - 4));
                match threshold_m(n, &mu_quiver(&t1, &l3), &mu_quiver(&t2, &l3)) {
                    Threshold::Finite(m) => {
                        assert_eq!(m, expected);
                        assert!(m < rat(2));
                    }
                    other => panic!("expected finite threshold, got {other:?}"),
                }
            }
        }
        assert_eq!(threshold_m(7, &rat(3), &rat(3)), Threshold::Infinite);
        assert_eq!(threshold_m(7, &rat(0), &rat(0)), Threshold::Indeterminate);
    }

    #[test]
    fn point_module_subrepresentations() {
        // the middle vertex alone is invariant because B vanishes
        let rep = rep_ideal_point();
        let theta = Character {
            weights: [1, -1, 0],
        };
        let sub = subrep_check(&rep, &theta).unwrap().unwrap();
        assert_eq!(sub.dims, (0, 1, 0));
        assert_eq!(sub.pairing, -1);
    }

    #[test]
    fn zero_representation_has_no_violations() {
        let rep = QuiverRep::new(LinearBlock::zero(0, 0), LinearBlock::zero(0, 0));
        let theta = Character {
            weights: [5, -3, 1],
        };
        assert_eq!(subrep_check(&rep, &theta).unwrap(), None);
    }

    #[test]
    fn locus1_small_case_matches_index_sign() {
        // positive index means unstable, so a violating subrepresentation
        // must exist for θ₁ at n = 4
        let rep = rep_locus1(4);
        let (t1, _) = characters(4);
        assert!(mu_quiver(&t1, &lambda_locus1(4)) > rat(0));
        assert!(subrep_check(&rep, &t1).unwrap().is_some());
        let big = rep_locus1(8);
        assert_eq!(subrep_check(&big, &t1).unwrap_err(), QuiverError::TooLarge);
    }
}
