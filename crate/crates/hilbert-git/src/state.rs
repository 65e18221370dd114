//! State polytopes and the Hilbert-Mumford index at integer degrees.
//!
//! The degree-`m` graded piece of the ideal is a row space over the
//! canonical monomial basis.  A monomial basis of that space (a column
//! basis with nonzero minor) contributes the sum of its exponent vectors;
//! the state polytope is the convex hull of these sums and
//! `μ_m(Z, λ) = min ⟨λ, v⟩` over it.  The minimum is reached by the
//! weighted-matroid greedy without enumerating bases; vertices are found
//! by an exact support-oracle convex hull in the plane `i + j + k = const`.

use std::collections::{BTreeSet, BinaryHeap, HashSet};
use std::sync::Arc;

use exact_core::{Monomial, OneParamSubgroup, Rational, RationalMatrix};
use num_traits::Zero;

use graded_ideal::{binom2, PointScheme};

use crate::GitError;

/// Whether the degree-`m` Hilbert point of the scheme is defined:
/// `n < C(m+2,2)` and the ideal imposes exactly `n` conditions in degree
/// `m`.
pub fn hilbert_point_defined(z: &PointScheme, m: u32) -> bool {
    let n = z.length() as usize;
    n < binom2(m) && z.ideal().dim_piece(m) == binom2(m) - n
}

pub(crate) fn defined_piece(z: &PointScheme, m: u32) -> Result<Arc<RationalMatrix>, GitError> {
    if !hilbert_point_defined(z, m) {
        return Err(GitError::HilbertPointUndefined {
            length: z.length(),
            degree: m,
        });
    }
    Ok(z.ideal().graded_piece(m))
}

/// λ-weights of the canonical monomial columns of degree `m`.
pub(crate) fn column_weights(m: u32, lambda: &OneParamSubgroup) -> Vec<Rational> {
    Monomial::all_of_degree(m)
        .iter()
        .map(|mono| mono.weight(lambda))
        .collect()
}

/// Greedy minimum-weight column basis of the row space: scan columns by
/// weight ascending (canonical order inside ties) and keep each column
/// that is independent of those already kept.  Matroid greedy optimality
/// makes the weight of the result independent of the tie-break.
pub(crate) fn greedy_min_basis(piece: &RationalMatrix, weights: &[Rational]) -> Vec<usize> {
    let r = piece.rows();
    let ncols = piece.cols();
    assert_eq!(ncols, weights.len());
    let mut order: Vec<usize> = (0..ncols).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let mut elim: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::with_capacity(r);
    for &c in &order {
        if chosen.len() == r {
            break;
        }
        let mut v: Vec<Rational> = (0..r).map(|i| piece.get(i, c).clone()).collect();
        for (p, e) in &elim {
            if !v[*p].is_zero() {
                let f = v[*p].clone() / e[*p].clone();
                for (vi, ei) in v.iter_mut().zip(e.iter()) {
                    if !ei.is_zero() {
                        *vi -= f.clone() * ei.clone();
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            elim.push((p, v));
            chosen.push(c);
        }
    }
    assert_eq!(chosen.len(), r, "independent rows always admit a column basis");
    chosen
}

/// `μ_m(Z, λ)` at an integer degree via the matroid greedy.
pub fn mu_integer(z: &PointScheme, m: u32, lambda: &OneParamSubgroup) -> Result<Rational, GitError> {
    let piece = defined_piece(z, m)?;
    Ok(mu_integer_piece(&piece, m, lambda))
}

pub(crate) fn mu_integer_piece(
    piece: &RationalMatrix,
    m: u32,
    lambda: &OneParamSubgroup,
) -> Rational {
    let weights = column_weights(m, lambda);
    greedy_min_basis(piece, &weights)
        .into_iter()
        .map(|c| weights[c].clone())
        .sum()
}

/// Independent check of `μ_m`: exhaustive-in-principle search over all
/// monomial bases, phrased on the complementary side.  The complements of
/// column bases of the piece are exactly the column bases of its kernel
/// matrix, so `μ = (total weight) − max` over kernel column bases, and
/// the maximum is found by best-first enumeration of column subsets in
/// decreasing weight order, testing minors until one is nonzero.
pub fn mu_brute_force(
    z: &PointScheme,
    m: u32,
    lambda: &OneParamSubgroup,
) -> Result<Rational, GitError> {
    let piece = defined_piece(z, m)?;
    let weights = column_weights(m, lambda);
    let total: Rational = weights.iter().cloned().sum();
    let kernel = piece.kernel();
    let q = kernel.len();
    if q == 0 {
        return Ok(total);
    }
    let ncols = piece.cols();
    let mut order: Vec<usize> = (0..ncols).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));

    let weight_of = |subset: &[usize]| -> Rational {
        subset.iter().map(|&p| weights[order[p]].clone()).sum()
    };
    let nonzero_minor = |subset: &[usize]| -> bool {
        let mut mat = RationalMatrix::new(q, q);
        for (j, &p) in subset.iter().enumerate() {
            for (i, kv) in kernel.iter().enumerate() {
                mat.set(i, j, kv[order[p]].clone());
            }
        }
        !mat.determinant().is_zero()
    };

    let start: Vec<usize> = (0..q).collect();
    let mut heap: BinaryHeap<(Rational, Vec<usize>)> = BinaryHeap::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    heap.push((weight_of(&start), start.clone()));
    seen.insert(start);
    let mut budget = 500_000u64;
    while let Some((w, subset)) = heap.pop() {
        if nonzero_minor(&subset) {
            return Ok(total - w);
        }
        budget = budget.checked_sub(1).expect("exhaustive search budget exceeded");
        for pos in 0..q {
            let next = subset[pos] + 1;
            let free = if pos + 1 < q { next < subset[pos + 1] } else { next < ncols };
            if free {
                let mut succ = subset.clone();
                succ[pos] = next;
                if seen.insert(succ.clone()) {
                    heap.push((weight_of(&succ), succ));
                }
            }
        }
    }
    unreachable!("independent rows always admit a column basis")
}

/// The state polytope at an integer degree: the exact vertex set, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatePolytope {
    pub degree: u32,
    pub vertices: Vec<[u32; 3]>,
}

pub fn state_polytope(z: &PointScheme, m: u32) -> Result<StatePolytope, GitError> {
    let piece = defined_piece(z, m)?;
    Ok(StatePolytope {
        degree: m,
        vertices: state_vertices(&piece, m),
    })
}

/// Support oracle: the unique exponent-sum point minimizing
/// `dir·(I, J)` with ties broken lexicographically in `(I, J)` (minimized
/// or maximized by `lexmax`).  The composite weight is linear in the
/// exponents, so the returned point is a vertex.
fn support_vertex(piece: &RationalMatrix, m: u32, dir: [i64; 2], lexmax: bool) -> [u32; 3] {
    let b = (m as i64) * (piece.rows() as i64) + 1;
    let b2 = b * b;
    let sign = if lexmax { -1 } else { 1 };
    let monomials = Monomial::all_of_degree(m);
    let weights: Vec<Rational> = monomials
        .iter()
        .map(|mono| {
            let (i, j) = (mono.i as i64, mono.j as i64);
            Rational::from_integer(((dir[0] * i + dir[1] * j) * b2 + sign * (i * b + j)).into())
        })
        .collect();
    let mut sum = [0u32; 3];
    for c in greedy_min_basis(piece, &weights) {
        sum[0] += monomials[c].i;
        sum[1] += monomials[c].j;
        sum[2] += monomials[c].k;
    }
    sum
}

fn refine_hull(
    piece: &RationalMatrix,
    m: u32,
    p: [u32; 3],
    q: [u32; 3],
    out: &mut BTreeSet<[u32; 3]>,
) {
    let (pi, pj) = (p[0] as i64, p[1] as i64);
    let (qi, qj) = (q[0] as i64, q[1] as i64);
    let dir = [-(qj - pj), qi - pi];
    let s = support_vertex(piece, m, dir, false);
    let (si, sj) = (s[0] as i64, s[1] as i64);
    if dir[0] * si + dir[1] * sj < dir[0] * pi + dir[1] * pj {
        out.insert(s);
        refine_hull(piece, m, p, s, out);
        refine_hull(piece, m, s, q, out);
    }
}

pub(crate) fn state_vertices(piece: &RationalMatrix, m: u32) -> Vec<[u32; 3]> {
    let low = support_vertex(piece, m, [1, 0], false);
    let high = support_vertex(piece, m, [-1, 0], true);
    let mut out = BTreeSet::new();
    out.insert(low);
    out.insert(high);
    if low != high {
        refine_hull(piece, m, low, high, &mut out);
        refine_hull(piece, m, high, low, &mut out);
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{rat, ratio};
    use graded_ideal::{catalog_witness, collinear_points, reduced_points, PointPlace, Sampler, WitnessName};

    fn pts(coords: &[(i64, i64, i64)]) -> Vec<PointPlace> {
        coords
            .iter()
            .map(|&(a, b, c)| PointPlace::new([rat(a), rat(b), rat(c)]).unwrap())
            .collect()
    }

    #[test]
    fn hilbert_point_definition_cases() {
        let triple = catalog_witness(&WitnessName::TriplePoint5).unwrap();
        assert!(hilbert_point_defined(&triple, 3));
        assert!(hilbert_point_defined(&triple, 4));

        let seven = catalog_witness(&WitnessName::SpecialTriplePoint7 { seed: 5 }).unwrap();
        assert!(!hilbert_point_defined(&seven, 2)); // 7 > C(4,2) = 6

        // five collinear points: too many cubics vanish on the line
        let ell = exact_core::parse_polynomial("x").unwrap();
        let f = exact_core::parse_polynomial(
            "y^5 - 5*y^4*z + 5*y^3*z^2 + 5*y^2*z^3 - 6*y*z^4",
        )
        .unwrap();
        let coll = collinear_points(&ell, &f, vec![]).unwrap();
        assert_eq!(coll.length(), 5);
        assert!(!hilbert_point_defined(&coll, 3));
        assert!(hilbert_point_defined(&coll, 4));
    }

    #[test]
    fn triple_point_state_polytopes() {
        let z = catalog_witness(&WitnessName::TriplePoint5).unwrap();
        let s3 = state_polytope(&z, 3).unwrap();
        let mut expected3 = vec![[9, 2, 4], [5, 6, 4], [6, 8, 1], [4, 8, 3]];
        expected3.sort();
        assert_eq!(s3.vertices, expected3);
        let s4 = state_polytope(&z, 4).unwrap();
        let mut expected4 = vec![
            [20, 10, 10],
            [19, 10, 11],
            [13, 16, 11],
            [16, 18, 6],
            [12, 18, 10],
        ];
        expected4.sort();
        assert_eq!(s4.vertices, expected4);
    }

    #[test]
    fn degenerate_orbit_state_is_a_point() {
        let z = catalog_witness(&WitnessName::ZeroLimit5).unwrap();
        let s3 = state_polytope(&z, 3).unwrap();
        assert_eq!(s3.vertices, vec![[5, 5, 5]]);
    }

    #[test]
    fn vertex_weight_sums() {
        for name in [
            WitnessName::TriplePoint5,
            WitnessName::ThreeCollinear5 { a: rat(1) },
            WitnessName::SpecialConfigI5,
            WitnessName::SpecialConfigII5,
            WitnessName::SpecialConfigIII5,
        ] {
            let z = catalog_witness(&name).unwrap();
            for m in 3..=4 {
                let s = state_polytope(&z, m).unwrap();
                let dim = z.ideal().dim_piece(m) as u32;
                for v in &s.vertices {
                    assert_eq!(v[0] + v[1] + v[2], m * dim, "{name:?} m={m}");
                }
            }
        }
    }

    #[test]
    fn triple_point_mu_values() {
        let z = catalog_witness(&WitnessName::TriplePoint5).unwrap();
        let l0 = OneParamSubgroup::lambda0();
        assert_eq!(mu_integer(&z, 3, &l0).unwrap(), rat(1));
        assert_eq!(mu_integer(&z, 4, &l0).unwrap(), rat(2));
    }

    #[test]
    fn four_collinear_mu_is_affine_in_r() {
        let z = catalog_witness(&WitnessName::FourCollinear5 {
            roots: [rat(1), rat(-1), rat(2), rat(-2)],
        })
        .unwrap();
        for r in [rat(0), rat(1), ratio(-1, 2)] {
            let lam = OneParamSubgroup::lambda_r(r.clone());
            assert_eq!(mu_integer(&z, 4, &lam).unwrap(), rat(2) - rat(4) * r.clone());
            assert_eq!(mu_integer(&z, 5, &lam).unwrap(), rat(1) - rat(8) * r);
        }
    }

    #[test]
    fn special_configuration_mu_values() {
        let lhalf = OneParamSubgroup::lambda_r(ratio(-1, 2));
        let l0 = OneParamSubgroup::lambda0();
        let l1 = OneParamSubgroup::lambda1();

        let three = catalog_witness(&WitnessName::ThreeCollinear5 { a: rat(1) }).unwrap();
        assert_eq!(mu_integer(&three, 3, &lhalf).unwrap(), rat(0));
        assert_eq!(mu_integer(&three, 4, &lhalf).unwrap(), ratio(-1, 2));

        let s1 = catalog_witness(&WitnessName::SpecialConfigI5).unwrap();
        assert_eq!(mu_integer(&s1, 3, &lhalf).unwrap(), ratio(3, 2));
        assert_eq!(mu_integer(&s1, 4, &lhalf).unwrap(), ratio(5, 2));

        let s2 = catalog_witness(&WitnessName::SpecialConfigII5).unwrap();
        assert_eq!(mu_integer(&s2, 3, &l1).unwrap(), rat(3));
        assert_eq!(mu_integer(&s2, 4, &l1).unwrap(), rat(4));

        let s3 = catalog_witness(&WitnessName::SpecialConfigIII5).unwrap();
        assert_eq!(mu_integer(&s3, 3, &l0).unwrap(), rat(4));
        assert_eq!(mu_integer(&s3, 4, &l0).unwrap(), rat(6));
    }

    #[test]
    fn trivial_subgroup_gives_zero() {
        let z = catalog_witness(&WitnessName::TriplePoint5).unwrap();
        let zero = OneParamSubgroup::from_weights(rat(0), rat(0), rat(0)).unwrap();
        assert_eq!(mu_integer(&z, 3, &zero).unwrap(), rat(0));
    }

    #[test]
    fn greedy_matches_brute_force_on_witnesses() {
        let lams = [
            OneParamSubgroup::lambda0(),
            OneParamSubgroup::lambda1(),
            OneParamSubgroup::lambda_r(ratio(-1, 2)),
            OneParamSubgroup::new(rat(2), rat(-1)).unwrap(),
        ];
        for name in [
            WitnessName::TriplePoint5,
            WitnessName::FourCollinear5 {
                roots: [rat(1), rat(-1), rat(2), rat(-2)],
            },
            WitnessName::SpecialConfigII5,
            WitnessName::ZeroLimit5,
        ] {
            let z = catalog_witness(&name).unwrap();
            for m in 3..=4 {
                for lam in &lams {
                    assert_eq!(
                        mu_integer(&z, m, lam).unwrap(),
                        mu_brute_force(&z, m, lam).unwrap(),
                        "{name:?} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn greedy_matches_brute_force_on_random_configurations() {
        for seed in 0u64..50 {
            let n = 3 + (seed % 5) as usize; // 3..=7
            let mut sampler = Sampler::new(300 + seed);
            let z = reduced_points(&sampler.general_points(n, &[])).unwrap();
            let m = (n as u32 - 1) + (seed % 3) as u32; // degrees where points are defined
            let m = m.min(6);
            if !hilbert_point_defined(&z, m) {
                continue;
            }
            let a = rat(1 + (seed % 4) as i64);
            let b = rat(-(1 + (seed % 3) as i64));
            let lam = OneParamSubgroup::new(a, b).unwrap();
            assert_eq!(
                mu_integer(&z, m, &lam).unwrap(),
                mu_brute_force(&z, m, &lam).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn conjugation_by_permutations_is_invariant() {
        // swapping coordinates and permuting the weights accordingly
        // leaves μ unchanged
        let z = reduced_points(&pts(&[(1, 2, 1), (1, -1, 1), (3, 1, 2), (2, 5, 1), (1, 1, 1)]))
            .unwrap();
        let m = 4;
        let piece = z.ideal().graded_piece(m);
        // swap y and z: variable y -> z, z -> y
        let perm = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
        ]);
        let rows: Vec<Vec<Rational>> = (0..piece.rows())
            .map(|r| {
                exact_core::HomogeneousPolynomial::from_coefficient_row(m, piece.row(r))
                    .substitute(&perm)
                    .unwrap()
                    .coefficient_row()
            })
            .collect();
        let transformed = {
            let (red, pivots) = RationalMatrix::from_rows(rows).reduced_row_echelon();
            RationalMatrix::from_rows((0..pivots.len()).map(|r| red.row(r).to_vec()).collect())
        };
        let lam = OneParamSubgroup::from_weights(rat(3), rat(-1), rat(-2)).unwrap();
        let lam_swapped = OneParamSubgroup::from_weights(rat(3), rat(-2), rat(-1)).unwrap();
        assert_eq!(
            mu_integer_piece(&piece, m, &lam),
            mu_integer_piece(&transformed, m, &lam_swapped)
        );
    }

    #[test]
    fn limit_compatibility_with_degenerations() {
        let lams = [OneParamSubgroup::lambda0(), OneParamSubgroup::lambda1()];
        for name in [
            WitnessName::TriplePoint5,
            WitnessName::FourCollinear5 {
                roots: [rat(1), rat(-1), rat(2), rat(-2)],
            },
            WitnessName::SpecialConfigI5,
        ] {
            let z = catalog_witness(&name).unwrap();
            for lam in &lams {
                let limit = degeneration::flat_limit(&z, lam).unwrap();
                for m in 3..=4 {
                    if hilbert_point_defined(&z, m) && hilbert_point_defined(&limit, m) {
                        assert_eq!(
                            mu_integer(&z, m, lam).unwrap(),
                            mu_integer(&limit, m, lam).unwrap(),
                            "{name:?} m={m}"
                        );
                    }
                }
            }
        }
    }
}
