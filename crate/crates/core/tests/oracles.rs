//! Cross-checks against straightforward reference computations that share no code with
//! the library's elimination routines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use d2kit_core::fox::{first_boundary, fox_derivative, presentation_complex, relation_module_rank};
use d2kit_core::group::{catalog, GroupFamily, Word};
use d2kit_core::lattice::IntMatrix;
use d2kit_core::ring::GroupRingElement;

/// Row reduction over the rationals; returns (rank, determinant when square).
fn rational_elimination(rows: &[Vec<BigInt>], ncols: usize) -> (usize, BigRational) {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut det = BigRational::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            det = BigRational::zero();
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            det = -det;
        }
        let pivot = m[rank][col].clone();
        det *= &pivot;
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &pivot;
            let (top, rest) = m.split_at_mut(i);
            for (x, y) in rest[0][col..ncols].iter_mut().zip(&top[rank][col..ncols]) {
                *x -= &factor * y;
            }
        }
        rank += 1;
    }
    if m.len() != ncols {
        det = BigRational::zero();
    }
    (rank, det)
}

fn rational_rank(a: &IntMatrix) -> usize {
    rational_elimination(&a.to_dense(), a.ncols()).0
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Invariant factors as quotients of successive gcds of k×k minors.
fn invariant_factors_by_minors(a: &[Vec<BigInt>], rows: usize, cols: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect())
                    .collect();
                let det = rational_elimination(&sub, k).1;
                assert!(det.is_integer());
                g = g.gcd(&det.to_integer());
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn invariant_factors_match_minor_gcds(
        rows in 1usize..5, cols in 1usize..5,
        data in prop::collection::vec(-9i64..=9, 16),
        scale in prop::sample::select(vec![1i64, 2, 6]),
    ) {
        let data: Vec<i64> = data.iter().map(|x| x * if x % 3 == 0 { scale } else { 1 }).collect();
        let a = IntMatrix::from_i64(rows, cols, &data[..rows * cols]);
        let expected = invariant_factors_by_minors(&a.to_dense(), rows, cols);
        prop_assert_eq!(a.invariant_factors(), expected);
        prop_assert_eq!(a.rank(), rational_rank(&a));
    }
}

#[test]
fn snf_of_known_matrices() {
    let cases: [(usize, usize, &[i64], &[i64]); 4] = [
        (2, 2, &[2, 4, 6, 8], &[2, 4]),
        (3, 3, &[2, 0, 0, 0, 3, 0, 0, 0, 5], &[1, 1, 30]),
        (2, 3, &[1, 2, 3, 4, 5, 6], &[1, 3]),
        (3, 3, &[0, 0, 0, 0, 0, 0, 0, 0, 0], &[]),
    ];
    for (r, c, data, expected) in cases {
        let a = IntMatrix::from_i64(r, c, data);
        let want: Vec<BigInt> = expected.iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(a.invariant_factors(), want, "{data:?}");
    }
}

#[test]
fn boundary_ranks_match_rational_rank_on_catalog() {
    for e in catalog() {
        let c = presentation_complex(&e.marked);
        for k in 1..=2 {
            let d = c.boundary(k).integerize();
            assert_eq!(d.rank(), rational_rank(&d), "{} d{k}", e.family);
        }
        let n = e.order();
        let d2 = c.boundary(2).integerize();
        let pi2 = c.rank(2) * n - rational_rank(&d2);
        assert_eq!(c.pi2_lattice().unwrap().len(), pi2, "{}", e.family);
        let d1 = first_boundary(&e.marked).integerize();
        assert_eq!(relation_module_rank(&e.marked), c.rank(1) * n - rational_rank(&d1));
    }
}

#[test]
fn group_ring_product_is_convolution() {
    for f in [GroupFamily::Dihedral(4), GroupFamily::Quaternion8, GroupFamily::Tetrahedral] {
        let g = std::sync::Arc::new(d2kit_core::group::make_group(f).unwrap());
        let n = g.order();
        let a = GroupRingElement::from_terms(&g, (0..n).map(|x| (x, BigInt::from(x as i64 % 5 - 2))));
        let b = GroupRingElement::from_terms(&g, (0..n).map(|x| (x, BigInt::from((3 * x as i64) % 7 - 3))));
        let mut conv = vec![BigInt::zero(); n];
        for x in 0..n {
            for y in 0..n {
                conv[g.mul(x, y)] += a.coefficient(x) * b.coefficient(y);
            }
        }
        let ab = a.mul(&b);
        for (h, want) in conv.iter().enumerate() {
            assert_eq!(&ab.coefficient(h), want, "{f} at g{h}");
        }
    }
}

#[test]
fn derivative_of_a_power_is_a_geometric_sum() {
    for n in 1..=8 {
        let m = GroupFamily::Cyclic(n).marked_group().unwrap();
        let g = m.group();
        let d = fox_derivative(&m, &Word::power(0, n as i64), 0).unwrap();
        assert_eq!(d, GroupRingElement::norm(g), "cyclic {n}");
        let dinv = fox_derivative(&m, &Word::power(0, -(n as i64)), 0).unwrap();
        assert_eq!(dinv, GroupRingElement::norm(g).neg(), "cyclic {n}");
    }
}

#[test]
fn cyclic_homology_of_the_universal_cover() {
    // The universal cover of the presentation complex of C_n has H2 = Z^(n-1).
    for n in 1..=8usize {
        let c = presentation_complex(&GroupFamily::Cyclic(n).marked_group().unwrap());
        let h = c.integer_homology(false).unwrap();
        let h2 = h.degree(2).unwrap();
        assert_eq!((h2.rank, h2.torsion.is_empty()), (n - 1, true), "cyclic {n}");
        assert!(h.degree(1).unwrap().is_zero());
        assert!(h.degree(0).unwrap().is_integers());
    }
}
