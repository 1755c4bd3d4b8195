use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use d2kit_core::complex::{d2_split, is_equivalence, ChainComplex, SplitOutcome};
use d2kit_core::fox::{fox_derivative, presentation_complex};
use d2kit_core::group::{evaluate_word, make_group, FiniteGroup, GroupFamily, Letter, MarkedGroup, Word};
use d2kit_core::lattice::IntMatrix;
use d2kit_core::moves::{apply_move, attach_cells, reduce_d2, stabilize, Move};
use d2kit_core::ring::{GroupRingElement, GroupRingMatrix};

const SMALL: [GroupFamily; 7] = [
    GroupFamily::Trivial,
    GroupFamily::Cyclic(2),
    GroupFamily::Cyclic(3),
    GroupFamily::Cyclic(5),
    GroupFamily::Dihedral(3),
    GroupFamily::Quaternion8,
    GroupFamily::Tetrahedral,
];

fn family() -> impl Strategy<Value = GroupFamily> {
    prop::sample::select(SMALL.to_vec())
}

fn group(f: GroupFamily) -> Arc<FiniteGroup> {
    Arc::new(make_group(f).unwrap())
}

fn element(g: &Arc<FiniteGroup>, coeffs: &[i64]) -> GroupRingElement {
    GroupRingElement::from_terms(
        g,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (i % g.order(), BigInt::from(c))),
    )
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 0..8)
}

fn matrix(g: &Arc<FiniteGroup>, rows: usize, cols: usize, data: &[Vec<i64>]) -> GroupRingMatrix {
    let mut m = GroupRingMatrix::zero(g, rows, cols);
    for (k, c) in data.iter().enumerate().take(rows * cols) {
        m.set(k / cols, k % cols, element(g, c));
    }
    m
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..2, prop::bool::ANY), 0..10).prop_map(|ls| {
        Word(
            ls.into_iter()
                .map(|(g, inv)| Letter::new(g, if inv { -1 } else { 1 }))
                .collect(),
        )
    })
}

fn two_generator_marked(f: GroupFamily) -> MarkedGroup {
    f.marked_group().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in family(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let g = group(f);
        let (a, b, c) = (element(&g, &a), element(&g, &b), element(&g, &c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(GroupRingElement::one(&g).mul(&a), a.clone());
        prop_assert_eq!(a.mul(&GroupRingElement::one(&g)), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&b).augmentation(), a.augmentation() * b.augmentation());
    }

    #[test]
    fn integerize_is_functorial(
        f in family(),
        p in 1usize..3, q in 1usize..3, r in 1usize..3,
        a in prop::collection::vec(coeffs(), 9),
        b in prop::collection::vec(coeffs(), 9),
        c in prop::collection::vec(coeffs(), 9),
    ) {
        let g = group(f);
        let (a, b, c) = (matrix(&g, p, q, &a), matrix(&g, q, r, &b), matrix(&g, q, r, &c));
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.integerize(), a.integerize().mul(&b.integerize()));
        prop_assert_eq!(b.add(&c).unwrap().integerize(), b.integerize().add(&c.integerize()));
        prop_assert_eq!(GroupRingMatrix::identity(&g, q).integerize(), IntMatrix::identity(q * g.order()));
        // Composition is associative in the opposite-ring convention as well.
        let abc = a.mul(&b.mul(&c.resized(r, r)).unwrap()).unwrap();
        prop_assert_eq!(abc, ab.mul(&c.resized(r, r)).unwrap());
    }

    #[test]
    fn evaluate_word_is_a_homomorphism(f in prop::sample::select(vec![
        GroupFamily::Dihedral(3), GroupFamily::Dihedral(5), GroupFamily::Quaternion8,
        GroupFamily::Tetrahedral, GroupFamily::Octahedral, GroupFamily::Icosahedral,
    ]), u in word(), v in word()) {
        let m = two_generator_marked(f);
        let g = m.group();
        let eu = evaluate_word(&m, &u).unwrap();
        let ev = evaluate_word(&m, &v).unwrap();
        prop_assert_eq!(evaluate_word(&m, &u.concat(&v)).unwrap(), g.mul(eu, ev));
        prop_assert_eq!(evaluate_word(&m, &u.inverse()).unwrap(), g.inv(eu));
        prop_assert_eq!(evaluate_word(&m, &Word::empty()).unwrap(), g.identity());
    }

    #[test]
    fn fox_derivative_respects_free_reduction_and_products(
        f in prop::sample::select(vec![GroupFamily::Dihedral(4), GroupFamily::Quaternion8, GroupFamily::Tetrahedral]),
        u in word(), v in word(), at in 0usize..20, x in 0usize..2, inv in prop::bool::ANY,
    ) {
        let m = two_generator_marked(f);
        let at = at.min(u.len());
        let l = Letter::new(x, if inv { -1 } else { 1 });
        let mut padded = u.letters().to_vec();
        padded.splice(at..at, [l, l.inverse()]);
        let padded = Word(padded);
        let eu = evaluate_word(&m, &u).unwrap();
        for i in 0..2 {
            let du = fox_derivative(&m, &u, i).unwrap();
            prop_assert_eq!(&fox_derivative(&m, &padded, i).unwrap(), &du);
            prop_assert_eq!(&fox_derivative(&m, &u.free_reduce(), i).unwrap(), &du);
            let dv = fox_derivative(&m, &v, i).unwrap();
            prop_assert_eq!(fox_derivative(&m, &u.concat(&v), i).unwrap(), du.add(&dv.left_translate(eu)));
        }
    }

    #[test]
    fn invariant_factors_are_unimodular_invariants(
        rows in 1usize..6, cols in 1usize..6,
        data in prop::collection::vec(-6i64..=6, 36),
        ops in prop::collection::vec((0usize..6, 0usize..6, -3i64..=3, prop::bool::ANY), 0..12),
    ) {
        let a = IntMatrix::from_i64(rows, cols, &data[..rows * cols]);
        let factors = a.invariant_factors();
        prop_assert_eq!(&a.invariant_factors(), &factors);
        prop_assert!(factors.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        prop_assert!(factors.iter().all(|d| *d > BigInt::from(0)));
        let mut p = IntMatrix::identity(rows);
        let mut q = IntMatrix::identity(cols);
        for (i, j, c, on_rows) in ops {
            let n = if on_rows { rows } else { cols };
            let (i, j) = (i % n, j % n);
            if i == j {
                continue;
            }
            let e = IntMatrix::from_triplets(n, n, (0..n).map(|k| (k, k, BigInt::from(1))).chain([(i, j, BigInt::from(c))]));
            if on_rows { p = e.mul(&p) } else { q = q.mul(&e) }
        }
        prop_assert_eq!(p.mul(&a).mul(&q).invariant_factors(), factors);
        prop_assert_eq!(a.transpose().invariant_factors(), a.invariant_factors());
    }

    #[test]
    fn kernel_basis_is_in_the_kernel(
        rows in 1usize..6, cols in 1usize..7,
        data in prop::collection::vec(-4i64..=4, 42),
    ) {
        let a = IntMatrix::from_i64(rows, cols, &data[..rows * cols]);
        let k = a.kernel_basis();
        prop_assert_eq!(k.len(), cols - a.rank());
        for v in &k {
            prop_assert!(a.mul_vec(v).iter().all(|x| *x == BigInt::from(0)));
        }
    }
}

/// Interprets raw numbers as a move that is applicable to `c`.
fn pick_move(c: &ChainComplex, kind: u8, x: usize, y: usize, coeff: &[i64]) -> Option<Move> {
    let g = c.group();
    match kind % 5 {
        0 => Some(Move::Stabilize { count: 1 + x % 2 }),
        1 => Some(Move::ElementaryExpansion { degree: 1 + x % 3 }),
        2 | 3 => {
            let k = x % 3;
            let n = c.rank(k);
            if n < 2 {
                return None;
            }
            let (i, j) = (y % n, (y / n) % n);
            if i == j {
                return None;
            }
            Some(Move::transvection(k, i, j, element(g, coeff)))
        }
        _ => {
            let k = x % 3;
            let n = c.rank(k);
            if n == 0 {
                return None;
            }
            let sign = if y.is_multiple_of(2) { 1 } else { -1 };
            Some(Move::scaling(k, y % n, sign, (y / 2) % g.order()))
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn moves_preserve_validity_and_homology(
        f in prop::sample::select(vec![GroupFamily::Cyclic(2), GroupFamily::Cyclic(3), GroupFamily::Dihedral(3)]),
        script in prop::collection::vec((0u8..5, 0usize..50, 0usize..50, coeffs()), 1..6),
    ) {
        let mut c = presentation_complex(&f.marked_group().unwrap());
        let order = c.group().order();
        for (kind, x, y, e) in script {
            let Some(mv) = pick_move(&c, kind, x, y, &e) else { continue };
            let before = c.integer_homology(false).unwrap();
            let (next, map) = apply_move(&c, &mv).unwrap();
            prop_assert!(next.validate().all_pass(), "{mv}");
            prop_assert!(map.validate().all_pass(), "{mv}");
            let after = next.integer_homology(false).unwrap();
            prop_assert_eq!(before.degree(0), after.degree(0));
            prop_assert_eq!(before.degree(1), after.degree(1));
            if let Move::Stabilize { count } = mv {
                prop_assert_eq!(after.degree(2).unwrap().rank, before.degree(2).unwrap().rank + count * order);
                prop_assert_eq!(next.euler_char(), c.euler_char() + count as i64);
            } else {
                prop_assert_eq!(&before, &after, "{}", mv);
                prop_assert_eq!(next.euler_char(), c.euler_char());
                prop_assert!(is_equivalence(&map).equivalent, "{mv}");
            }
            c = next;
        }
    }

    #[test]
    fn splitting_certificate_tampering_is_detected(
        f in prop::sample::select(vec![GroupFamily::Cyclic(2), GroupFamily::Cyclic(4), GroupFamily::Dihedral(3), GroupFamily::Quaternion8]),
        r in 1usize..3,
        pick in 0usize..100, elt in 0usize..100, delta in prop::sample::select(vec![-2i64, -1, 1, 2]),
    ) {
        let base = presentation_complex(&f.marked_group().unwrap());
        let (s, _) = stabilize(&base, r).unwrap();
        let n2 = base.rank(2);
        let cols: Vec<usize> = (n2..n2 + r).collect();
        let x = attach_cells(&s, &cols).unwrap();
        let SplitOutcome::Split(cert) = d2_split(&x).unwrap() else {
            return Err(TestCaseError::fail("attach output must split"));
        };
        prop_assert!(cert.verify(&x));
        let (rows, ncols) = cert.phi.shape();
        let (i, j) = ((pick / ncols) % rows, pick % ncols);
        let g = x.group();
        let mut bad = cert.clone();
        let e = bad.phi.get(i, j).add(&GroupRingElement::element(g, elt % g.order()).scale(&delta.into()));
        bad.phi.set(i, j, e);
        prop_assert!(!bad.verify(&x));
    }

    #[test]
    fn equivalence_certificate_tampering_is_detected(
        f in prop::sample::select(vec![GroupFamily::Cyclic(3), GroupFamily::Dihedral(3)]),
        r in 1usize..3,
        degree in 0usize..3, pick in 0usize..400, elt in 0usize..100,
        delta in prop::sample::select(vec![-2i64, -1, 1, 3]),
    ) {
        let base = presentation_complex(&f.marked_group().unwrap());
        let (s, _) = stabilize(&base, r).unwrap();
        let n2 = base.rank(2);
        let cols: Vec<usize> = (n2..n2 + r).collect();
        let x = attach_cells(&s, &cols).unwrap();
        let (_, cert) = reduce_d2(&x).unwrap();
        prop_assert!(cert.is_valid());
        let (rows, ncols) = cert.map.maps[degree].shape();
        let (i, j) = ((pick / ncols) % rows, pick % ncols);
        let g = x.group();
        let mut bad = cert.clone();
        let e = bad.map.maps[degree].get(i, j).add(&GroupRingElement::element(g, elt % g.order()).scale(&delta.into()));
        bad.map.maps[degree].set(i, j, e);
        prop_assert!(!bad.is_valid());
    }
}
