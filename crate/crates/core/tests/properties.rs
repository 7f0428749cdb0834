use std::collections::BTreeSet;

use coxspec::analysis::reconstruct_order;
use coxspec::bipoly::{det_pencil, BiPoly, PolyMatrix};
use coxspec::dihedral::{assemble, catalog, irrep_curve, irrep_kernel, DihedralElement, IrrepLabel, RepSpec};
use coxspec::exactnum::intmath::gcd32;
use coxspec::exactnum::{CycMatrix, CyclotomicNumber, Rational};
use coxspec::spectrum::{candidate_curves, curvesets_from_json, curvesets_to_json, factor_over, spectrum_of_spec, PairCurves};
use proptest::prelude::*;

fn cyc() -> impl Strategy<Value = CyclotomicNumber> {
    prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]).prop_flat_map(|n| {
        prop::collection::vec((-4i64..=4, 1i64..=3), n as usize).prop_map(move |cs| {
            let coeffs: Vec<Rational> = cs.iter().map(|&(a, b)| Rational::new(a, b).unwrap()).collect();
            CyclotomicNumber::from_coeffs(n, &coeffs).unwrap()
        })
    })
}

fn spec() -> impl Strategy<Value = RepSpec> {
    (2u32..=9).prop_flat_map(|n| {
        let labels = catalog(n);
        let len = labels.len();
        prop::collection::vec((0..len, 1u32..=2), 1..=3).prop_map(move |picks| {
            let mut seen = BTreeSet::new();
            let terms: Vec<(IrrepLabel, u32)> = picks
                .into_iter()
                .filter(|(i, _)| seen.insert(*i))
                .map(|(i, m)| (labels[i], m))
                .collect();
            RepSpec::new(n, terms).unwrap()
        })
    })
}

fn small_poly() -> impl Strategy<Value = BiPoly> {
    prop_oneof![
        2 => Just(BiPoly::zero()),
        3 => (-2i64..=2, -2i64..=2, -2i64..=2).prop_map(|(a, b, c)| BiPoly::from_i64_terms(&[(0, 0, a), (1, 0, b), (0, 1, c)])),
        1 => (-2i64..=2).prop_map(|a| BiPoly::from_i64_terms(&[(1, 1, a), (0, 0, 1)])),
    ]
}

fn poly_matrix() -> impl Strategy<Value = Vec<Vec<BiPoly>>> {
    (1usize..=4).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(small_poly(), d), d))
}

fn permutations(d: usize) -> Vec<(Vec<usize>, bool)> {
    if d == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(d - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, d - 1);
            // inserting at `pos` moves the new element past `len - pos` others
            out.push((q, even == ((p.len() - pos) % 2 == 0)));
        }
    }
    out
}

fn leibniz(rows: &[Vec<BiPoly>]) -> BiPoly {
    permutations(rows.len()).into_iter().fold(BiPoly::zero(), |acc, (p, even)| {
        let term = p.iter().enumerate().fold(BiPoly::one(), |t, (i, &j)| t.mul(&rows[i][j]));
        if even {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
    })
}

/// Product of elementary matrices `I + c·E_ij` and its inverse.
fn unimodular(d: usize, ops: &[(usize, usize, i64)]) -> (CycMatrix, CycMatrix) {
    let mut u = CycMatrix::identity(d);
    let mut v = CycMatrix::identity(d);
    for &(i, j, c) in ops {
        let (i, j) = (i % d, j % d);
        if i == j {
            continue;
        }
        let elem = |c: i64| {
            let rows: Vec<Vec<i64>> = (0..d)
                .map(|r| (0..d).map(|s| i64::from(r == s) + if (r, s) == (i, j) { c } else { 0 }).collect())
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            CycMatrix::from_i64_rows(&refs).unwrap()
        };
        u = u.mul(&elem(c)).unwrap();
        v = elem(-c).mul(&v).unwrap();
    }
    (u, v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
            prop_assert_eq!(x.div(&x).unwrap(), CyclotomicNumber::one());
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(x in cyc(), y in cyc()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert!((&x * &x.conj()).is_real());
    }

    #[test]
    fn embedding_preserves_value(x in cyc(), factor in 1u32..=5) {
        let n = x.order() * factor;
        let e = x.embed(n).unwrap();
        prop_assert_eq!(e.normalized(), x.normalized());
        prop_assert_eq!(&e, &x);
        prop_assert_eq!(e.normalized().normalized(), e.normalized());
    }

    #[test]
    fn determinant_matches_leibniz(rows in poly_matrix()) {
        let m = PolyMatrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(m.det(), leibniz(&rows));
    }

    #[test]
    fn pencil_determinant_is_similarity_invariant(
        s in spec(),
        ops in prop::collection::vec((0usize..8, 0usize..8, -2i64..=2), 0..6),
    ) {
        let (a, b) = assemble(&s).unwrap();
        let (u, v) = unimodular(a.dim(), &ops);
        prop_assert!(u.mul(&v).unwrap().is_identity());
        let a2 = u.mul(&a).unwrap().mul(&v).unwrap();
        let b2 = u.mul(&b).unwrap().mul(&v).unwrap();
        prop_assert_eq!(det_pencil(&a2, &b2).unwrap(), det_pencil(&a, &b).unwrap());
    }

    #[test]
    fn factorization_ignores_candidate_order(s in spec(), seed in any::<u64>()) {
        let poly = spectrum_of_spec(&s).unwrap().product();
        let mut candidates = candidate_curves(s.n());
        let forward = factor_over(&poly, &candidates).unwrap();
        candidates.reverse();
        let k = (seed as usize) % candidates.len();
        candidates.rotate_left(k);
        prop_assert_eq!(factor_over(&poly, &candidates).unwrap(), forward.clone());
        prop_assert_eq!(forward, spectrum_of_spec(&s).unwrap());
    }

    #[test]
    fn reconstruction_ignores_multiplicities(s in spec(), bump in 1u32..=5) {
        let base = reconstruct_order(&spectrum_of_spec(&s.support()).unwrap()).unwrap();
        let heavier = RepSpec::new(s.n(), s.terms().map(|(l, m)| (l, m + bump))).unwrap();
        prop_assert_eq!(reconstruct_order(&spectrum_of_spec(&s).unwrap()).unwrap(), base.clone());
        prop_assert_eq!(reconstruct_order(&spectrum_of_spec(&heavier).unwrap()).unwrap(), base);
    }

    #[test]
    fn two_dim_kernel_is_rotation_subgroup(n in 3u32..=40, k in 1u32..=19) {
        let label = IrrepLabel::TwoDim(k);
        prop_assume!(label.is_valid_for(n));
        let kernel = irrep_kernel(n, label).unwrap();
        prop_assert_eq!(kernel.len() as u32, gcd32(n, k));
        prop_assert!(kernel.iter().all(|w| !w.is_reflection()));
    }

    #[test]
    fn group_law(n in 1u32..=12, a in (0i64..24, any::<bool>()), b in (0i64..24, any::<bool>()), c in (0i64..24, any::<bool>())) {
        let [x, y, z] = [a, b, c].map(|(r, s)| DihedralElement::new(n, r, s));
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(xy.mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert!(x.mul(&x.inverse()).unwrap().is_identity());
        prop_assert!(DihedralElement::identity(n).mul(&x).unwrap() == x);
    }

    #[test]
    fn curve_files_round_trip(s in spec(), t in spec()) {
        let pairs = vec![
            PairCurves { i: 0, j: 1, curves: spectrum_of_spec(&s).unwrap() },
            PairCurves { i: 1, j: 2, curves: spectrum_of_spec(&t).unwrap() },
        ];
        prop_assert_eq!(curvesets_from_json(&curvesets_to_json(&pairs)).unwrap(), pairs);
    }
}

#[test]
fn irrep_curves_are_distinct() {
    for n in 2..=40 {
        let curves: BTreeSet<_> = catalog(n).into_iter().map(|l| irrep_curve(n, l).unwrap()).collect();
        assert_eq!(curves.len(), catalog(n).len(), "n = {n}");
    }
}

#[test]
fn permutation_signs() {
    let perms = permutations(4);
    assert_eq!(perms.len(), 24);
    assert_eq!(perms.iter().filter(|(_, even)| *even).count(), 12);
}
