use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use iwahori_core::action::{act_element, act_word, window_basis};
use iwahori_core::explorer::{corollary_certificate, find_transporter, membership, span_closure, translators};
use iwahori_core::lattice::{classify, entry_exponent, is_proper, s_omega_contains};
use iwahori_core::oracle::sample::{random_i1, random_k};
use iwahori_core::oracle::{
    decompose_kzti1, entry_exponent_bruteforce, hecke_action_bruteforce_trivial, s_omega_bruteforce, GMat, TrivialOp,
};
use iwahori_core::{
    BasisFunction, CharacterCase, HeckeElement, LatticeVec, ModuleVector, OperatorWord, PrimeField, WeightConfig,
    WeylElem, WindowSpec,
};

fn point(n: usize, bound: i64) -> impl Strategy<Value = LatticeVec> {
    prop::collection::vec(-bound..=bound, n - 1).prop_map(LatticeVec)
}

fn weyl(n: usize) -> impl Strategy<Value = WeylElem> {
    let all = WeylElem::all(n);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

/// `(w, points of S_w)` with `k` points drawn from the window.
fn region_points(bound: i64, k: usize) -> impl Strategy<Value = (WeylElem, Vec<LatticeVec>)> {
    weyl(3).prop_flat_map(move |w| {
        let pts: Vec<LatticeVec> = WindowSpec::new(bound)
            .unwrap()
            .points(3)
            .into_iter()
            .filter(|a| s_omega_contains(&w, a))
            .collect();
        (Just(w), prop::collection::vec(prop::sample::select(pts), k))
    })
}

fn s_id_point(bound: i64) -> impl Strategy<Value = LatticeVec> {
    (-bound..=0, -bound..=0).prop_map(|(x, y)| LatticeVec(vec![x.min(y), x.max(y)]))
}

fn case() -> impl Strategy<Value = CharacterCase> {
    prop_oneof![
        Just(CharacterCase::Iwahori),
        Just(CharacterCase::SemiRegular),
        Just(CharacterCase::Regular)
    ]
}

fn prime() -> impl Strategy<Value = PrimeField> {
    prop_oneof![Just(2u32), Just(3), Just(5)].prop_map(|p| PrimeField::new(p).unwrap())
}

fn word(case: CharacterCase, max_len: usize) -> impl Strategy<Value = OperatorWord> {
    let alpha = case.alphabet();
    prop::collection::vec(0..alpha.len(), 0..=max_len)
        .prop_map(move |ix| OperatorWord::new(case, ix.into_iter().map(|k| alpha[k]).collect()).unwrap())
}

fn element() -> impl Strategy<Value = (CharacterCase, Vec<OperatorWord>)> {
    case().prop_flat_map(|c| (Just(c), prop::collection::vec(word(c, 6), 1..4)))
}

fn config(case: CharacterCase, field: PrimeField, c: i64) -> WeightConfig {
    WeightConfig::new(case, field, c).unwrap()
}

/// A random vector over the window basis of the case.
fn vector(case: CharacterCase, field: PrimeField, bound: i64, seed: u64) -> ModuleVector {
    let basis = window_basis(case, &WindowSpec::new(bound).unwrap());
    let mut x = seed;
    let terms = basis.into_iter().filter_map(|f| {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let c = (x >> 33) % 7;
        (c < 3).then_some((f, c as i64 + 1))
    });
    ModuleVector::from_terms(field, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn exponent_antisymmetry(w in weyl(4), a in point(4, 6), i in 1usize..=4, j in 1usize..=4) {
        prop_assume!(i != j);
        let s = entry_exponent(&w, &a, i, j).unwrap() + entry_exponent(&w, &a, j, i).unwrap();
        prop_assert_eq!(s, 1);
    }

    #[test]
    fn partition_and_classify(n in 3usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = LatticeVec((0..n - 1).map(|_| rand::Rng::gen_range(&mut rng, -9..=9)).collect());
        let hits: Vec<WeylElem> = WeylElem::all(n).into_iter().filter(|w| s_omega_contains(w, &a)).collect();
        prop_assert_eq!(hits.len(), 1);
        prop_assert_eq!(&hits[0], &classify(&a));
    }

    #[test]
    fn lower_exponents_vanish_above_diagonal(a in point(3, 8)) {
        let w = classify(&a);
        for i in 1..=3 {
            for j in 1..i {
                prop_assert!(entry_exponent(&w, &a, j, i).unwrap() <= 0);
            }
        }
    }

    #[test]
    fn proper_is_a_partial_order((w, pts) in region_points(5, 3)) {
        let (a, b, c) = (&pts[0], &pts[1], &pts[2]);
        prop_assert!(is_proper(&w, a, a).unwrap());
        if is_proper(&w, a, b).unwrap() && is_proper(&w, b, a).unwrap() {
            prop_assert_eq!(a, b);
        }
        if is_proper(&w, a, b).unwrap() && is_proper(&w, b, c).unwrap() {
            prop_assert!(is_proper(&w, a, c).unwrap());
        }
    }

    #[test]
    fn normalize_is_idempotent((case, words) in element(), f in prime(), seed in any::<u64>()) {
        let e = words
            .iter()
            .fold(HeckeElement::zero(case, f), |acc, w| acc.add(&HeckeElement::from_word(w, f)));
        let n = e.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        for c in [0, -1] {
            let cfg = config(case, f, c);
            let v = vector(case, f, 3, seed);
            prop_assert_eq!(act_element(&n, &v, &cfg).unwrap(), act_element(&e, &v, &cfg).unwrap());
        }
    }

    #[test]
    fn regular_words_commute(u in word(CharacterCase::Regular, 4), w in word(CharacterCase::Regular, 4), f in prime()) {
        let uw = HeckeElement::from_word(&u.then(&w), f).normalize();
        let wu = HeckeElement::from_word(&w.then(&u), f).normalize();
        prop_assert_eq!(uw, wu);
    }

    #[test]
    fn action_is_linear(case in case(), f in prime(), s1 in any::<u64>(), s2 in any::<u64>(), k in 0u32..5) {
        let cfg = config(case, f, -1);
        let x = vector(case, f, 3, s1);
        let y = vector(case, f, 3, s2);
        for w in translators(case) {
            let lhs = act_word(&w, &x.add(&y.scale(k)), &cfg).unwrap();
            let rhs = act_word(&w, &x, &cfg).unwrap().add(&act_word(&w, &y, &cfg).unwrap().scale(k));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn span_is_closed_inside_the_window(case in case(), a in s_id_point(3), f in prime()) {
        let id = WeylElem::identity(3);
        let cfg = config(case, f, 0);
        let win = WindowSpec::new(4).unwrap();
        let g = ModuleVector::basis(BasisFunction::new(id, a).unwrap(), f);
        let s = span_closure(std::slice::from_ref(&g), &cfg, win, 8).unwrap();
        let bigger = span_closure(&[g], &cfg, win, 9).unwrap();
        for row in s.rows() {
            for t in translators(case) {
                let img = act_word(&t, row, &cfg).unwrap();
                if img.within(&win) {
                    prop_assert!(membership(&img, &bigger).unwrap());
                }
            }
        }
    }

    #[test]
    fn transporters_are_sound_and_complete(case in case(), a in s_id_point(4), b in s_id_point(4)) {
        let id = WeylElem::identity(3);
        let f = PrimeField::new(3).unwrap();
        let cfg = config(case, f, 0);
        let fa = ModuleVector::basis(BasisFunction::new(id.clone(), a.clone()).unwrap(), f);
        let fb = ModuleVector::basis(BasisFunction::new(id.clone(), b.clone()).unwrap(), f);
        match find_transporter(&a, &b, case) {
            Ok(w) => {
                prop_assert!(is_proper(&id, &b, &a).unwrap());
                prop_assert_eq!(act_word(&w, &fa, &cfg).unwrap(), fb);
            }
            Err(_) => {
                prop_assert!(!is_proper(&id, &b, &a).unwrap());
                // no translator word reaches b
                let mut seen = BTreeSet::new();
                let mut frontier = vec![a.clone()];
                while let Some(x) = frontier.pop() {
                    if x.max_abs() > 8 || !seen.insert(x.clone()) {
                        continue;
                    }
                    prop_assert_ne!(&x, &b);
                    frontier.push(LatticeVec(vec![x.0[0] - 1, x.0[1]]));
                    frontier.push(LatticeVec(vec![x.0[0] - 1, x.0[1] - 1]));
                }
            }
        }
    }

    #[test]
    fn oracle_agrees_with_s_omega(w in weyl(3), a in point(3, 2), q in prop_oneof![Just(2u32), Just(3)]) {
        prop_assert_eq!(s_omega_bruteforce(&w, &a, q, 8).unwrap(), s_omega_contains(&w, &a));
    }

    #[test]
    fn oracle_agrees_with_exponents(w in weyl(3), a in point(3, 3), i in 1usize..=3, j in 1usize..=3) {
        prop_assume!(i != j);
        prop_assert_eq!(
            entry_exponent_bruteforce(&w, &a, i, j, 2).unwrap(),
            entry_exponent(&w, &a, i, j).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_is_well_defined(a in point(3, 3), seed in any::<u64>(), q in prop_oneof![Just(2u32), Just(3)]) {
        let f = PrimeField::new(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_i1(&mut rng, f, 3, 3);
        let g = GMat::t_diag(&a, f).mul(&i);
        prop_assert_eq!(decompose_kzti1(&g, 12).unwrap().lattice(), a);
    }

    #[test]
    fn decomposition_is_coset_invariant(a in point(3, 3), seed in any::<u64>(), z in -3i64..=3) {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_k(&mut rng, f, 3, 2).mul(&GMat::t_diag(&a, f)).mul(&random_i1(&mut rng, f, 3, 2));
        let k = random_k(&mut rng, f, 3, 2);
        let i = random_i1(&mut rng, f, 3, 2);
        let base = decompose_kzti1(&g, 12).unwrap().lattice();
        prop_assert_eq!(&base, &a);
        let moved = k.mul(&g.shift(z)).mul(&i);
        prop_assert_eq!(decompose_kzti1(&moved, 12).unwrap().lattice(), base);
    }

    #[test]
    fn verdicts_are_stable_under_more_precision(seed in any::<u64>(), a in point(3, 2)) {
        let f = PrimeField::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_k(&mut rng, f, 3, 3).mul(&GMat::t_diag(&a, f)).mul(&random_i1(&mut rng, f, 3, 3));
        let lo = decompose_kzti1(&g, 8).map(|d| d.lattice());
        let hi = decompose_kzti1(&g, 10).map(|d| d.lattice());
        match (lo, hi) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(iwahori_core::Error::PrecisionExceeded(_)), Ok(_)) => {}
            (x, y) => prop_assert!(false, "d=8: {:?}, d=10: {:?}", x, y),
        }
    }

    #[test]
    fn brute_force_hecke_matches_closed_forms((w, pts) in region_points(2, 1)) {
        let a = pts[0].clone();
        let f = PrimeField::new(2).unwrap();
        let cfg = config(CharacterCase::Iwahori, f, 0);
        let fa = BasisFunction::new(w, a).unwrap();
        let v = ModuleVector::basis(fa.clone(), f);
        let g = OperatorWord::parse(CharacterCase::Iwahori, "Tg").unwrap();
        let w1 = OperatorWord::parse(CharacterCase::Iwahori, "Tw1").unwrap();
        prop_assert_eq!(
            hecke_action_bruteforce_trivial(TrivialOp::Gamma, &fa, 2, 6, 8).unwrap(),
            act_word(&g, &v, &cfg).unwrap()
        );
        prop_assert_eq!(
            hecke_action_bruteforce_trivial(TrivialOp::Omega1, &fa, 2, 6, 8).unwrap(),
            act_word(&w1, &v, &cfg).unwrap()
        );
    }
}

#[test]
fn corollary_window_scaling() {
    let a = LatticeVec(vec![-3, -2]);
    for case in CharacterCase::ALL {
        let f = PrimeField::new(3).unwrap();
        let mut last = 0;
        for b in [5, 6, 7] {
            let r = corollary_certificate(&a, &config(case, f, -1), WindowSpec::new(b).unwrap()).unwrap();
            assert_eq!(r.dim_intersection, 0);
            assert!(r.dim_m2 > last);
            last = r.dim_m2;
        }
    }
}
