use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use srep::oracle::{enum_points, enum_up_words, enum_words, sem_contains, sem_in_closed, sem_inf_member, sem_member, sem_subset, sem_up_subword};
use srep::sample::{random_closed, random_code, random_product, random_up_word};
use srep::*;

fn a2() -> Space {
    Space::base(FinitePoset::antichain(&["a", "b"]))
}

fn c2() -> Space {
    Space::base(FinitePoset::chain(&["a", "b"]))
}

fn v3() -> Space {
    Space::base(FinitePoset::from_names(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap())
}

fn d4() -> Space {
    Space::base(
        FinitePoset::from_names(&["p", "q", "r", "s"], &[("p", "r"), ("p", "s"), ("q", "r"), ("q", "s")]).unwrap(),
    )
}

fn small_bases() -> Vec<Space> {
    vec![a2(), c2(), v3()]
}

fn finite_spaces() -> Vec<Space> {
    vec![
        a2(),
        c2(),
        v3(),
        d4(),
        Space::product(a2(), c2()),
        Space::sum(c2(), a2()),
        Space::sum(Space::product(c2(), c2()), a2()),
    ]
}

fn all_spaces() -> Vec<Space> {
    let mut out = finite_spaces();
    out.extend([
        Space::words(a2()),
        Space::words(v3()),
        Space::pow(c2()),
        Space::pow(Space::words(a2())),
        Space::fin_inf_words(c2()),
        Space::inf_words(a2()),
        Space::words(Space::product(a2(), c2())),
        Space::words(Space::words(c2())),
        Space::inf_words(Space::sum(a2(), c2())),
        Space::sum(Space::words(a2()), Space::pow(a2())),
    ]);
    out
}

fn pick(spaces: Vec<Space>, i: usize) -> Space {
    spaces[i % spaces.len()].clone()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn up_variant(s: &Space) -> Variant {
    match s.kind() {
        SpaceKind::Omega(v, _) => *v,
        _ => unreachable!(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn code_leq_is_a_preorder(seed in any::<u64>(), i in 0usize..64) {
        let s = pick(all_spaces(), i);
        let mut r = rng(seed);
        let c1 = random_code(&s, &mut r, 0).unwrap();
        let c2 = random_code(&s, &mut r, 0).unwrap();
        let c3 = random_code(&s, &mut r, 0).unwrap();
        prop_assert!(code_leq(&s, &c1, &c1).unwrap());
        if code_leq(&s, &c1, &c2).unwrap() && code_leq(&s, &c2, &c3).unwrap() {
            prop_assert!(code_leq(&s, &c1, &c3).unwrap());
        }
    }

    #[test]
    fn meet_is_a_greatest_lower_bound_family(seed in any::<u64>(), i in 0usize..64) {
        let s = pick(all_spaces(), i);
        let mut r = rng(seed);
        let c1 = random_code(&s, &mut r, 0).unwrap();
        let c2 = random_code(&s, &mut r, 0).unwrap();
        let m = code_meet(&s, &c1, &c2).unwrap();
        prop_assert!(m.is_antichain(&s));
        for e in m.iter() {
            prop_assert!(s.leq(e, &c1) && s.leq(e, &c2));
        }
        // codes below both, obtained by meeting with a third code
        let d = random_code(&s, &mut r, 0).unwrap();
        for e in m.iter() {
            for below in code_meet(&s, e, &d).unwrap().iter() {
                prop_assert!(m.covers(&s, below));
            }
        }
        if s.leq(&d, &c1) && s.leq(&d, &c2) {
            prop_assert!(m.covers(&s, &d));
        }
    }

    #[test]
    fn meet_commutes(seed in any::<u64>(), i in 0usize..64) {
        let s = pick(all_spaces(), i);
        let mut r = rng(seed);
        let c1 = random_code(&s, &mut r, 0).unwrap();
        let c2 = random_code(&s, &mut r, 0).unwrap();
        let m = code_meet(&s, &c1, &c2).unwrap();
        let n = code_meet(&s, &c2, &c1).unwrap();
        prop_assert!(cs_leq(&s, &m, &n).unwrap() && cs_leq(&s, &n, &m).unwrap());
    }

    #[test]
    fn cs_leq_matches_point_containment(seed in any::<u64>(), i in 0usize..16) {
        let s = pick(finite_spaces(), i);
        let mut r = rng(seed);
        let f = random_closed(&s, &mut r, 3, 0);
        let g = random_closed(&s, &mut r, 3, 0);
        let points = enum_points(&s).unwrap();
        let sem = points.iter().all(|p| !sem_in_closed(&s, &f, p) || sem_in_closed(&s, &g, p));
        prop_assert_eq!(cs_leq(&s, &f, &g).unwrap(), sem);
    }

    #[test]
    fn cs_reduce_gives_an_equivalent_antichain(seed in any::<u64>(), i in 0usize..64, n in 0usize..6) {
        let s = pick(all_spaces(), i);
        let mut r = rng(seed);
        let codes: Vec<Code> = (0..n).map(|_| random_code(&s, &mut r, 0).unwrap()).collect();
        let reduced = cs_reduce(&s, codes.clone()).unwrap();
        prop_assert!(reduced.is_antichain(&s));
        for c in &codes {
            prop_assert!(reduced.covers(&s, c));
        }
        for c in reduced.iter() {
            prop_assert!(codes.contains(c));
        }
    }

    #[test]
    fn wp_leq_matches_word_semantics(seed in any::<u64>(), i in 0usize..3) {
        let x = pick(small_bases(), i);
        let mut r = rng(seed);
        let p = random_product(&x, &mut r, 4, 0);
        let q = random_product(&x, &mut r, 4, 0);
        prop_assert_eq!(wp_leq(&x, &p, &q), sem_subset(&x, &p, &q));
    }

    #[test]
    fn wp_leq_is_a_preorder_with_least_epsilon(seed in any::<u64>(), i in 0usize..3) {
        let x = pick(small_bases(), i);
        let mut r = rng(seed);
        let ps: Vec<WordProduct> = (0..3).map(|_| random_product(&x, &mut r, 4, 0)).collect();
        prop_assert!(wp_leq(&x, &ps[0], &ps[0]));
        if wp_leq(&x, &ps[0], &ps[1]) && wp_leq(&x, &ps[1], &ps[2]) {
            prop_assert!(wp_leq(&x, &ps[0], &ps[2]));
        }
        prop_assert!(wp_leq(&x, &WordProduct::epsilon(), &ps[0]));
        prop_assert!(sem_member(&x, &[], &ps[0]));
    }

    #[test]
    fn wp_meet_denotes_the_intersection(seed in any::<u64>(), i in 0usize..3) {
        let x = pick(small_bases(), i);
        let mut r = rng(seed);
        let p = random_product(&x, &mut r, 3, 0);
        let q = random_product(&x, &mut r, 3, 0);
        let m = wp_meet(&x, &p, &q).unwrap();
        for (k, a) in m.iter().enumerate() {
            for (l, b) in m.iter().enumerate() {
                prop_assert!(k == l || !wp_leq(&x, a, b));
            }
        }
        for w in enum_words(x.as_poset().unwrap(), 5) {
            let both = sem_member(&x, &w, &p) && sem_member(&x, &w, &q);
            prop_assert_eq!(both, m.iter().any(|e| sem_member(&x, &w, e)));
        }
    }

    #[test]
    fn wp_canon_is_idempotent_and_equivalent(seed in any::<u64>(), i in 0usize..64) {
        let s = pick(all_spaces(), i);
        let x = s;
        let mut r = rng(seed);
        let p = random_product(&x, &mut r, 5, 0);
        let c = wp_canon(&x, &p);
        prop_assert!(wp_leq(&x, &p, &c) && wp_leq(&x, &c, &p));
        prop_assert_eq!(wp_canon(&x, &c), c);
    }

    #[test]
    fn pow_meet_is_principal_and_pow_leq_is_subset_semantics(seed in any::<u64>(), i in 0usize..16) {
        let x = pick(finite_spaces(), i);
        let mut r = rng(seed);
        let u = random_closed(&x, &mut r, 3, 0);
        let v = random_closed(&x, &mut r, 3, 0);
        let meet = pow_meet(&x, &u, &v).unwrap();
        prop_assert_eq!(meet.len(), 1);
        let s = Space::pow(x.clone());
        let subsets = enum_points(&s).unwrap();
        let (cu, cv, cm) = (Code::Pow(u.clone()), Code::Pow(v.clone()), Code::Pow(meet[0].clone()));
        let sem_leq = subsets.iter().all(|a| !sem_contains(&s, &cu, a) || sem_contains(&s, &cv, a));
        prop_assert_eq!(pow_leq(&x, &u, &v).unwrap(), sem_leq);
        for a in &subsets {
            let both = sem_contains(&s, &cu, a) && sem_contains(&s, &cv, a);
            prop_assert_eq!(both, sem_contains(&s, &cm, a));
        }
        if pow_leq(&x, &u, &v).unwrap() && pow_leq(&x, &v, &u).unwrap() {
            prop_assert_eq!(u, v);
        }
    }

    #[test]
    fn inf_meet_denotes_the_intersection(seed in any::<u64>(), i in 0usize..4) {
        let s = pick(vec![Space::fin_inf_words(a2()), Space::inf_words(a2()), Space::fin_inf_words(c2()), Space::inf_words(v3())], i);
        let SpaceKind::Omega(variant, x) = s.kind() else { unreachable!() };
        let mut r = rng(seed);
        let (Code::Omega(c), Code::Omega(d)) = (random_code(&s, &mut r, 0).unwrap(), random_code(&s, &mut r, 0).unwrap()) else { unreachable!() };
        let m = inf_meet(x, *variant, &c, &d).unwrap();
        let letters = enum_points(x).unwrap();
        for w in enum_up_words(&letters, 3, 2, *variant) {
            let both = sem_inf_member(x, *variant, &w, &c) && sem_inf_member(x, *variant, &w, &d);
            prop_assert_eq!(both, m.iter().any(|e| sem_inf_member(x, *variant, &w, e)));
        }
    }

    #[test]
    fn inf_leq_is_sound(seed in any::<u64>(), i in 0usize..4) {
        let s = pick(vec![Space::fin_inf_words(a2()), Space::inf_words(a2()), Space::fin_inf_words(c2()), Space::inf_words(c2())], i);
        let variant = up_variant(&s);
        let SpaceKind::Omega(_, x) = s.kind() else { unreachable!() };
        let mut r = rng(seed);
        let (Code::Omega(c), Code::Omega(d)) = (random_code(&s, &mut r, 0).unwrap(), random_code(&s, &mut r, 0).unwrap()) else { unreachable!() };
        let letters = enum_points(x).unwrap();
        let words = enum_up_words(&letters, 4, 3, variant);
        let sem = words.iter().all(|w| !sem_inf_member(x, variant, w, &c) || sem_inf_member(x, variant, w, &d));
        prop_assert_eq!(inf_leq(x, &c, &d), sem);
    }

    #[test]
    fn closure_matches_greedy_embedding(seed in any::<u64>(), i in 0usize..3) {
        let x = pick(small_bases(), i);
        let mut r = rng(seed);
        for variant in [Variant::FinOrInf, Variant::Inf] {
            let min = usize::from(variant == Variant::Inf);
            let w = random_up_word(&x, &mut r, 4, min, 3).unwrap();
            let w2 = random_up_word(&x, &mut r, 4, min, 3).unwrap();
            let cl = up_closure(&x, &w2, variant).unwrap();
            prop_assert_eq!(inf_member(&x, variant, &w, &cl).unwrap(), sem_up_subword(&x, &w, &w2));
            prop_assert_eq!(up_subword_leq(&x, &w, &w2).unwrap(), sem_up_subword(&x, &w, &w2));
        }
    }

    #[test]
    fn membership_routes_agree(seed in any::<u64>(), i in 0usize..4) {
        let s = pick(vec![Space::fin_inf_words(a2()), Space::inf_words(a2()), Space::fin_inf_words(v3()), Space::inf_words(c2())], i);
        let variant = up_variant(&s);
        let SpaceKind::Omega(_, x) = s.kind() else { unreachable!() };
        let mut r = rng(seed);
        let Code::Omega(c) = random_code(&s, &mut r, 0).unwrap() else { unreachable!() };
        let w = random_up_word(x, &mut r, 4, usize::from(variant == Variant::Inf), 3).unwrap();
        prop_assert_eq!(inf_member(x, variant, &w, &c).unwrap(), sem_inf_member(x, variant, &w, &c));
    }

    #[test]
    fn closure_is_invariant_under_unrolling(seed in any::<u64>(), i in 0usize..3, k in 2usize..4) {
        let x = pick(small_bases(), i);
        let mut r = rng(seed);
        let w = random_up_word(&x, &mut r, 3, 1, 3).unwrap();
        for variant in [Variant::FinOrInf, Variant::Inf] {
            let a = up_closure(&x, &w, variant).unwrap();
            let b = up_closure(&x, &w.unrolled(k), variant).unwrap();
            prop_assert!(inf_leq(&x, &a, &b) && inf_leq(&x, &b, &a));
        }
    }

    #[test]
    fn point_closures_contain_their_point(seed in any::<u64>(), i in 0usize..64) {
        let s = pick(all_spaces(), i);
        let mut r = rng(seed);
        let p = srep::sample::random_point(&s, &mut r).unwrap();
        let c = srep::point::closure(&s, &p).unwrap();
        prop_assert!(srep::point::member(&s, &p, &c).unwrap());
    }
}

#[test]
fn enum_words_counts() {
    for x in small_bases() {
        let n = x.as_poset().unwrap().len();
        for len in 0..5 {
            let expected: usize = (0..=len).map(|k| n.pow(k as u32)).sum();
            let words = enum_words(x.as_poset().unwrap(), len);
            assert_eq!(words.len(), expected);
            let mut dedup = words.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), expected);
        }
    }
}
