use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use rgdlin::interval::{algebraic_interval, geometric_interval_search, prenilpotent_pairs, scan_roots};
use rgdlin::{Bounds, CoxeterMatrix, CoxeterSystem, FieldElem, Gen, Root, RootBasis, Side};

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn elem() -> impl Strategy<Value = FieldElem> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| FieldElem::new(a, b, c, d))
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(0..rank, 0..=max_len)
}

fn systems() -> Vec<CoxeterSystem> {
    vec![
        CoxeterSystem::new(CoxeterMatrix::universal3()),
        CoxeterSystem::new(CoxeterMatrix::type444()),
    ]
}

fn root_of(sys: &CoxeterSystem, w: &[Gen], s: Gen, negated: bool) -> Root {
    sys.root(&sys.reduce_word(w), s, negated)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn field_ring_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn field_order_is_compatible(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
        if a < b {
            prop_assert!(&a + &c < &b + &c);
        }
        let approx = a.to_f64();
        if approx.abs() > 1e-9 {
            prop_assert_eq!(a.sign(), if approx > 0.0 { 1 } else { -1 });
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn length_is_inverse_invariant(sys_idx in 0..2usize, w in word(3, 10)) {
        let sys = &systems()[sys_idx];
        let x = sys.reduce_word(&w);
        prop_assert_eq!(sys.length(&sys.inverse(&x)), sys.length(&x));
        prop_assert!(x.len() <= w.len() && (w.len() - x.len()).is_multiple_of(2));
    }

    #[test]
    fn reduction_is_idempotent(sys_idx in 0..2usize, w in word(3, 10)) {
        let sys = &systems()[sys_idx];
        let x = sys.reduce_word(&w);
        prop_assert_eq!(sys.reduce_word(x.word()), x);
    }

    #[test]
    fn braid_relations_are_invisible(prefix in word(3, 4), suffix in word(3, 4), s in 0..3usize, dt in 1..3usize) {
        let sys = &systems()[1];
        let t = (s + dt) % 3;
        let glue = |braid: [Gen; 4]| {
            let mut w = prefix.clone();
            w.extend(braid);
            w.extend(&suffix);
            sys.reduce_word(&w)
        };
        prop_assert_eq!(glue([s, t, s, t]), glue([t, s, t, s]));
    }

    #[test]
    fn root_action_is_equivariant(
        sys_idx in 0..2usize, u in word(3, 5), v in word(3, 5), w in word(3, 5), s in 0..3usize, neg: bool,
    ) {
        let sys = &systems()[sys_idx];
        let alpha = root_of(sys, &w, s, neg);
        let (u, v) = (sys.reduce_word(&u), sys.reduce_word(&v));
        let composite = sys.act_root(&sys.mul(&u, &v), &alpha);
        prop_assert_eq!(sys.act_root(&u, &sys.act_root(&v, &alpha)), composite.clone());
        let reflection = sys.reflection(&alpha);
        prop_assert_eq!(sys.act_root(&reflection, &alpha), -&alpha);
        prop_assert_eq!(sys.chamber_in(&u, &alpha), !sys.chamber_in(&u, &-&alpha));
    }

    #[test]
    fn keys_round_trip_through_expressions(sys_idx in 0..2usize, w in word(3, 8), s in 0..3usize, neg: bool) {
        let sys = &systems()[sys_idx];
        let alpha = root_of(sys, &w, s, neg);
        let text = sys.format_root(&alpha);
        let back = sys.parse_root(&text).unwrap();
        prop_assert_eq!(sys.format_root(&back), text);
        prop_assert_eq!(back, alpha);
    }

    #[test]
    fn prenilpotency_matches_chamber_search(sys_idx in 0..2usize, w1 in word(3, 4), w2 in word(3, 4),
                                            s1 in 0..3usize, s2 in 0..3usize, n1: bool, n2: bool) {
        let sys = &systems()[sys_idx];
        let a = root_of(sys, &w1, s1, n1);
        let b = root_of(sys, &w2, s2, n2);
        prop_assume!(a != b && a != -&b);
        let both = sys.find_chamber(&a, &b, (Side::Inside, Side::Inside), 12).is_some()
            && sys.find_chamber(&a, &b, (Side::Outside, Side::Outside), 12).is_some();
        prop_assert_eq!(sys.is_prenilpotent(&a, &b), both);
    }
}

fn pair_strategy() -> impl Strategy<Value = (usize, usize)> {
    (0..2usize, any::<prop::sample::Index>()).prop_map(|(sys_idx, i)| (sys_idx, i.index(usize::MAX)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn intervals_nest_and_are_symmetric((sys_idx, pick) in pair_strategy(), u in word(3, 3)) {
        let sys = &systems()[sys_idx];
        let pairs = prenilpotent_pairs(sys, &scan_roots(sys, 3));
        let (a, b) = &pairs[pick % pairs.len()];
        let basis = RootBasis::canonical(sys.matrix());
        let bounds = Bounds::with_radius(6);

        let geo = geometric_interval_search(sys, a, b, &bounds).unwrap().root_set();
        let lin = algebraic_interval(sys, &basis, a, b, &bounds).unwrap().root_set();
        prop_assert!(lin.is_subset(&geo));
        prop_assert!(geo.contains(a) && geo.contains(b));
        prop_assert_eq!(geometric_interval_search(sys, b, a, &bounds).unwrap().root_set(), geo.clone());
        prop_assert_eq!(algebraic_interval(sys, &basis, b, a, &bounds).unwrap().root_set(), lin.clone());

        // The cone test is W-invariant, so translating the pair translates the
        // algebraic interval exactly.
        let u = sys.reduce_word(&u);
        let (ua, ub) = (sys.act_root(&u, a), sys.act_root(&u, b));
        let moved: std::collections::BTreeSet<Root> = lin.iter().map(|g| sys.act_root(&u, g)).collect();
        prop_assert_eq!(algebraic_interval(sys, &basis, &ua, &ub, &bounds).unwrap().root_set(), moved);

        let wider = geometric_interval_search(sys, a, b, &Bounds::with_radius(8)).unwrap().root_set();
        prop_assert!(wider.is_subset(&geo));
    }
}
