use jsharp::classify::{decompositions, is_strongly_jsharp_clean_via_x, Kind};
use jsharp::dsl::{build_ring, parse_ring_expr};
use jsharp::render::{parse_element, render_element};
use jsharp::{compute_structural_sets, sets, FiniteRing};
use proptest::prelude::*;

fn small_expr() -> impl Strategy<Value = String> {
    prop_oneof![
        (1usize..=12).prop_map(|n| format!("Z{n}")),
        (2usize..=6, 2usize..=6).prop_map(|(a, b)| format!("prod(Z{a},Z{b})")),
        (2usize..=4).prop_map(|n| format!("T2(Z{n})")),
        (2usize..=3).prop_map(|n| format!("M2(Z{n})")),
        (2usize..=6, prop::sample::select(vec!["C2", "C3", "C2xC2"])).prop_filter_map(
            "order within 256",
            |(n, g)| {
                let gorder = if g == "C3" { 3 } else if g == "C2" { 2 } else { 4 };
                (n.pow(gorder) <= 256).then(|| format!("GR(Z{n},{g})"))
            }
        ),
        (2usize..=3, 0usize..3).prop_map(|(n, s)| format!("K(Z{n},{})", s % n)),
        (2usize..=4).prop_map(|n| format!("quot(Z{},{{{n}}})", 2 * n)),
    ]
}

fn ring_and_element() -> impl Strategy<Value = (FiniteRing, usize)> {
    small_expr().prop_flat_map(|e| {
        let r = build_ring(&e).unwrap();
        let n = r.order();
        (Just(r), 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expressions_round_trip_and_validate(e in small_expr()) {
        let ast = parse_ring_expr(&e).unwrap();
        prop_assert_eq!(ast.to_string(), e.clone());
        let r = build_ring(&e).unwrap();
        prop_assert!(r.validate().is_ok());
        prop_assert_eq!(build_ring(&e).unwrap().content_hash(), r.content_hash());
    }

    #[test]
    fn rendering_round_trips((r, x) in ring_and_element()) {
        let text = render_element(&r, x);
        prop_assert_eq!(parse_element(&r, &text).unwrap(), x);
    }

    #[test]
    fn decompositions_meet_their_definition((r, a) in ring_and_element(), k in 0usize..Kind::COUNT) {
        let kind = Kind::ALL[k];
        let target = kind.target().set(&r).clone();
        for d in decompositions(&r, a, kind) {
            prop_assert_eq!(r.mul(d.idempotent, d.idempotent), d.idempotent);
            prop_assert_eq!(r.add(d.idempotent, d.complement), a);
            prop_assert!(target.contains(d.complement));
            if kind.is_strong() {
                prop_assert!(r.commute(d.idempotent, d.complement));
            }
        }
    }

    #[test]
    fn x_characterization_matches_search((r, a) in ring_and_element()) {
        let found = !decompositions(&r, a, Kind::StronglyJsharpClean).is_empty();
        prop_assert_eq!(is_strongly_jsharp_clean_via_x(&r, a).is_some(), found);
    }

    #[test]
    fn structural_set_chain((r, a) in ring_and_element()) {
        let s = compute_structural_sets(&r).unwrap();
        prop_assert!(s.jacobson.is_subset(&s.j_sharp));
        prop_assert!(s.nilpotents.is_subset(&s.quasi_nilpotents));
        prop_assert!(s.quasi_nilpotents.is_subset(&s.delta_nilpotents));
        // J is an ideal
        if s.jacobson.contains(a) {
            for x in 0..r.order() {
                prop_assert!(s.jacobson.contains(r.mul(x, a)) && s.jacobson.contains(r.mul(a, x)));
            }
        }
        // units form a group
        if s.units.contains(a) {
            let inv = r.inverse(a).unwrap();
            prop_assert_eq!(r.mul(a, inv), r.one());
            prop_assert_eq!(r.mul(inv, a), r.one());
            for u in s.units.iter() {
                prop_assert!(s.units.contains(r.mul(a, u)));
            }
        }
    }

    #[test]
    fn oracle_agrees(e in small_expr()) {
        let r = build_ring(&e).unwrap();
        prop_assert_eq!(&sets::oracle::jacobson_two_sided(&r), sets::jacobson_radical(&r).unwrap());
    }

    #[test]
    fn single_entry_corruption_is_caught(n in 2usize..=9, a in 0usize..9, b in 0usize..9, bump in 1usize..9) {
        let r = build_ring(&format!("Z{n}")).unwrap();
        let (a, b) = (a % n, b % n);
        let (add, mut mul) = r.tables();
        mul[a][b] = (mul[a][b] + 1 + bump % (n - 1).max(1)) % n;
        prop_assume!(mul[a][b] != (a * b) % n);
        let bad = FiniteRing::from_tables_unchecked(&add, &mul, 0, 1 % n, "bad").unwrap();
        prop_assert!(bad.validate().is_err());
    }
}
