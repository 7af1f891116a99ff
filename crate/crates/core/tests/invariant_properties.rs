use l2alex_core::detector::{detect, Detection};
use l2alex_core::invariant::{equivalent, expr_of, summary_of, InvariantExpr, InvariantSummary, Verdict};
use l2alex_core::KnotSpec;
use proptest::prelude::*;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn leaf() -> impl Strategy<Value = KnotSpec> {
    prop::sample::select(vec!["unknot", "3_1", "4_1", "5_2", "T(2,5)", "T(3,4)", "T(2,7)", "K12n242"])
        .prop_map(KnotSpec::catalog)
}

fn fibered_leaf() -> impl Strategy<Value = KnotSpec> {
    prop::sample::select(vec!["unknot", "3_1", "4_1", "T(2,5)", "T(3,4)"]).prop_map(KnotSpec::catalog)
}

fn cable_params() -> impl Strategy<Value = (i64, i64)> {
    (-4i64..=4, -5i64..=5).prop_filter("coprime, nonzero winding", |&(p, q)| p != 0 && gcd(p, q) == 1)
}

fn tree(leaves: BoxedStrategy<KnotSpec>) -> impl Strategy<Value = KnotSpec> {
    leaves.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| KnotSpec::sum(a, b)),
            (cable_params(), inner.clone()).prop_map(|((p, q), k)| KnotSpec::cable(p, q, k)),
            inner.clone().prop_map(KnotSpec::mirror),
            inner.prop_map(KnotSpec::reverse),
        ]
    })
}

fn any_tree() -> impl Strategy<Value = KnotSpec> {
    tree(leaf().boxed())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn genus_is_half_the_tail_span(k in any_tree()) {
        let e = expr_of(&k).unwrap();
        let (lo, hi) = e.tail_degrees().unwrap();
        prop_assert_eq!(hi - lo, 2 * e.genus().unwrap() as i64);
        prop_assert_eq!(e.canonical().unwrap().tail_degrees(), (lo, hi));
    }

    #[test]
    fn volume_rules(k in any_tree(), (p, q) in cable_params(), j in any_tree()) {
        let e = expr_of(&k).unwrap();
        let v = e.volume().unwrap();
        let cabled = InvariantExpr::cable(p, q, e.clone()).unwrap();
        prop_assert_eq!(cabled.volume().unwrap(), v);
        prop_assert_eq!(InvariantExpr::recip(e.clone()).volume().unwrap(), v);
        let f = expr_of(&j).unwrap();
        let sum = InvariantExpr::product(vec![e, f.clone()]).volume().unwrap();
        prop_assert!((sum - v - f.volume().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn torus_sums_keep_lambda(k in tree(fibered_leaf().boxed()), g in 0u32..5) {
        let e = expr_of(&k).unwrap();
        let with_torus = InvariantExpr::product(vec![e.clone(), InvariantExpr::torus(g)]);
        prop_assert_eq!(with_torus.lambda().unwrap(), e.lambda().unwrap());
    }

    #[test]
    fn double_recip_is_equivalent(k in any_tree()) {
        let e = expr_of(&k).unwrap();
        let r = equivalent(&InvariantExpr::recip(InvariantExpr::recip(e.clone())), &e).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Equivalent);
        prop_assert_eq!(r.shift, Some(0));
    }

    #[test]
    fn mirror_is_equivalent(k in any_tree()) {
        let e = expr_of(&k).unwrap();
        let r = equivalent(&e, &expr_of(&KnotSpec::mirror(k)).unwrap()).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Equivalent);
    }

    #[test]
    fn summaries_validate_and_round_trip(k in any_tree()) {
        let s = summary_of(&expr_of(&k).unwrap()).unwrap();
        prop_assert!((s.value_at_1 - (s.volume / (6.0 * std::f64::consts::PI)).exp()).abs() <= 1e-9);
        let back = InvariantSummary::from_json(&s.to_json()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn detection_is_total_and_mirror_blind(k in any_tree()) {
        let s = summary_of(&expr_of(&k).unwrap()).unwrap();
        let a = detect(&s).unwrap();
        let b = detect(&summary_of(&expr_of(&KnotSpec::mirror(k)).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(&a, &b);
        if let Detection::Detected { names } = &a.verdict {
            prop_assert!(!names.is_empty());
        }
    }

    #[test]
    fn piecewise_equivalence_is_exact(g1 in 0u32..4, g2 in 0u32..4, s in -3i64..=3) {
        let (a, b) = (InvariantExpr::torus(g1), InvariantExpr::torus(g2));
        let r = equivalent(&a, &b).unwrap();
        prop_assert_eq!(r.verdict == Verdict::Equivalent, g1 == g2);
        let ca = a.canonical().unwrap();
        let mut shifted = ca.clone();
        shifted.shift += s;
        prop_assert_eq!(ca.shift_to(&shifted), Some(s));
    }
}
