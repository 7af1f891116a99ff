use l2alex_core::fox::jacobian;
use l2alex_core::group::{GroupRingElement, NormalFormOracle, RingMatrix, Word};
use l2alex_core::knot::catalog;
use l2alex_core::vna::norm::norm_bound;
use l2alex_core::vna::twist::TwistedMatrix;
use l2alex_core::vna::{delta_at, fk_det, vn_trace, DetParams, Route};
use l2alex_core::KnotPresentation;
use proptest::prelude::*;

fn word(rank: i32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=rank).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]), 0..=max_len)
        .prop_map(Word::from_letters)
}

fn element(rank: i32) -> impl Strategy<Value = GroupRingElement> {
    prop::collection::vec((word(rank, 3), -2i32..=2), 0..4)
        .prop_map(|ts| GroupRingElement::from_terms(ts.into_iter().map(|(w, c)| (w, c as f64))))
}

fn matrix(n: usize, rank: i32) -> impl Strategy<Value = TwistedMatrix> {
    prop::collection::vec(element(rank), n * n).prop_map(move |cells| {
        let rows = cells.chunks(n).map(|r| r.to_vec()).collect();
        TwistedMatrix::new(RingMatrix::from_rows(rows), 1.0, NormalFormOracle::trivial(rank as usize)).unwrap()
    })
}

fn fig8() -> KnotPresentation {
    catalog("4_1").unwrap().presentation().unwrap().unwrap()
}

fn params(terms: usize) -> DetParams {
    DetParams { terms, ..DetParams::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_is_positive(a in matrix(2, 2)) {
        let h = a.adjoint().unwrap().compose(&a).unwrap();
        let squares: f64 = a.entries().entries().map(|(_, _, e)| e.terms().map(|(_, c)| c * c).sum::<f64>()).sum();
        prop_assert_eq!(vn_trace(&h).unwrap(), squares);
    }

    #[test]
    fn trace_is_tracial(a in matrix(2, 2), b in matrix(2, 2)) {
        let ab = vn_trace(&a.compose(&b).unwrap()).unwrap();
        let ba = vn_trace(&b.compose(&a).unwrap()).unwrap();
        prop_assert!((ab - ba).abs() < 1e-9);
    }

    #[test]
    fn tracial_in_free_by_cyclic(u in element(3), v in element(3)) {
        let o = fig8().oracle.unwrap();
        let one = |x: &GroupRingElement| TwistedMatrix::new(RingMatrix::from_rows(vec![vec![x.clone()]]), 1.0, o.clone()).unwrap();
        let (a, b) = (one(&u), one(&v));
        let ab = vn_trace(&a.compose(&b).unwrap()).unwrap();
        let ba = vn_trace(&b.compose(&a).unwrap()).unwrap();
        prop_assert!((ab - ba).abs() < 1e-9);
    }

    #[test]
    fn norm_bounds(a in matrix(2, 2), b in matrix(2, 2)) {
        prop_assert!(norm_bound(&a.compose(&b).unwrap()) <= norm_bound(&a) * norm_bound(&b) + 1e-9);
        // moments of a positive operator never outgrow its norm
        let h = a.adjoint().unwrap().compose(&a).unwrap();
        let n = norm_bound(&a);
        let mut p = h.clone();
        for k in 1..=3 {
            let tr = vn_trace(&p).unwrap();
            prop_assert!(tr <= 2.0 * n.powi(2 * k) + 1e-9);
            p = p.compose(&h).unwrap();
        }
    }

    #[test]
    fn determinant_scales(a in matrix(2, 2), s in prop_oneof![Just(0.5), Just(-2.0), Just(3.0)]) {
        let base = fk_det(&a, &params(8));
        prop_assume!(base.is_ok());
        let base = base.unwrap();
        let scaled = fk_det(&a.scale(s), &params(8)).unwrap();
        let want = base.estimate * s.abs().powi(2);
        prop_assert!((scaled.estimate - want).abs() <= 1e-9 * want, "{} vs {}", scaled.estimate, want);
    }

    #[test]
    fn partial_estimates_decrease(a in matrix(2, 2)) {
        if let Ok(r) = fk_det(&a, &params(10)) {
            let slack = r.pruning_log_slack.exp();
            for w in r.partial_estimates.windows(2) {
                prop_assert!(w[1] <= w[0] * slack * (1.0 + 1e-12));
            }
        }
    }
}

#[test]
fn below_series_words_have_no_identity() {
    let kp = fig8();
    let fp = kp.fibered.as_ref().unwrap();
    let o = fp.oracle.clone();
    let j = jacobian(&fp.monodromy).unwrap();
    let z = Word::generator(0);
    let b = RingMatrix::from_fn(2, 2, |r, c| {
        GroupRingElement::from_terms(j.winv.get(r, c).terms().map(|(u, x)| (z.mul(&u.map_generators(|g| g + 1)), x * 0.25)))
    });
    let b = TwistedMatrix::new(b, 0.25, o).unwrap();
    let mut p = b.clone();
    for n in 1..=4 {
        for (_, _, e) in p.entries().entries() {
            for (w, _) in e.terms() {
                assert_eq!(b.oracle().split(w).unwrap().0, n, "power {n}");
            }
        }
        assert_eq!(vn_trace(&p).unwrap(), 0.0);
        p = p.compose(&b).unwrap();
    }
}

#[test]
fn direct_agrees_with_above() {
    let kp = fig8();
    for &t in &[2.0, 3.0, 4.0] {
        let d = delta_at(&kp, t, &params(8), Route::Direct).unwrap();
        let a = delta_at(&kp, t, &params(8), Route::Above).unwrap();
        assert!((d.value - a.value).abs() <= 1e-9 * a.value, "t={t}: {} vs {}", d.value, a.value);
    }
}

#[test]
fn deterministic_across_runs() {
    let kp = fig8();
    let a = delta_at(&kp, 4.0, &params(8), Route::Above).unwrap();
    let b = delta_at(&kp, 4.0, &params(8), Route::Above).unwrap();
    assert_eq!(a.value.to_bits(), b.value.to_bits());
    assert_eq!(a.det.moments, b.det.moments);
}
