use proptest::prelude::*;

use rdyn_core::bounds::{bounds_report, BoundsInput};

fn close(a: Option<f64>, b: f64) -> bool {
    a.is_some_and(|a| (a - b).abs() <= 1e-9 * b.abs().max(1.0))
}

proptest! {
    /// Every number in a report follows from the echoed inputs alone.
    #[test]
    fn report_recomputes_from_inputs(
        small in 1usize..500,
        extra in 0usize..500,
        r in 2usize..5,
        l in 1usize..60,
        s in proptest::option::of(1usize..10),
    ) {
        let inp = BoundsInput { max_degree: small + extra, min_degree: small, r, l, s, n: None, p: None, f: None };
        let rep = bounds_report(&inp).unwrap();
        prop_assert_eq!(&rep.inputs, &inp);
        let i = &rep.inputs;
        let (big, delta, rf, lf) = (i.max_degree as f64, i.min_degree as f64, i.r as f64, i.l as f64);

        prop_assert!(close(rep.entry("greedy").unwrap().bound, rf * big + 1.0));

        let t1 = rep.entry("degree_condition").unwrap();
        if let Some(s) = i.s.filter(|&s| s + 1 >= i.r) {
            let sf = s as f64;
            let lhs = ((rf + 1.0) * big.ln() + (rf - 1.0) * rf.ln() + 1.0) * ((lf + sf) / sf).powf(rf - 1.0);
            prop_assert!(close(t1.hypothesis_lhs, lhs));
            prop_assert_eq!(t1.applicable, Some(lhs <= delta));
            prop_assert!(close(t1.bound, lf + sf + rf - 2.0));
        } else {
            prop_assert!(t1.bound.is_none());
        }

        let k = big / delta;
        let c6 = rep.entry("large_choice_number").unwrap();
        let threshold = 6f64.powf(2.0 * rf) * rf.powf(3.0 * rf) * k * k;
        let s6 = (3.0 * k * rf * lf.powf(rf - 2.0) * lf.ln()).powf(1.0 / (rf - 1.0)).ceil();
        prop_assert!(close(c6.hypothesis_lhs, threshold));
        prop_assert_eq!(c6.applicable, Some(threshold <= lf));
        prop_assert!(close(c6.bound, lf + s6 + rf - 2.0));

        let c7 = rep.entry("choice_plus_r").unwrap();
        let lhs7 = ((rf + 1.0) * big.ln() + (rf - 1.0) * rf.ln() + 1.0) * (lf + 1.0).powf(rf - 1.0);
        prop_assert!(close(c7.hypothesis_lhs, lhs7));
        prop_assert!(close(c7.bound, lf + rf - 1.0));
        if i.r == 2 {
            // The r = 2 form rounds ln 2 + 1 up to 2, so it implies the general one.
            let c7r2 = rep.entry("choice_plus_one").unwrap();
            let lhs = (3.0 * big.ln() + 2.0) * (lf + 1.0);
            prop_assert!(close(c7r2.hypothesis_lhs, lhs));
            prop_assert!(lhs >= lhs7);
            prop_assert!(c7r2.applicable != Some(true) || c7.applicable == Some(true));
        }

        let t9 = rep.entry("triangle_free").unwrap();
        prop_assert!(close(t9.hypothesis_lhs, 6.0 * big.ln() + 2.0));
        prop_assert!(close(t9.bound, lf + 86.0 * big / delta));
        if extra == 0 {
            prop_assert!(close(t9.bound, lf + 86.0));
        }

        prop_assert!(rep.entry("random_graph").unwrap().bound.is_none());
        prop_assert!(rep.entry("sparse_neighborhoods").unwrap().bound.is_none());
    }
}
