//! Every emitted ramification type is a valid cover type.

use proptest::prelude::*;
use splitjac::cover_types::{ram_report, rh_check, weierstrass_parity_check, Parity};

proptest! {
    #[test]
    fn emitted_types_pass_both_checks(n in 3u32..=60) {
        let report = ram_report(n).unwrap();
        prop_assert!(!report.types.is_empty());
        for (case, t) in &report.types {
            prop_assert_eq!(t.degree, n);
            prop_assert!(rh_check(t), "{} {} fails Riemann–Hurwitz", case, t);
            prop_assert!(weierstrass_parity_check(t, Parity::of(n)), "{} {} fails parity", case, t);
            prop_assert!(t.branch_points.iter().all(|f| f.iter().sum::<u32>() <= n));
        }
    }

    #[test]
    fn output_is_sorted_and_free_of_omitted_cases(n in 3u32..=60) {
        let report = ram_report(n).unwrap();
        let keys: Vec<(String, String)> = report
            .types
            .iter()
            .map(|(c, t)| (c.label(), t.to_string()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        prop_assert_eq!(&keys, &sorted);
        for o in &report.omitted {
            prop_assert!(report.types.iter().all(|(c, _)| *c != o.case));
        }
    }
}

#[test]
fn small_degrees_are_rejected() {
    assert!(ram_report(2).is_err());
}
