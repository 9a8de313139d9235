use proptest::prelude::*;
use rigidity_sieve::sweep::{sweep, SweepOptions};
use rigidity_sieve::{query, QueryReport, Suite, SuiteOptions};

proptest! {
    #[test]
    fn query_json_round_trips(d in 1i64..300, g in 0i64..600, r in 3i64..25) {
        let report = query(d, g, r).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: QueryReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn query_matches_sweep_row(r in 4i64..12, d_seed in 0i64..1000, g_seed in 0i64..1000) {
        let d = r + d_seed % 40;
        let top = rigidity_core::bounds::max_genus_pi(d, r).unwrap() as i64;
        prop_assume!(top >= 1);
        let g = 1 + g_seed % top;
        let rows = sweep(&SweepOptions { r, d_max: d, g_max: None, in_range_only: false }).unwrap();
        let row = rows.iter().find(|row| row.d == d && row.g == g).unwrap();
        let q = query(d, g, r).unwrap();
        let rigidity_sieve::query::QueryVerdict::General { verdict } = &q.verdict else {
            panic!("general verdict expected");
        };
        prop_assert_eq!(row.verdict.as_str(), verdict.label());
        prop_assert_eq!(row.witnesses, verdict.witnesses().len());
    }
}

#[test]
fn reports_are_reproducible() {
    let opts = SuiteOptions { r: Some(9), d_max: 80, ..SuiteOptions::default() };
    let a = Suite::Thm41.run(&opts).unwrap();
    let b = Suite::Thm41.run(&opts).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn no_exception_flag_reaches_the_sweep() {
    let opts = SuiteOptions { r: Some(9), d_max: 80, no_exception: true, ..SuiteOptions::default() };
    let reports = Suite::Thm41.run(&opts).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].violations.len(), 1);
}
