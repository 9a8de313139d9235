use proptest::prelude::*;
use rigidity_core::bounds::{max_genus_pi, mu1_for, mu2_for};
use rigidity_core::sieve::{
    derived_slack, derived_slack_exact, in_hypothesis_range, r3_sieve, scan, scan_with,
    DerivedInequality, ScanOptions,
};
use rigidity_core::{Castelnuovo, GenusBounds, SieveCase, Verdict};

/// Straight-line re-derivation of the sieve, sharing no code with the crate.
/// Returns `(alpha, case number, slack)` for each surviving configuration.
fn reference_scan(d: i64, g: i64, r: i64) -> Option<Vec<(i64, u8, i64)>> {
    if g == 0 {
        return None;
    }
    if g == 1 || d > 2 * g - 2 {
        return Some(vec![]);
    }
    let choose2 = |m: i64| m * (m - 1) / 2;
    let castelnuovo = |d: i64, n: i64| {
        let m = (d - 1) / (n - 1);
        choose2(m) * (n - 1) + m * (d - 1 - m * (n - 1))
    };
    let top = if d <= g { (d + 1) / 3 } else { (2 * d - g + 1) / 3 };
    let mut out = vec![];
    for a in r..=top {
        let cases: [(u8, i64, i64); 2] = if d < g {
            [
                (1, (d + 1) / 3, (r - 3) * g - (r + 1) * (d - a) + 3),
                (2, d / 3, (r - 3) * g - r * d + (r - 2) * a + 4),
            ]
        } else {
            [
                (3, (2 * d - g + 1) / 3, (r - 3) * g - (r + 1) * (d - a) + 3),
                (4, (2 * d - g) / 3, (r - 4) * g - (r - 1) * d + (r - 2) * a + 4),
            ]
        };
        for (n, cap, slack) in cases {
            if a > cap || slack < 0 {
                continue;
            }
            let m1 = (d - 1) / a;
            let e1 = d - 1 - m1 * a;
            let pi1 = choose2(m1) * a + m1 * (e1 + 1) + i64::from(e1 == a - 1);
            let m2 = (d - 1) / (a + 1);
            let e2 = d - 1 - m2 * (a + 1);
            let mu2 = if e2 == a { 2 } else if e2 >= a - 2 { 1 } else { 0 };
            let pi2 = choose2(m2) * (a + 1) + m2 * (e2 + 2) + mu2;
            let ok = g <= castelnuovo(d, a)
                && (d < 2 * a + 1 || g <= pi1)
                && (a < 8 || d < 2 * a + 3 || (g <= pi2 && g < pi1));
            if ok {
                out.push((a, n, slack));
            }
        }
    }
    Some(out)
}

fn summary(v: &Verdict<rigidity_core::SieveWitness>) -> Option<Vec<(i64, u8, i64)>> {
    match v {
        Verdict::OutOfScope { .. } => None,
        _ => Some(
            v.witnesses()
                .iter()
                .map(|w| (w.alpha, w.case.number(), w.slack as i64))
                .collect(),
        ),
    }
}

#[test]
fn scan_agrees_with_reference() {
    for r in 4..=14 {
        for d in 1..=90 {
            for g in 0..=3 * d {
                let got = scan(d, g, r).unwrap();
                assert_eq!(summary(&got), reference_scan(d, g, r), "({d},{g},{r})");
            }
        }
    }
}

#[test]
fn witnesses_have_room_for_the_second_bound() {
    for r in 4..=20 {
        for d in 1..=150 {
            let top = max_genus_pi(d.max(r), r).unwrap() as i64;
            for g in 1..=top {
                for w in scan(d, g, r).unwrap().witnesses() {
                    assert!(d >= 2 * w.alpha + 3, "({d},{g},{r}) {w:?}");
                    if matches!(w.case, SieveCase::Case3 | SieveCase::Case4) {
                        assert!(r >= 11, "({d},{g},{r}) {w:?}");
                        assert!(d >= r + 2 && d >= g && 2 * d >= g + 3 * r - 1);
                    }
                }
            }
        }
    }
}

#[test]
fn lone_exception_at_r9() {
    let v = scan(30, 34, 9).unwrap();
    assert_eq!(summary(&v), Some(vec![(9, 2, 1)]));
    assert!(scan(30, 33, 9).unwrap().is_excluded());
    assert_eq!(rigidity_core::sieve::case_slack(SieveCase::Case2, 30, 33, 9, 9), -5);
}

#[test]
fn hypothesis_range_is_excluded_for_small_degrees() {
    for r in 4..=20 {
        for d in 1..=120 {
            for g in 1..=4 * d {
                if in_hypothesis_range(d, g, r).unwrap() {
                    assert!(scan(d, g, r).unwrap().is_excluded(), "({d},{g},{r})");
                }
            }
        }
    }
}

#[test]
fn hypothesis_range_stops_before_four_d() {
    for r in 4..=20 {
        for d in 1..=500 {
            for g in 4 * d..4 * d + 40 {
                assert!(!in_hypothesis_range(d, g, r).unwrap(), "({d},{g},{r})");
            }
        }
    }
}

#[test]
fn space_curve_survivors() {
    let mut survivors = vec![];
    for d in 1..=200i64 {
        let top = if d >= 3 { max_genus_pi(d, 3).unwrap() as i64 } else { 0 };
        for g in d.max(5)..=top {
            if !r3_sieve(d, g).unwrap().is_excluded() {
                survivors.push((d, g));
            }
        }
    }
    assert_eq!(survivors, [(8, 8), (8, 9), (9, 9), (9, 10), (9, 11), (9, 12)]);
}

#[test]
fn substitution_identities() {
    for r in 4..=20 {
        for alpha in 8..=40 {
            for m in 1..=12 {
                for which in DerivedInequality::ALL {
                    let eps_max = if which.uses_pi2() { alpha } else { alpha - 1 };
                    for eps in 0..=eps_max {
                        let mu = if which.uses_pi2() { mu2_for(eps, alpha) } else { mu1_for(eps, alpha) };
                        assert_eq!(
                            derived_slack(which, r, alpha, m, eps, mu).unwrap(),
                            derived_slack_exact(which, r, alpha, m, eps, mu),
                            "{which:?} r={r} alpha={alpha} m={m} eps={eps}"
                        );
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn dropping_caps_never_loses_witnesses(d in 1i64..200, g in 0i64..400, r in 4i64..16) {
        let capped = scan(d, g, r).unwrap();
        let loose = scan_with(&Castelnuovo, d, g, r, ScanOptions { genus_caps: false }).unwrap();
        for w in capped.witnesses() {
            prop_assert!(loose.witnesses().contains(w));
        }
    }

    #[test]
    fn derived_identity_matches_case_slack(
        r in 4i64..20, alpha in 8i64..40, m in 2i64..20, eps_seed in 0i64..1000,
    ) {
        // with g at the bound, the derived value is twice the case slack
        let eps = eps_seed % alpha;
        let d = m * alpha + eps + 1;
        let p = Castelnuovo.profile(d, alpha).unwrap();
        prop_assume!(p.m1 == m);
        let g = p.pi1 as i64;
        let doubled = derived_slack(DerivedInequality::Case1Pi1, r, alpha, m, eps, p.mu1).unwrap();
        let slack = rigidity_core::sieve::case_slack(SieveCase::Case1, d, g, r, alpha);
        prop_assert_eq!(doubled, 2 * slack);
    }
}
