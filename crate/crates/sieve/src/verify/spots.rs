use rigidity_core::bounds::{
    brill_noether, euler_normal, image_dim_r3, mu1_for, mu2_for, quadric_types,
};
use rigidity_core::sieve::{derived_slack, derived_slack_exact, DerivedInequality};
use rigidity_core::surfaces::{arith_genus, intersect};
use rigidity_core::{Castelnuovo, CurveClass, DivisorClass, GenusBounds};

use super::VerificationReport;
use crate::Error;

pub fn verify_spot_values() -> VerificationReport {
    verify_spot_values_with(&Castelnuovo)
}

/// Known values of the bounds and dimension counts, recomputed through
/// `bounds` so that a corrupted bound provider shows up here.
pub fn verify_spot_values_with<B: GenusBounds + ?Sized>(bounds: &B) -> VerificationReport {
    let mut rep = VerificationReport::new(
        "spot-values",
        "bound values, rho(9,8,3), lambda(d,g,3) for d,g <= 50, image dimensions, quadric types",
    );

    for (d, expected) in [(6, 4), (7, 6), (8, 9), (9, 12)] {
        let got = bounds.max_genus(d, 3);
        rep.check(got == Ok(expected), "pi", format!("pi({d},3)"), format!("{got:?}, expected {expected}"));
    }
    for (d, expected) in [(8, 7), (9, 10)] {
        let got = bounds.profile(d, 3).map(|p| p.pi1);
        rep.check(got == Ok(expected), "pi1", format!("pi1({d},3)"), format!("{got:?}, expected {expected}"));
    }
    // the r = 9 survivor sits exactly on the third bound
    let got = bounds.profile(30, 9).map(|p| p.pi2);
    rep.check(got == Ok(34), "pi2", "pi2(30,9)", format!("{got:?}, expected 34"));

    let rho = brill_noether(CurveClass::new(9, 8, 3).expect("valid class"));
    rep.check(rho == 0, "rho", "rho(9,8,3)", format!("{rho}, expected 0"));

    for d in 1..=50 {
        for g in 0..=50 {
            let lambda = euler_normal(CurveClass::new(d, g, 3).expect("valid class"));
            rep.check(
                lambda == 4 * d as i128,
                "lambda",
                format!("lambda({d},{g},3)"),
                format!("{lambda}, expected {}", 4 * d),
            );
        }
    }

    for (d, h1, expected) in [(8, 0, 17), (8, 1, 18), (9, 0, 21), (9, 2, 23)] {
        let got = image_dim_r3(d, h1);
        rep.check(got == expected, "image-dim", format!("image_dim({d},{h1})"), format!("{got}, expected {expected}"));
    }

    type Bidegrees = &'static [(i64, i64)];
    let quadrics: [((i64, i64), Bidegrees); 6] = [
        ((8, 7), &[]),
        ((8, 8), &[(5, 3)]),
        ((8, 9), &[(4, 4)]),
        ((9, 10), &[(6, 3)]),
        ((9, 11), &[]),
        ((9, 12), &[(5, 4)]),
    ];
    for ((d, g), expected) in quadrics {
        let got = quadric_types(d, g);
        rep.check(got == expected, "quadric-types", format!("({d},{g})"), format!("{got:?}, expected {expected:?}"));
    }
    rep
}

/// Identities that must hold between different ways of computing the same
/// quantity.
pub fn verify_identities() -> Result<VerificationReport, Error> {
    let mut rep = VerificationReport::new(
        "identities",
        "moduli count for d,g <= 200; expanded inequalities for r in [4,20], alpha in [8,40], \
         m in [1,40]; genus parity a in [1,50], |b| <= 50, e <= 50; adjunction a in [1,20], \
         e <= 5, ae <= b <= ae+10",
    );

    for d in 1..=200i64 {
        for g in 0..=200i64 {
            let rho = brill_noether(CurveClass::new(d, g, 3)?);
            let lhs = 3 * g as i128 - 3 + rho;
            rep.check(lhs == 4 * d as i128 - 15, "moduli-count", format!("d={d} g={g}"), format!("3g-3+rho = {lhs}"));
        }
    }

    for r in 4..=20 {
        for alpha in 8..=40 {
            for m in 1..=40 {
                for which in DerivedInequality::ALL {
                    let eps_max = if which.uses_pi2() { alpha } else { alpha - 1 };
                    for eps in 0..=eps_max {
                        let mu = if which.uses_pi2() { mu2_for(eps, alpha) } else { mu1_for(eps, alpha) };
                        let expanded = derived_slack(which, r, alpha, m, eps, mu)?;
                        let substituted = derived_slack_exact(which, r, alpha, m, eps, mu);
                        rep.check(
                            expanded == substituted,
                            "expansion",
                            format!("{} r={r} alpha={alpha} m={m} eps={eps} mu={mu}", which.short_name()),
                            format!("expanded {expanded}, substituted {substituted}"),
                        );
                    }
                }
            }
        }
    }

    for a in 1..=50i64 {
        for b in -50..=50i64 {
            for e in 0..=50i64 {
                let twice = (a - 1) * (2 * b - a * e - 2);
                let genus = arith_genus(DivisorClass { a, b, e })?;
                rep.check(
                    twice % 2 == 0 && 2 * genus == twice,
                    "genus-parity",
                    format!("({a},{b},{e})"),
                    format!("(a-1)(2b-ae-2) = {twice}, genus {genus}"),
                );
            }
        }
    }

    for e in 0..=5i64 {
        let classes: Vec<DivisorClass> = (1..=20i64)
            .flat_map(|a| (a * e..=a * e + 10).map(move |b| DivisorClass { a, b, e }))
            .collect();
        for &x in &classes {
            for &y in &classes {
                let sum = arith_genus(x.checked_add(y)?)?;
                let parts = arith_genus(x)? + arith_genus(y)? + intersect(x, y)? - 1;
                rep.check(
                    sum == parts,
                    "adjunction",
                    format!("({},{},{e}) + ({},{},{e})", x.a, x.b, y.a, y.b),
                    format!("genus of sum {sum}, from parts {parts}"),
                );
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rigidity_core::mutants::{DroppedMu2, OffByOnePi1};

    #[test]
    fn genuine_bounds_pass() {
        let rep = verify_spot_values();
        assert!(rep.passed(), "{:?}", rep.violations);
        assert!(rep.checked > 2500);
    }

    #[test]
    fn mutants_are_caught() {
        let rep = verify_spot_values_with(&OffByOnePi1);
        let checks: Vec<&str> = rep.violations.iter().map(|v| v.check.as_str()).collect();
        assert_eq!(checks, ["pi1", "pi1"]);
        let rep = verify_spot_values_with(&DroppedMu2);
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].at, "pi2(30,9)");
    }
}
