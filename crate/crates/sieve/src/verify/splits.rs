use rigidity_core::surfaces::{
    arith_genus, find_stable_split, intersect, smooth_irreducible_exists,
};
use rigidity_core::{DivisorClass, SplitCertificate};

use super::VerificationReport;
use crate::Error;

/// Grid of classes `aC_0 + bf` on `X_e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitGrid {
    pub a_max: i64,
    pub b_max: i64,
    pub e_max: i64,
}

impl Default for SplitGrid {
    fn default() -> Self {
        SplitGrid { a_max: 12, b_max: 60, e_max: 4 }
    }
}

fn class(a: i64, b: i64, e: i64) -> DivisorClass {
    DivisorClass { a, b, e }
}

/// Splittings as they appear in the degeneration argument.
pub fn canonical_examples() -> [(DivisorClass, SplitCertificate); 3] {
    let cert = |d1, d2, intersection| SplitCertificate { d1, d2, intersection };
    [
        (class(4, 9, 2), cert(class(4, 8, 2), class(0, 1, 2), 4)),
        (class(4, 4, 1), cert(class(1, 1, 1), class(3, 3, 1), 3)),
        (class(2, 5, 1), cert(class(1, 0, 1), class(1, 5, 1), 4)),
    ]
}

fn recheck(rep: &mut VerificationReport, d: DivisorClass, cert: &SplitCertificate) -> Result<(), Error> {
    let at = format!("({},{},{})", d.a, d.b, d.e);
    rep.check(cert.d1.checked_add(cert.d2)? == d, "sum", &at, format!("{cert:?}"));
    rep.check(
        smooth_irreducible_exists(cert.d1) && smooth_irreducible_exists(cert.d2),
        "smooth-parts",
        &at,
        format!("{cert:?}"),
    );
    let meet = intersect(cert.d1, cert.d2)?;
    rep.check(meet == cert.intersection && meet >= 3, "intersection", &at, format!("recomputed {meet}, certificate {}", cert.intersection));
    Ok(())
}

/// Every class with a smooth irreducible member, `a >= 2` and genus at least
/// two must split into two smooth curves meeting in three or more points.
pub fn verify_splits(grid: SplitGrid) -> Result<VerificationReport, Error> {
    let mut rep = VerificationReport::new(
        "splits",
        format!("2 <= a <= {}, 0 <= b <= {}, 0 <= e <= {}", grid.a_max, grid.b_max, grid.e_max),
    );
    let mut low_genus = 0u64;
    for e in 0..=grid.e_max {
        for a in 2..=grid.a_max {
            for b in 0..=grid.b_max {
                let d = class(a, b, e);
                if !smooth_irreducible_exists(d) {
                    continue;
                }
                if arith_genus(d)? < 2 {
                    low_genus += 1;
                    continue;
                }
                match find_stable_split(d)? {
                    Some(cert) => recheck(&mut rep, d, &cert)?,
                    None => rep.fail("certificate", format!("({a},{b},{e})"), "no splitting found"),
                }
            }
        }
    }
    rep.note(format!("{low_genus} classes skipped with genus below 2"));

    for (d, expected) in canonical_examples() {
        let got = find_stable_split(d)?;
        rep.check(
            got == Some(expected),
            "canonical",
            format!("({},{},{})", d.a, d.b, d.e),
            format!("{got:?}, expected {expected:?}"),
        );
    }
    let got = find_stable_split(class(3, 3, 1));
    rep.check(
        got == Err(rigidity_core::Error::BelowStability { genus: 1 }),
        "genus-one-skipped",
        "(3,3,1)",
        format!("{got:?}"),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid() {
        let rep = verify_splits(SplitGrid { a_max: 5, b_max: 20, e_max: 2 }).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
        assert!(rep.checked > 100);
    }

    #[test]
    fn empty_grid_is_vacuous() {
        let rep = verify_splits(SplitGrid { a_max: 1, b_max: 0, e_max: 0 }).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.checked, 4);
    }
}
