use rigidity_core::bounds::{euler_normal, max_genus_pi};
use rigidity_core::sieve::{r3_classify, r3_sieve, R3Outcome};
use rigidity_core::CurveClass;

use super::VerificationReport;
use crate::Error;

/// Pairs with `d <= g` the space-curve sieve may leave standing.
pub const R3_LOW_DEGREE: [(i64, i64); 6] = [(8, 8), (8, 9), (9, 9), (9, 10), (9, 11), (9, 12)];

/// The classified Hilbert schemes of space curves.
pub const R3_TABLE: [((i64, i64), R3Outcome); 9] = [
    ((7, 6), R3Outcome::ExactImage(13)),
    ((8, 7), R3Outcome::ExactImage(17)),
    ((8, 8), R3Outcome::ExactImage(17)),
    ((8, 9), R3Outcome::ExactImage(18)),
    ((9, 8), R3Outcome::Dominates),
    ((9, 9), R3Outcome::ExactImage(21)),
    ((9, 10), R3Outcome::ExactImage(21)),
    ((9, 11), R3Outcome::Empty),
    ((9, 12), R3Outcome::ExactImage(23)),
];

/// The space-curve sieve over `d <= d_max`, `5 <= g`, `d <= g <= pi(d,3)`,
/// plus the classification table.
pub fn verify_thm_r3(d_max: i64) -> Result<VerificationReport, Error> {
    if d_max < 10 {
        return Err(Error::Usage(format!("r3 verification needs d_max >= 10, got {d_max}")));
    }
    let mut rep = VerificationReport::new(
        "thm-r3",
        format!("3 <= d <= {d_max}, max(d,5) <= g <= pi(d,3); classification table"),
    );

    let mut survivors = Vec::new();
    for d in 3..=d_max {
        let top = max_genus_pi(d, 3)? as i64;
        for g in d.max(5)..=top {
            let verdict = r3_sieve(d, g)?;
            if verdict.is_excluded() {
                rep.checked += 1;
                continue;
            }
            let alphas: Vec<String> = verdict.witnesses().iter().map(|w| w.alpha.to_string()).collect();
            rep.check(d <= 9, "degree-at-most-9", format!("d={d} g={g}"), format!("alpha {}", alphas.join(",")));
            rep.check(
                R3_LOW_DEGREE.contains(&(d, g)),
                "low-degree-set",
                format!("d={d} g={g}"),
                "survivor outside the six listed pairs",
            );
            survivors.push((d, g));
        }
    }
    for (d, g) in &survivors {
        rep.listing.push(format!("sieve survivor (d,g)=({d},{g}) -> {:?}", r3_classify(*d, *g)));
    }
    let seven = max_genus_pi(7, 3)? as i64;
    rep.check(seven < 7, "degree-7-empty", "d=7", format!("pi(7,3) = {seven}, genus range [7, {seven}]"));

    for ((d, g), expected) in R3_TABLE {
        let got = r3_classify(d, g);
        rep.check(got == expected, "classification", format!("d={d} g={g}"), format!("{got:?}, expected {expected:?}"));
    }

    // dim H(8,7,3) = 32 <= dim PGL(4) + dim W + dim image with dim W = 0
    let hilbert = euler_normal(CurveClass::new(8, 7, 3)?);
    let pgl = 15;
    for image in 0..=17i128 {
        let fits = hilbert <= pgl + image;
        rep.check(
            fits == (image >= 17),
            "fibre-count",
            format!("d=8 g=7 dim image={image}"),
            format!("{hilbert} <= {pgl} + {image} is {fits}"),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_range_is_clean() {
        let rep = verify_thm_r3(60).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.listing.len(), 6);
    }

    #[test]
    fn small_range_is_rejected() {
        assert!(verify_thm_r3(9).is_err());
    }
}
