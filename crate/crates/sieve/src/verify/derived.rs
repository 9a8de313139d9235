//! The per-r consequences drawn from the expanded inequalities.
//!
//! Each consequence reads "if the inequality holds then `m >= m_min` and a
//! linear condition on `i = d + 1 - 3alpha` or `j = d - 3alpha`". Two
//! encodings are checked:
//!
//! * tuples: every division datum `(alpha, m, eps, mu)` with the relevant
//!   `i >= 0` or `j >= 0`, whatever genus it would come from;
//! * pairs: every `(d, alpha)` for which some genus `g > d` passes the case
//!   inequality and all genus caps, with `m` read off the actual bounds.

use std::collections::BTreeSet;

use rigidity_core::bounds::{max_genus_pi, mu1_for, mu2_for};
use rigidity_core::sieve::{alpha_cap, case_slack, derived_slack, DerivedInequality};
use rigidity_core::{Castelnuovo, GenusBounds, SieveCase};

use super::VerificationReport;
use crate::Error;

/// Largest quotient `m` enumerated in the tuple encoding.
pub const DERIVED_M_MAX: i64 = 100;

struct Claim {
    which: DerivedInequality,
    m_min: i64,
    text: &'static str,
    holds: fn(i128, i128, i128) -> bool,
}

// bounds are written as claimed, `>= x + 1` included
#[allow(clippy::int_plus_one)]
fn claims_for(r: i64) -> Vec<Claim> {
    use DerivedInequality::*;
    let c = |which, m_min, text, holds| Claim { which, m_min, text, holds };
    match r {
        4 => vec![
            c(Case1Pi1, 9, "i >= 7alpha+1", |a, i, _| i >= 7 * a + 1),
            c(Case2Pi1, 8, "2j >= 11alpha-2", |a, _, j| 2 * j >= 11 * a - 2),
            c(Case2Pi2, 8, "2j >= 11alpha+12", |a, _, j| 2 * j >= 11 * a + 12),
        ],
        5 => vec![
            c(Case1Pi1, 5, "i > 3alpha+1", |a, i, _| i > 3 * a + 1),
            c(Case1Pi2, 5, "i >= 3alpha+5", |a, i, _| i >= 3 * a + 5),
            c(Case2Pi1, 5, "5j >= 12alpha-4", |a, _, j| 5 * j >= 12 * a - 4),
            c(Case2Pi2, 5, "5j >= 12alpha+16", |a, _, j| 5 * j >= 12 * a + 16),
        ],
        6 => vec![
            c(Case1Pi1, 4, "5i > 8alpha+2", |a, i, _| 5 * i > 8 * a + 2),
            c(Case1Pi2, 4, "5i >= 8alpha+20", |a, i, _| 5 * i >= 8 * a + 20),
            c(Case2Pi1, 4, "3j > 4alpha-2", |a, _, j| 3 * j > 4 * a - 2),
            c(Case2Pi2, 4, "3j >= 4alpha+7", |a, _, j| 3 * j >= 4 * a + 7),
        ],
        7 => vec![
            c(Case1Pi1, 3, "i >= alpha+1", |a, i, _| i >= a + 1),
            c(Case2Pi1, 3, "5j > 4alpha-4", |a, _, j| 5 * j > 4 * a - 4),
            c(Case2Pi2, 3, "5j >= 4alpha+1", |a, _, j| 5 * j >= 4 * a + 1),
        ],
        8 => vec![
            c(Case1Pi2, 3, "2i >= alpha+6", |a, i, _| 2 * i >= a + 6),
            c(Case2Pi2, 3, "7j >= 3alpha+11", |a, _, j| 7 * j >= 3 * a + 11),
        ],
        9 => vec![
            c(Case1Pi2, 3, "8i >= 2alpha+23", |a, i, _| 8 * i >= 2 * a + 23),
            c(Case2Pi2, 2, "j >= 3", |_, _, j| j >= 3),
        ],
        10 => vec![
            c(Case1Pi2, 2, "i >= 4", |_, i, _| i >= 4),
            c(Case2Pi1, 3, "11j > alpha-4", |a, _, j| 11 * j > a - 4),
            c(Case2Pi2, 2, "j >= 2", |_, _, j| j >= 2),
        ],
        _ => vec![],
    }
}

fn label(r: i64, claim: &Claim) -> String {
    format!("r={r} {} => m >= {} and {}", claim.which.short_name(), claim.m_min, claim.text)
}

/// The division datum for `which` at `(alpha, m, eps)`, with `d`, `i`, `j`.
struct Tuple {
    alpha: i64,
    m: i64,
    eps: i64,
    mu: i64,
    d: i64,
}

impl Tuple {
    fn new(which: DerivedInequality, alpha: i64, m: i64, eps: i64) -> Tuple {
        let mu = if which.uses_pi2() { mu2_for(eps, alpha) } else { mu1_for(eps, alpha) };
        let d = m * which.modulus(alpha) + eps + 1;
        Tuple { alpha, m, eps, mu, d }
    }

    fn i(&self) -> i64 {
        self.d + 1 - 3 * self.alpha
    }

    fn j(&self) -> i64 {
        self.d - 3 * self.alpha
    }

    fn side_condition(&self, which: DerivedInequality) -> bool {
        if which.series_moves() {
            self.j() >= 0
        } else {
            self.i() >= 0
        }
    }

    fn describe(&self) -> String {
        format!(
            "alpha={} m={} eps={} mu={} d={} i={} j={}",
            self.alpha,
            self.m,
            self.eps,
            self.mu,
            self.d,
            self.i(),
            self.j()
        )
    }
}

fn tuples(which: DerivedInequality, alpha_lo: i64, alpha_max: i64) -> impl Iterator<Item = Tuple> {
    (alpha_lo..=alpha_max).flat_map(move |alpha| {
        let eps_max = if which.uses_pi2() { alpha } else { alpha - 1 };
        (1..=DERIVED_M_MAX)
            .flat_map(move |m| (0..=eps_max).map(move |eps| Tuple::new(which, alpha, m, eps)))
    })
}

/// Largest genus allowed by every cap at `(d, alpha)` once `alpha >= 8` and
/// `d >= 2alpha + 3`.
fn capped_genus(d: i64, alpha: i64) -> Result<i128, Error> {
    let p = Castelnuovo.profile(d, alpha)?;
    Ok(max_genus_pi(d, alpha)?.min(p.pi2).min(p.pi1 - 1))
}

pub fn verify_derived_claims(r: i64, alpha_max: i64, d_max: i64) -> Result<VerificationReport, Error> {
    if !(4..=10).contains(&r) {
        return Err(Error::Usage(format!("derived claims exist for 4 <= r <= 10, got {r}")));
    }
    let alpha_lo = r.max(8);
    let mut rep = VerificationReport::new(
        format!("derived/r={r}"),
        format!(
            "tuples: {alpha_lo} <= alpha <= {alpha_max}, 1 <= m <= {DERIVED_M_MAX}, every eps; \
             pairs: {alpha_lo} <= alpha <= {alpha_max}, 2alpha+3 <= d <= {d_max}, d < g <= capped genus"
        ),
    );
    let claims = claims_for(r);

    for claim in &claims {
        let mut satisfied = 0u64;
        let mut broken = 0u64;
        for t in tuples(claim.which, alpha_lo, alpha_max) {
            if !t.side_condition(claim.which) {
                continue;
            }
            let value = derived_slack(claim.which, r, t.alpha, t.m, t.eps, t.mu)?;
            if !claim.which.is_satisfied(value) {
                continue;
            }
            satisfied += 1;
            let ok = t.m >= claim.m_min && (claim.holds)(t.alpha as i128, t.i() as i128, t.j() as i128);
            if !ok {
                broken += 1;
            }
            rep.check(ok, "tuple", label(r, claim), format!("{} value={value}", t.describe()));
        }
        rep.note(format!("{}: {satisfied} satisfying tuples, {broken} counterexamples", label(r, claim)));
    }

    if r == 4 {
        let minimal = tuples(DerivedInequality::Case1Pi1, alpha_lo, alpha_max)
            .filter(|t| t.side_condition(DerivedInequality::Case1Pi1))
            .filter(|t| {
                derived_slack(DerivedInequality::Case1Pi1, 4, t.alpha, t.m, t.eps, t.mu)
                    .is_ok_and(|v| DerivedInequality::Case1Pi1.is_satisfied(v))
            })
            .min_by_key(|t| (t.d, t.alpha, t.m, t.eps));
        let found = minimal.as_ref().map(|t| (t.alpha, t.m, t.eps, t.mu));
        rep.check(
            found == Some((8, 9, 7, 1)),
            "boundary-tuple",
            "r=4 case1-pi1 minimal satisfying tuple",
            minimal.map_or("none".to_string(), |t| t.describe()),
        );
    }

    check_pairs(&mut rep, r, &claims, alpha_lo, alpha_max, d_max)?;

    if r == 9 {
        check_r9_second_quotient(&mut rep, alpha_max)?;
    }
    Ok(rep)
}

/// Pair encoding: the consequences must hold wherever some genus realises
/// the case, and the realised division datum must satisfy the expanded form.
fn check_pairs(
    rep: &mut VerificationReport,
    r: i64,
    claims: &[Claim],
    alpha_lo: i64,
    alpha_max: i64,
    d_max: i64,
) -> Result<(), Error> {
    let mut realised = 0u64;
    for alpha in alpha_lo..=alpha_max {
        for d in 2 * alpha + 3..=d_max {
            let top = capped_genus(d, alpha)?;
            if top <= d as i128 {
                continue;
            }
            let top = top as i64;
            let p = Castelnuovo.profile(d, alpha)?;
            for case in [SieveCase::Case1, SieveCase::Case2] {
                if alpha > alpha_cap(case, d, top) || case_slack(case, d, top, r, alpha) < 0 {
                    continue;
                }
                realised += 1;
                for which in DerivedInequality::ALL {
                    if which.series_moves() != case.series_moves() {
                        continue;
                    }
                    let (m, eps, mu) =
                        if which.uses_pi2() { (p.m2, p.eps2, p.mu2) } else { (p.m1, p.eps1, p.mu1) };
                    let value = derived_slack(which, r, alpha, m, eps, mu)?;
                    let at = format!("d={d} alpha={alpha} case={}", case.number());
                    rep.check(
                        which.is_satisfied(value),
                        "pair-substitution",
                        &at,
                        format!("{} value={value}", which.short_name()),
                    );
                    for claim in claims.iter().filter(|c| c.which == which) {
                        let (i, j) = ((d + 1 - 3 * alpha) as i128, (d - 3 * alpha) as i128);
                        let ok = m >= claim.m_min && (claim.holds)(alpha as i128, i, j);
                        rep.check(ok, "pair", label(r, claim), format!("{at} m={m} i={i} j={j}"));
                    }
                }
            }
        }
    }
    rep.note(format!("pairs: {realised} realised (d, alpha, case) configurations"));
    Ok(())
}

/// At `r = 9` the moving-series system with second quotient `m2 = 2` is said
/// to occur only at `(30,33)` and `(30,34)`. Checked as containment: every
/// realised pair must be one of the two.
fn check_r9_second_quotient(rep: &mut VerificationReport, alpha_max: i64) -> Result<(), Error> {
    let claimed: BTreeSet<(i64, i64)> = [(30, 33), (30, 34)].into();
    let mut found = BTreeSet::new();
    for alpha in 9..=alpha_max {
        for d in (3 * alpha).max(2 * alpha + 3)..=3 * alpha + 3 {
            if Castelnuovo.profile(d, alpha)?.m2 != 2 {
                continue;
            }
            let top = capped_genus(d, alpha)? as i64;
            for g in d + 1..=top {
                if case_slack(SieveCase::Case2, d, g, 9, alpha) >= 0 {
                    found.insert((d, g));
                }
            }
        }
    }
    for &(d, g) in &found {
        rep.check(claimed.contains(&(d, g)), "r9-second-quotient", format!("d={d} g={g}"), "m2 = 2 outside the claimed pairs");
        rep.listing.push(format!("r=9 case2 with m2=2 realised at (d,g)=({d},{g})"));
    }
    for &(d, g) in claimed.difference(&found) {
        rep.note(format!(
            "claimed pair ({d},{g}) is not realised: case2 slack at alpha=9 is {}",
            case_slack(SieveCase::Case2, d, g, 9, 9)
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r4_holds_with_its_boundary() {
        let rep = verify_derived_claims(4, 30, 200).unwrap();
        assert!(rep.passed(), "{:?}", &rep.violations[..rep.violations.len().min(3)]);
    }

    #[test]
    fn r7_holds() {
        assert!(verify_derived_claims(7, 30, 200).unwrap().passed());
    }

    #[test]
    fn r9_second_quotient_set() {
        let rep = verify_derived_claims(9, 30, 120).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
        assert_eq!(rep.listing, ["r=9 case2 with m2=2 realised at (d,g)=(30,34)"]);
        assert!(rep.notes.iter().any(|n| n.contains("(30,33) is not realised")));
    }

    #[test]
    fn unsupported_r() {
        assert!(verify_derived_claims(11, 30, 100).is_err());
    }
}
