use alloc::vec::Vec;

use crate::bounds::{embed_dim_cap, Castelnuovo, CastelnuovoProfile, GenusBounds};
use crate::Error;

use super::cases::{alpha_cap, case_slack, genus_caps_ok_with, SieveCase};

/// Upper limit on the number of `alpha` values a single scan walks.
pub const MAX_ALPHA_SPAN: u128 = 1 << 24;

/// An `(alpha, case)` configuration the sieve could not exclude.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SieveWitness {
    pub alpha: i64,
    pub case: SieveCase,
    /// `d + 1 - 3alpha`
    pub i: i64,
    /// `d - 3alpha`
    pub j: i64,
    pub profile: CastelnuovoProfile,
    #[cfg_attr(feature = "serde", serde(with = "crate::wide"))]
    pub slack: i128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum ExclusionReason {
    /// The hyperplane series would be non-special (`g = 1` or `d > 2g - 2`),
    /// so the component lies over the dominating component.
    NonSpecial,
    /// No `alpha >= r` fits under the embedding-dimension cap.
    NoAlpha,
    /// Every `(alpha, case)` fails a case inequality, a case cap or a genus cap.
    AllCasesInfeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum ScopeReason {
    /// Rational curves are outside the question.
    GenusZero,
}

/// Outcome of a sieve run. `Survivors` means "not excluded", never "exists".
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(tag = "outcome", rename_all = "snake_case")
)]
pub enum Verdict<W> {
    Excluded { reasons: Vec<ExclusionReason> },
    Survivors { witnesses: Vec<W> },
    OutOfScope { reason: ScopeReason },
}

impl<W> Verdict<W> {
    pub fn excluded(reason: ExclusionReason) -> Self {
        Verdict::Excluded { reasons: alloc::vec![reason] }
    }

    pub fn is_excluded(&self) -> bool {
        matches!(self, Verdict::Excluded { .. })
    }

    pub fn witnesses(&self) -> &[W] {
        match self {
            Verdict::Survivors { witnesses } => witnesses,
            _ => &[],
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Excluded { .. } => "excluded",
            Verdict::Survivors { .. } => "survivor",
            Verdict::OutOfScope { .. } => "out-of-scope",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Apply the Castelnuovo genus caps. Turning them off can only add witnesses.
    pub genus_caps: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { genus_caps: true }
    }
}

/// Run the sieve on `(d, g, r)` for `r >= 4`.
pub fn scan(d: i64, g: i64, r: i64) -> Result<Verdict<SieveWitness>, Error> {
    scan_with(&Castelnuovo, d, g, r, ScanOptions::default())
}

/// Run the sieve with an explicit source of genus bounds.
///
/// Walks `alpha` from `r` up to the embedding-dimension cap and, for each of
/// the two cases applicable to the sign of `d - g`, keeps `alpha` when it is
/// under the case cap, the case inequality has non-negative slack and the
/// genus caps hold. Witnesses come out sorted by `(alpha, case)`.
pub fn scan_with<B: GenusBounds + ?Sized>(
    bounds: &B,
    d: i64,
    g: i64,
    r: i64,
    opts: ScanOptions,
) -> Result<Verdict<SieveWitness>, Error> {
    if r < 4 {
        return Err(Error::OutOfDomain { op: "scan", reason: "need r >= 4; use r3_sieve for r = 3" });
    }
    if d < 1 || g < 0 {
        return Err(Error::InvalidCurveClass { d, g, r });
    }
    if g == 0 {
        return Ok(Verdict::OutOfScope { reason: ScopeReason::GenusZero });
    }
    if g == 1 || d as i128 > 2 * g as i128 - 2 {
        return Ok(Verdict::excluded(ExclusionReason::NonSpecial));
    }

    let top = embed_dim_cap(d, g);
    if top < r {
        return Ok(Verdict::excluded(ExclusionReason::NoAlpha));
    }
    let span = (top as i128 - r as i128 + 1) as u128;
    if span > MAX_ALPHA_SPAN {
        return Err(Error::SearchTooLarge { op: "scan", size: span });
    }

    let mut witnesses = Vec::new();
    for alpha in r..=top {
        for case in SieveCase::for_pair(d, g) {
            if alpha > alpha_cap(case, d, g) {
                continue;
            }
            let slack = case_slack(case, d, g, r, alpha);
            if slack < 0 {
                continue;
            }
            // every case cap keeps alpha <= (d+1)/3, so d >= alpha + 2 here
            if opts.genus_caps && !genus_caps_ok_with(bounds, d, g, alpha)? {
                continue;
            }
            witnesses.push(SieveWitness {
                alpha,
                case,
                i: d + 1 - 3 * alpha,
                j: d - 3 * alpha,
                profile: bounds.profile(d, alpha)?,
                slack,
            });
        }
    }

    if witnesses.is_empty() {
        Ok(Verdict::excluded(ExclusionReason::AllCasesInfeasible))
    } else {
        Ok(Verdict::Survivors { witnesses })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lone_survivor_at_degree_30_genus_34() {
        let v = scan(30, 34, 9).unwrap();
        let w = v.witnesses();
        assert_eq!(w.len(), 1);
        assert_eq!((w[0].alpha, w[0].case, w[0].slack), (9, SieveCase::Case2, 1));
        assert_eq!((w[0].i, w[0].j), (4, 3));
        assert_eq!(w[0].profile.pi2, 34);
    }

    #[test]
    fn genus_caps_exclude_large_genus() {
        assert_eq!(scan(28, 100, 4).unwrap(), Verdict::excluded(ExclusionReason::AllCasesInfeasible));
        // without the caps the slack alone lets it through
        let loose = scan_with(&Castelnuovo, 28, 100, 4, ScanOptions { genus_caps: false }).unwrap();
        assert!(!loose.witnesses().is_empty());
    }

    #[test]
    fn speciality_gate() {
        assert_eq!(scan(19, 10, 4).unwrap(), Verdict::excluded(ExclusionReason::NonSpecial));
        assert_eq!(scan(5, 1, 4).unwrap(), Verdict::excluded(ExclusionReason::NonSpecial));
        assert_eq!(scan(5, 0, 4).unwrap(), Verdict::OutOfScope { reason: ScopeReason::GenusZero });
    }

    #[test]
    fn no_alpha_when_embedding_cap_is_small() {
        assert_eq!(scan(9, 12, 4).unwrap(), Verdict::excluded(ExclusionReason::NoAlpha));
    }

    #[test]
    fn domain_errors() {
        assert!(scan(30, 34, 3).is_err());
        assert!(scan(0, 34, 5).is_err());
        assert!(matches!(
            scan(i64::MAX / 2, i64::MAX / 2, 4),
            Err(Error::SearchTooLarge { .. })
        ));
    }
}
