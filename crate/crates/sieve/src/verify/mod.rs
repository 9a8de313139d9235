//! Exhaustive re-derivations of the exclusion argument.
//!
//! Each function enumerates a finite universe, re-checks one family of claims
//! on every point of it and returns a [`VerificationReport`]. An empty
//! violation list means the claims hold on that universe and nowhere else is
//! anything asserted.

mod derived;
mod general;
mod space;
mod splits;
mod spots;

use std::fmt::Display;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use derived::{verify_derived_claims, DERIVED_M_MAX};
pub use general::{
    r5_window_survivors, verify_case34_never, verify_r5_window, verify_r_ge_11, verify_thm41,
    verify_thm41_with,
};
pub use space::{verify_thm_r3, R3_LOW_DEGREE, R3_TABLE};
pub use splits::{canonical_examples, verify_splits, SplitGrid};
pub use spots::{verify_identities, verify_spot_values, verify_spot_values_with};

use rigidity_core::mutants::{DroppedMu2, OffByOnePi1};
use rigidity_core::sieve::RangeOptions;
use rigidity_core::{Castelnuovo, GenusBounds};

use crate::Error;

const CAVEAT: &str =
    "finite enumeration: nothing is asserted outside the universe described above";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Which check failed.
    pub check: String,
    /// The point of the universe where it failed.
    pub at: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub universe: String,
    /// Number of individual checks performed.
    pub checked: u64,
    pub violations: Vec<Violation>,
    /// Entries listed for audit; they are not failures.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub listing: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub caveat: String,
    /// Wall-clock time, only filled in on request so reports stay byte-stable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, universe: impl Into<String>) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            universe: universe.into(),
            checked: 0,
            violations: Vec::new(),
            listing: Vec::new(),
            notes: Vec::new(),
            caveat: CAVEAT.to_string(),
            elapsed_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Record one check; a failing one becomes a violation.
    pub fn check(&mut self, ok: bool, check: &str, at: impl Display, detail: impl Display) {
        self.checked += 1;
        if !ok {
            self.fail(check, at, detail);
        }
    }

    pub fn fail(&mut self, check: &str, at: impl Display, detail: impl Display) {
        self.violations.push(Violation {
            check: check.to_string(),
            at: at.to_string(),
            detail: detail.to_string(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// One human-readable line: claim, outcome, universe.
    pub fn summary(&self) -> String {
        let outcome = if self.passed() {
            "ok".to_string()
        } else {
            format!("{} violation(s)", self.violations.len())
        };
        format!("{}: {} ({} checks; {})", self.claim_id, outcome, self.checked, self.universe)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Spot values of the bounds and dimension counts.
    Spots,
    /// Algebraic identities between the different forms of each count.
    Identities,
    /// Curves in 3-space: the sieve and the classification table.
    R3,
    /// The hypothesis ranges for r >= 4 exclude every triple.
    Thm41,
    /// The per-r consequences of the expanded inequalities.
    Derived,
    /// The d >= g case systems never fire for r <= 10.
    Case34,
    /// Boundary eliminations for r >= 11.
    R11,
    /// The extra r = 5 condition for 101 <= d <= 113.
    R5window,
    /// Stable-split certificates on Hirzebruch surfaces.
    Splits,
    /// Every suite above.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Restrict r-dependent suites to one value of r.
    pub r: Option<i64>,
    pub d_max: i64,
    pub alpha_max: i64,
    /// Keep `(30, 34)` inside the r = 9 range.
    pub no_exception: bool,
    pub timing: bool,
    /// Replace the genuine bounds by a corrupted provider in the suites that
    /// take one.
    pub mutant: Option<Mutant>,
}

/// Corrupted bound providers for checking that the harness notices them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mutant {
    /// The first bound raised by one.
    OffByOnePi1,
    /// The top correction term of the second bound dropped from 2 to 1.
    DroppedMu2,
}

impl Mutant {
    fn bounds(self) -> &'static (dyn GenusBounds + Sync) {
        match self {
            Mutant::OffByOnePi1 => &OffByOnePi1,
            Mutant::DroppedMu2 => &DroppedMu2,
        }
    }
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { r: None, d_max: 500, alpha_max: 60, no_exception: false, timing: false, mutant: None }
    }
}

impl Suite {
    const EACH: [Suite; 9] = [
        Suite::Spots,
        Suite::Identities,
        Suite::R3,
        Suite::Thm41,
        Suite::Derived,
        Suite::Case34,
        Suite::R11,
        Suite::R5window,
        Suite::Splits,
    ];

    /// Run the suite; r-dependent suites produce one report per r.
    pub fn run(self, opts: &SuiteOptions) -> Result<Vec<VerificationReport>, Error> {
        if self == Suite::All {
            let mut out = Vec::new();
            for suite in Suite::EACH {
                out.extend(suite.run(opts)?);
            }
            return Ok(out);
        }
        // values of r to run: the default span, or the requested one if admissible
        let rs = |lo: i64, default_hi: i64, max_hi: i64| -> Result<Vec<i64>, Error> {
            match opts.r {
                None => Ok((lo..=default_hi).collect()),
                Some(r) if (lo..=max_hi).contains(&r) => Ok(vec![r]),
                Some(r) => Err(Error::Usage(format!("suite {self:?} does not accept r = {r}"))),
            }
        };
        let bounds = opts.mutant.map_or(&Castelnuovo as &(dyn GenusBounds + Sync), Mutant::bounds);
        let mut reports = Vec::new();
        let mut timed = |f: &mut dyn FnMut() -> Result<VerificationReport, Error>| {
            let start = Instant::now();
            let mut report = f()?;
            if opts.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            reports.push(report);
            Ok::<_, Error>(())
        };
        match self {
            Suite::Spots => timed(&mut || Ok(verify_spot_values_with(bounds)))?,
            Suite::Identities => timed(&mut || verify_identities())?,
            Suite::R3 => timed(&mut || verify_thm_r3(opts.d_max.max(10)))?,
            Suite::Thm41 => {
                for r in rs(4, 20, i64::MAX)? {
                    let range = RangeOptions { r9_exception: !opts.no_exception, ..Default::default() };
                    timed(&mut || verify_thm41_with(bounds, r, opts.d_max, range))?;
                }
            }
            Suite::Derived => {
                for r in rs(4, 10, 10)? {
                    timed(&mut || verify_derived_claims(r, opts.alpha_max, opts.d_max))?;
                }
            }
            Suite::Case34 => {
                let (lo, hi) = match opts.r {
                    Some(r) if r >= 4 => (r, r),
                    Some(r) => return Err(Error::Usage(format!("suite case34 needs r >= 4, got {r}"))),
                    None => (4, 10),
                };
                timed(&mut || verify_case34_never(lo, hi, opts.d_max))?;
            }
            Suite::R11 => {
                for r in rs(11, 20, i64::MAX)? {
                    timed(&mut || verify_r_ge_11(r, opts.d_max))?;
                }
            }
            Suite::R5window => timed(&mut || verify_r5_window())?,
            Suite::Splits => timed(&mut || verify_splits(SplitGrid::default()))?,
            Suite::All => unreachable!(),
        }
        Ok(reports)
    }
}

/// `"d=30 g=34 r=9"`-style coordinates.
pub(crate) fn point(d: i64, g: i64, r: i64) -> String {
    format!("d={d} g={g} r={r}")
}
