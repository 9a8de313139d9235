//! The exclusion engine for components rigid in moduli.
//!
//! A rigid component would force an inequality between the expected
//! dimension of the Hilbert scheme and the dimension of the fibres over a
//! single curve. That inequality splits into four case systems according to
//! the sign of `d - g` and whether the complete series moves; each is tested
//! against the Castelnuovo genus caps for every admissible dimension `alpha`
//! of the complete hyperplane series. A triple survives when some `(alpha,
//! case)` pair passes everything, and is excluded otherwise.

mod cases;
mod derived;
mod range;
mod scan;
mod space_curves;

pub use cases::{alpha_cap, case_slack, genus_caps_ok, genus_caps_ok_with, SieveCase};
pub use derived::{derived_slack, derived_slack_exact, DerivedInequality};
pub use range::{in_hypothesis_range, in_hypothesis_range_with, RangeOptions};
pub use scan::{
    scan, scan_with, ExclusionReason, ScanOptions, ScopeReason, SieveWitness, Verdict,
    MAX_ALPHA_SPAN,
};
pub use space_curves::{r3_classify, r3_sieve, R3Branch, R3Outcome, R3Witness};

/// `floor(num / den)` for `den > 0`.
pub(crate) fn floor_div(num: i128, den: i128) -> i128 {
    num.div_euclid(den)
}

/// `value > num / den` for `den > 0`, decided without division.
pub(crate) fn exceeds(value: i128, num: i128, den: i128) -> bool {
    den * value > num
}
