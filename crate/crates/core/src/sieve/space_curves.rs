//! Curves in 3-space.
//!
//! Here the fibre-dimension count is sharper: a rigid component of degree `d`
//! and genus `g >= 5` with `d <= g` needs `4d <= dim W + 4alpha + 25`, which
//! only leaves a handful of pairs with `d <= 9`. Those are settled by the
//! classification table in [`r3_classify`].

use alloc::vec::Vec;

use crate::bounds::{agh_cap, max_genus_pi};
use crate::Error;

use super::floor_div;
use super::scan::{ExclusionReason, Verdict};

/// Additive constant of the space-curve count. It already assumes the image
/// in moduli has dimension at most 22.
const SPACE_CURVE_CONSTANT: i128 = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum R3Branch {
    /// The complete hyperplane series is isolated.
    FixedSeries,
    /// The complete hyperplane series moves.
    MovingSeries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct R3Witness {
    pub alpha: i64,
    pub branch: R3Branch,
    /// `dim W + 4alpha + 25 - 4d` with the largest admissible `dim W`.
    #[cfg_attr(feature = "serde", serde(with = "crate::wide"))]
    pub slack: i128,
}

/// The fibre-dimension sieve for `r = 3`, `g >= 5`, `d <= g`.
pub fn r3_sieve(d: i64, g: i64) -> Result<Verdict<R3Witness>, Error> {
    if g < 5 || d > g || d < 1 {
        return Err(Error::OutOfDomain { op: "r3_sieve", reason: "need g >= 5 and 1 <= d <= g" });
    }
    let four_d = 4 * d as i128;
    let mut witnesses = Vec::new();
    let top = floor_div(d as i128 + 1, 3) as i64;
    for alpha in 3..=top {
        let base = 4 * alpha as i128 + SPACE_CURVE_CONSTANT - four_d;
        if base >= 0 {
            witnesses.push(R3Witness { alpha, branch: R3Branch::FixedSeries, slack: base });
        }
        if alpha <= d / 3 {
            let family = agh_cap(d, g, alpha);
            if family >= 1 && family + base >= 0 {
                witnesses.push(R3Witness {
                    alpha,
                    branch: R3Branch::MovingSeries,
                    slack: family + base,
                });
            }
        }
    }
    if witnesses.is_empty() {
        Ok(Verdict::excluded(ExclusionReason::AllCasesInfeasible))
    } else {
        Ok(Verdict::Survivors { witnesses })
    }
}

/// What is known about the image in moduli of the space curves of degree
/// `d` and genus `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(tag = "kind", content = "dim", rename_all = "snake_case")
)]
pub enum R3Outcome {
    /// No smooth irreducible nondegenerate curves exist.
    Empty,
    /// Some component dominates the moduli space.
    Dominates,
    /// Every component maps onto a locus of exactly this dimension.
    ExactImage(i64),
    /// If any component exists, its image has at least this dimension.
    MinImageIfNonempty(i64),
    /// Rational curves.
    OutOfScope,
}

impl R3Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            R3Outcome::Empty => "empty",
            R3Outcome::Dominates => "dominates",
            R3Outcome::ExactImage(_) => "exact-image",
            R3Outcome::MinImageIfNonempty(_) => "min-image-if-nonempty",
            R3Outcome::OutOfScope => "out-of-scope",
        }
    }
}

/// Classify `(d, g)` for curves in 3-space.
pub fn r3_classify(d: i64, g: i64) -> R3Outcome {
    if g == 0 {
        return R3Outcome::OutOfScope;
    }
    if d < 3 || g < 0 {
        return R3Outcome::Empty;
    }
    let pi = max_genus_pi(d, 3).unwrap_or(i128::MAX);
    if g as i128 > pi {
        return R3Outcome::Empty;
    }
    match (d, g) {
        (9, 11) => return R3Outcome::Empty,
        (7, 6) => return R3Outcome::ExactImage(13),
        (8, 7) | (8, 8) => return R3Outcome::ExactImage(17),
        (8, 9) => return R3Outcome::ExactImage(18),
        (9, 9) | (9, 10) => return R3Outcome::ExactImage(21),
        (9, 12) => return R3Outcome::ExactImage(23),
        _ => {}
    }
    let (d, g) = (d as i128, g as i128);
    if d == g + 1 {
        return if g <= 5 { R3Outcome::Empty } else { R3Outcome::Dominates };
    }
    if d >= g + 3 || (d == g + 2 && g >= 5) || g <= 4 {
        return R3Outcome::Dominates;
    }
    R3Outcome::MinImageIfNonempty(23)
}
