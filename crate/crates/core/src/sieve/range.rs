use crate::Error;

use super::exceeds;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeOptions {
    /// Remove `(30, 34)` from the `r = 9` range.
    pub r9_exception: bool,
    /// Require `3d > g + 22` when `r = 5` and `101 <= d <= 113`.
    pub r5_window: bool,
}

impl Default for RangeOptions {
    fn default() -> Self {
        RangeOptions { r9_exception: true, r5_window: true }
    }
}

/// Whether `(d, g)` lies in the range where components of the Hilbert scheme
/// in `P^r` rigid in moduli are ruled out, for `r >= 4` and `g >= 1`.
pub fn in_hypothesis_range(d: i64, g: i64, r: i64) -> Result<bool, Error> {
    in_hypothesis_range_with(d, g, r, RangeOptions::default())
}

pub fn in_hypothesis_range_with(d: i64, g: i64, r: i64, opts: RangeOptions) -> Result<bool, Error> {
    if r < 4 {
        return Err(Error::OutOfDomain { op: "in_hypothesis_range", reason: "need r >= 4" });
    }
    if g < 1 {
        return Err(Error::OutOfDomain { op: "in_hypothesis_range", reason: "need g >= 1" });
    }
    let (d, g, ri) = (d as i128, g as i128, r as i128);
    // d > (a g + b) / c
    let gt = |a: i128, b: i128, c: i128| exceeds(d, a * g + b, c);

    let inside = match r {
        4 => gt(17, 72, 64) || gt(4, 15, 15) || (gt(1, 18, 4) && gt(17, 44, 64)),
        5 => {
            let base = gt(9, 20, 20) || gt(10, 17, 22) || (gt(2, 25, 5) && gt(9, 10, 20));
            let window = !opts.r5_window || !(101..=113).contains(&d) || gt(1, 22, 3);
            base && window
        }
        6 => {
            gt(13, 20, 22)
                || gt(3, 3, 5)
                || (gt(1, 10, 2) && gt(13, 10, 22))
                || (gt(1, 10, 2) && gt(3, -1, 5))
        }
        7 => gt(19, 24, 27) || (gt(4, 39, 7) && gt(76, 71, 108)),
        8 => gt(4, 1, 5) || gt(5, -4, 6),
        9 => {
            let base = gt(9, -5, 10) || gt(29, 3, 33);
            base && !(opts.r9_exception && (d, g) == (30, 34))
        }
        10 => gt(21, -4, 22) || gt(17, 12, 18),
        11 => d > g,
        _ => gt(2 * (ri - 5), -ri + 14, ri + 1),
    };
    Ok(inside)
}
