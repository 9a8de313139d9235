use crate::bounds::{Castelnuovo, GenusBounds};
use crate::Error;

use super::floor_div;

/// The four case systems.
///
/// `Case1` and `Case2` cover `d < g`, `Case3` and `Case4` cover `d >= g`.
/// The odd cases assume the complete series is isolated (`dim W = 0`), the
/// even cases that it moves in a positive-dimensional family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SieveCase {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl SieveCase {
    pub const ALL: [SieveCase; 4] =
        [SieveCase::Case1, SieveCase::Case2, SieveCase::Case3, SieveCase::Case4];

    /// The two cases applicable to `(d, g)`; `d = g` belongs to `Case3`/`Case4`.
    pub fn for_pair(d: i64, g: i64) -> [SieveCase; 2] {
        if d < g {
            [SieveCase::Case1, SieveCase::Case2]
        } else {
            [SieveCase::Case3, SieveCase::Case4]
        }
    }

    pub fn applies(self, d: i64, g: i64) -> bool {
        match self {
            SieveCase::Case1 | SieveCase::Case2 => d < g,
            SieveCase::Case3 | SieveCase::Case4 => d >= g,
        }
    }

    /// Whether the complete series is assumed to move.
    pub fn series_moves(self) -> bool {
        matches!(self, SieveCase::Case2 | SieveCase::Case4)
    }

    pub fn number(self) -> u8 {
        match self {
            SieveCase::Case1 => 1,
            SieveCase::Case2 => 2,
            SieveCase::Case3 => 3,
            SieveCase::Case4 => 4,
        }
    }
}

/// Right-hand side minus left-hand side of the case inequality; the case is
/// feasible at `alpha` iff the result is non-negative.
///
/// * `Case1`, `Case3`: `(r-3)g - (r+1)(d-alpha) + 3`
/// * `Case2`: `(r-3)g - rd + (r-2)alpha + 4`
/// * `Case4`: `(r-4)g - (r-1)d + (r-2)alpha + 4`
pub fn case_slack(case: SieveCase, d: i64, g: i64, r: i64, alpha: i64) -> i128 {
    let (d, g, r, a) = (d as i128, g as i128, r as i128, alpha as i128);
    match case {
        SieveCase::Case1 | SieveCase::Case3 => (r - 3) * g - (r + 1) * (d - a) + 3,
        SieveCase::Case2 => (r - 3) * g - r * d + (r - 2) * a + 4,
        SieveCase::Case4 => (r - 4) * g - (r - 1) * d + (r - 2) * a + 4,
    }
}

/// Largest `alpha` allowed by the case: `(d+1)/3`, `d/3`, `(2d-g+1)/3`,
/// `(2d-g)/3`, rounded down.
pub fn alpha_cap(case: SieveCase, d: i64, g: i64) -> i64 {
    let (d, g) = (d as i128, g as i128);
    let cap = match case {
        SieveCase::Case1 => floor_div(d + 1, 3),
        SieveCase::Case2 => floor_div(d, 3),
        SieveCase::Case3 => floor_div(2 * d - g + 1, 3),
        SieveCase::Case4 => floor_div(2 * d - g, 3),
    };
    cap.clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// The genus caps a curve with no degeneration to a singular stable curve
/// must satisfy when its complete hyperplane series has dimension `alpha`.
pub fn genus_caps_ok(d: i64, g: i64, alpha: i64) -> Result<bool, Error> {
    genus_caps_ok_with(&Castelnuovo, d, g, alpha)
}

/// [`genus_caps_ok`] with the Castelnuovo bounds taken from `bounds`.
///
/// True iff `g <= pi(d, alpha)`, and `g <= pi1` once `d >= 2alpha + 1`, and
/// `g <= pi2`, `g < pi1` once `alpha >= 8` and `d >= 2alpha + 3`.
pub fn genus_caps_ok_with<B: GenusBounds + ?Sized>(
    bounds: &B,
    d: i64,
    g: i64,
    alpha: i64,
) -> Result<bool, Error> {
    let profile = bounds.profile(d, alpha)?;
    let pi = bounds.max_genus(d, alpha)?;
    let g = g as i128;
    let (d, a) = (d as i128, alpha as i128);

    if g > pi {
        return Ok(false);
    }
    if d > 2 * a && g > profile.pi1 {
        return Ok(false);
    }
    if a >= 8 && d >= 2 * a + 3 && (g > profile.pi2 || g >= profile.pi1) {
        return Ok(false);
    }
    Ok(true)
}
