use crate::bounds::{mu1_for, mu2_for};
use crate::Error;

/// The expanded inequalities obtained by substituting a Castelnuovo bound for
/// `g` in the `d < g` case systems.
///
/// Each is written in terms of the division data `(alpha, m, eps, mu)` of the
/// bound it uses: `m1`-data for the `Pi1` variants, `m2`-data for `Pi2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DerivedInequality {
    /// Isolated series, `g < pi1`. Holds when the value is `> 0`.
    Case1Pi1,
    /// Isolated series, `g <= pi2`. Holds when the value is `>= 0`.
    Case1Pi2,
    /// Moving series, `g < pi1`. Holds when the value is `> 0`.
    Case2Pi1,
    /// Moving series, `g <= pi2`. Holds when the value is `>= 0`.
    Case2Pi2,
}

impl DerivedInequality {
    pub const ALL: [DerivedInequality; 4] = [
        DerivedInequality::Case1Pi1,
        DerivedInequality::Case1Pi2,
        DerivedInequality::Case2Pi1,
        DerivedInequality::Case2Pi2,
    ];

    pub fn uses_pi2(self) -> bool {
        matches!(self, DerivedInequality::Case1Pi2 | DerivedInequality::Case2Pi2)
    }

    pub fn series_moves(self) -> bool {
        matches!(self, DerivedInequality::Case2Pi1 | DerivedInequality::Case2Pi2)
    }

    /// Apply the strictness of this inequality to a (doubled) value.
    pub fn is_satisfied(self, doubled: i128) -> bool {
        if self.uses_pi2() {
            doubled >= 0
        } else {
            doubled > 0
        }
    }

    /// Divisor used to recover the degree: `alpha` for `pi1`, `alpha + 1` for `pi2`.
    pub fn modulus(self, alpha: i64) -> i64 {
        if self.uses_pi2() {
            alpha + 1
        } else {
            alpha
        }
    }

    /// `d = m * modulus + eps + 1`.
    pub fn degree(self, alpha: i64, m: i64) -> impl Fn(i64) -> i128 {
        let modulus = self.modulus(alpha) as i128;
        move |eps| m as i128 * modulus + eps as i128 + 1
    }

    pub fn short_name(self) -> &'static str {
        match self {
            DerivedInequality::Case1Pi1 => "case1-pi1",
            DerivedInequality::Case1Pi2 => "case1-pi2",
            DerivedInequality::Case2Pi1 => "case2-pi1",
            DerivedInequality::Case2Pi2 => "case2-pi2",
        }
    }
}

/// Twice the expanded form of the chosen inequality (doubling clears the
/// `(r-3)/2` coefficient). Use [`DerivedInequality::is_satisfied`] to read it.
///
/// With `C(m,2) = m(m-1)/2`, the undoubled expressions are
///
/// * `Case1Pi1`: `alpha(m-1)[(r-3)m/2 - r - 1] + (eps+1)[(r-3)m - r - 1] + 3 + mu(r-3)`
/// * `Case1Pi2`: `(alpha+1)(m-1)[(r-3)m/2 - r - 1] + (eps+1)[(r-3)m - r - 1] - r + 2 + (m+mu)(r-3)`
/// * `Case2Pi1`: `alpha[(r-3)C(m,2) - mr + r - 2] + (eps+1)[(r-3)m - r] + 4 + mu(r-3)`
/// * `Case2Pi2`: `(alpha+1)[(r-3)C(m,2) - mr + r - 2] + (eps+1)[(r-3)m - r] - r + 6 + (m+mu)(r-3)`
pub fn derived_slack(
    which: DerivedInequality,
    r: i64,
    alpha: i64,
    m: i64,
    eps: i64,
    mu: i64,
) -> Result<i128, Error> {
    const OP: &str = "derived_slack";
    if alpha < 8 || m < 1 || r < 3 {
        return Err(Error::OutOfDomain { op: OP, reason: "need alpha >= 8, m >= 1, r >= 3" });
    }
    let (eps_max, expected_mu) = if which.uses_pi2() {
        (alpha, mu2_for(eps, alpha))
    } else {
        (alpha - 1, mu1_for(eps, alpha))
    };
    if eps < 0 || eps > eps_max {
        return Err(Error::OutOfDomain { op: OP, reason: "remainder out of range" });
    }
    if mu != expected_mu {
        return Err(Error::OutOfDomain { op: OP, reason: "correction term inconsistent with remainder" });
    }
    derived_slack_unchecked(which, r, alpha, m, eps, mu).ok_or(Error::Overflow { op: OP })
}

fn derived_slack_unchecked(
    which: DerivedInequality,
    r: i64,
    alpha: i64,
    m: i64,
    eps: i64,
    mu: i64,
) -> Option<i128> {
    let (r, a, m, e1, mu) = (r as i128, alpha as i128, m as i128, eps as i128 + 1, mu as i128);
    let rm3 = r - 3;
    let mul = |x: i128, y: i128| x.checked_mul(y);
    let value = match which {
        DerivedInequality::Case1Pi1 | DerivedInequality::Case1Pi2 => {
            let base = if which.uses_pi2() { a + 1 } else { a };
            // 2 * base(m-1)[(r-3)m/2 - r - 1] = base(m-1)[(r-3)m - 2r - 2]
            let bracket = mul(rm3, m)?.checked_sub(2 * r + 2)?;
            let head = mul(mul(base, m - 1)?, bracket)?;
            let mid = mul(2 * e1, mul(rm3, m)?.checked_sub(r + 1)?)?;
            let tail = if which.uses_pi2() {
                2 * (-r + 2) + 2 * mul(m + mu, rm3)?
            } else {
                6 + 2 * mul(mu, rm3)?
            };
            head.checked_add(mid)?.checked_add(tail)?
        }
        DerivedInequality::Case2Pi1 | DerivedInequality::Case2Pi2 => {
            let base = if which.uses_pi2() { a + 1 } else { a };
            let c2 = mul(m, m - 1)? / 2;
            let bracket = mul(rm3, c2)?.checked_sub(mul(m, r)?)?.checked_add(r - 2)?;
            let head = mul(base, bracket)?;
            let mid = mul(e1, mul(rm3, m)?.checked_sub(r)?)?;
            let tail = if which.uses_pi2() { -r + 6 + mul(m + mu, rm3)? } else { 4 + mul(mu, rm3)? };
            mul(2, head.checked_add(mid)?.checked_add(tail)?)?
        }
    };
    Some(value)
}

/// The same quantity computed from the Castelnuovo bound it came from:
/// `2[(r-3)pi - (r+1)(d-alpha) + 3]` for the isolated-series forms and
/// `2[(r-3)pi - rd + (r-2)alpha + 4]` for the moving-series forms, with `d`
/// reconstructed from `(m, eps)` and `pi` the matching bound.
pub fn derived_slack_exact(
    which: DerivedInequality,
    r: i64,
    alpha: i64,
    m: i64,
    eps: i64,
    mu: i64,
) -> i128 {
    let (r, a, mi) = (r as i128, alpha as i128, m as i128);
    let d = which.degree(alpha, m)(eps);
    let pi = if which.uses_pi2() {
        mi * (mi - 1) / 2 * (a + 1) + mi * (eps as i128 + 2) + mu as i128
    } else {
        mi * (mi - 1) / 2 * a + mi * (eps as i128 + 1) + mu as i128
    };
    if which.series_moves() {
        2 * ((r - 3) * pi - r * d + (r - 2) * a + 4)
    } else {
        2 * ((r - 3) * pi - (r + 1) * (d - a) + 3)
    }
}
