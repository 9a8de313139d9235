//! Divisor classes on the Hirzebruch surfaces `X_e` and certificates that a
//! curve class specialises to a singular stable curve.
//!
//! A class `aC_0 + bf` is stored as `(a, b, e)`. The intersection pairing is
//! `C_0^2 = -e`, `C_0.f = 1`, `f^2 = 0`. All arithmetic is checked; overflow
//! surfaces as [`Error::Overflow`].

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
    pub e: i64,
}

impl DivisorClass {
    pub fn new(a: i64, b: i64, e: i64) -> Result<Self, Error> {
        if a < 0 || b < 0 || e < 0 {
            return Err(Error::InvalidDivisorClass { a, b, e });
        }
        Ok(DivisorClass { a, b, e })
    }

    /// The section `C_0` on `X_e`.
    pub fn section(e: i64) -> Self {
        DivisorClass { a: 1, b: 0, e }
    }

    /// A fibre `f` on `X_e`.
    pub fn fiber(e: i64) -> Self {
        DivisorClass { a: 0, b: 1, e }
    }

    pub fn checked_add(self, other: Self) -> Result<Self, Error> {
        same_surface(&self, &other)?;
        let overflow = Error::Overflow { op: "divisor sum" };
        Ok(DivisorClass {
            a: self.a.checked_add(other.a).ok_or(overflow.clone())?,
            b: self.b.checked_add(other.b).ok_or(overflow)?,
            e: self.e,
        })
    }

    /// `self - other`, which may leave the effective cone (negative entries).
    pub fn checked_sub(self, other: Self) -> Result<Self, Error> {
        same_surface(&self, &other)?;
        let overflow = Error::Overflow { op: "divisor difference" };
        Ok(DivisorClass {
            a: self.a.checked_sub(other.a).ok_or(overflow.clone())?,
            b: self.b.checked_sub(other.b).ok_or(overflow)?,
            e: self.e,
        })
    }

    pub fn scaled(self, k: i64) -> Result<Self, Error> {
        let overflow = Error::Overflow { op: "divisor multiple" };
        Ok(DivisorClass {
            a: self.a.checked_mul(k).ok_or(overflow.clone())?,
            b: self.b.checked_mul(k).ok_or(overflow)?,
            e: self.e,
        })
    }
}

fn same_surface(x: &DivisorClass, y: &DivisorClass) -> Result<(), Error> {
    if x.e != y.e {
        return Err(Error::SurfaceMismatch { left: x.e, right: y.e });
    }
    Ok(())
}

/// A decomposition `D = D1 + D2` into classes of smooth irreducible curves
/// meeting in at least three points, so the general member of `|D|`
/// specialises to the singular stable curve `C1 ∪ C2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SplitCertificate {
    pub d1: DivisorClass,
    pub d2: DivisorClass,
    pub intersection: i64,
}

/// `d = a*base + eta` for a curve on a cone of degree `base`, `eta` in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConeParameters {
    pub a: i64,
    pub eta: i64,
}

/// Intersection number `-e*a1*a2 + a1*b2 + a2*b1`.
pub fn intersect(d1: DivisorClass, d2: DivisorClass) -> Result<i64, Error> {
    same_surface(&d1, &d2)?;
    let (a1, b1, a2, b2, e) = (
        d1.a as i128,
        d1.b as i128,
        d2.a as i128,
        d2.b as i128,
        d1.e as i128,
    );
    let overflow = Error::Overflow { op: "intersect" };
    let self_term = e.checked_mul(a1).and_then(|x| x.checked_mul(a2)).ok_or(overflow.clone())?;
    let value = (a1 * b2 + a2 * b1).checked_sub(self_term).ok_or(overflow.clone())?;
    i64::try_from(value).map_err(|_| overflow)
}

/// `(a-1)(2b - ae - 2)`, twice the arithmetic genus. Always even.
fn genus_numerator(a: i128, b: i128, e: i128) -> Option<i128> {
    let inner = (2 * b).checked_sub(a.checked_mul(e)?)?.checked_sub(2)?;
    (a - 1).checked_mul(inner)
}

/// Arithmetic genus `(a-1)(2b - ae - 2)/2` of a curve in `|aC_0 + bf|`.
pub fn arith_genus(d: DivisorClass) -> Result<i64, Error> {
    if d.a < 1 {
        return Err(Error::OutOfDomain { op: "arith_genus", reason: "need a >= 1" });
    }
    let overflow = Error::Overflow { op: "arith_genus" };
    let num = genus_numerator(d.a as i128, d.b as i128, d.e as i128).ok_or(overflow.clone())?;
    debug_assert!(num % 2 == 0);
    i64::try_from(num / 2).map_err(|_| overflow)
}

/// Whether `|D|` is known to contain a smooth irreducible curve.
///
/// Only the cases the degeneration argument relies on are recognised: a
/// fibre, the classes `C_0 + bf`, and `aC_0 + bf` with `a >= 2` and either
/// `e = 0, b >= 1` or `e > 0, b >= ae`.
pub fn smooth_irreducible_exists(d: DivisorClass) -> bool {
    let DivisorClass { a, b, e } = d;
    if a < 0 || b < 0 || e < 0 {
        return false;
    }
    match a {
        0 => b == 1,
        1 => true,
        _ if e == 0 => b >= 1,
        _ => (a as i128) * (e as i128) <= b as i128,
    }
}

fn certificate_if_stable(d1: DivisorClass, d2: DivisorClass) -> Option<SplitCertificate> {
    if !smooth_irreducible_exists(d1) || !smooth_irreducible_exists(d2) {
        return None;
    }
    let intersection = intersect(d1, d2).ok()?;
    (intersection >= 3).then_some(SplitCertificate { d1, d2, intersection })
}

/// The three splittings used in the degeneration argument, in the order they
/// are tried: `(D - f) + f`, `(C_0 + ef) + (a-1)(C_0 + ef)`, `C_0 + (C_0 + bf)`.
pub fn canonical_splits(d: DivisorClass) -> impl Iterator<Item = (DivisorClass, DivisorClass)> {
    let e = d.e;
    let minus_fiber = d
        .checked_sub(DivisorClass::fiber(e))
        .ok()
        .map(|d1| (d1, DivisorClass::fiber(e)));
    let along_section = (e > 0 && d.a >= 2 && (d.a as i128) * (e as i128) == d.b as i128)
        .then(|| {
            let unit = DivisorClass { a: 1, b: e, e };
            unit.scaled(d.a - 1).ok().map(|rest| (unit, rest))
        })
        .flatten();
    let two_sections =
        (d.a == 2).then(|| (DivisorClass::section(e), DivisorClass { a: 1, b: d.b, e }));
    minus_fiber.into_iter().chain(along_section).chain(two_sections)
}

/// Find `D = D1 + D2` with both parts smooth irreducible and meeting in at
/// least three points.
///
/// The canonical splittings are tried first; otherwise every `(a1, b1)` with
/// `0 <= a1 <= a`, `0 <= b1 <= b` is tried in lexicographic order. Returns
/// `Ok(None)` if the search finds nothing.
pub fn find_stable_split(d: DivisorClass) -> Result<Option<SplitCertificate>, Error> {
    let d = DivisorClass::new(d.a, d.b, d.e)?;
    if !smooth_irreducible_exists(d) {
        return Err(Error::OutOfDomain {
            op: "find_stable_split",
            reason: "class has no known smooth irreducible member",
        });
    }
    if d.a < 2 {
        return Err(Error::OutOfDomain { op: "find_stable_split", reason: "need a >= 2" });
    }
    let genus = arith_genus(d)?;
    if genus < 2 {
        return Err(Error::BelowStability { genus });
    }

    for (d1, d2) in canonical_splits(d) {
        if let Some(cert) = certificate_if_stable(d1, d2) {
            return Ok(Some(cert));
        }
    }
    for a1 in 0..=d.a {
        for b1 in 0..=d.b {
            let d1 = DivisorClass { a: a1, b: b1, e: d.e };
            let d2 = DivisorClass { a: d.a - a1, b: d.b - b1, e: d.e };
            if let Some(cert) = certificate_if_stable(d1, d2) {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// Write `d = a*base + eta` with `eta` in `{0, 1}` and `a >= 1`.
pub fn cone_parameters(d: i64, base: i64) -> Result<ConeParameters, Error> {
    if d < 1 || base < 2 {
        return Err(Error::OutOfDomain { op: "cone_parameters", reason: "need d >= 1, base >= 2" });
    }
    let (a, eta) = (d / base, d % base);
    if eta > 1 || a < 1 {
        return Err(Error::NoConeRepresentation { d, base });
    }
    Ok(ConeParameters { a, eta })
}

/// `h^0` of a line bundle of degree `deg` on an elliptic curve; `trivial`
/// distinguishes `O_E` from the other degree-zero bundles.
pub fn elliptic_h0(deg: i64, trivial: bool) -> i64 {
    match deg {
        d if d >= 1 => d,
        0 if trivial => 1,
        _ => 0,
    }
}

/// `h^0(⊕_{i=0..a} M(-i))` on an elliptic normal curve of degree `r`, where
/// `M` has degree `deg_m` and `M(-i)` is trivial exactly for `i` in
/// `trivial_indices`.
pub fn cone_pushforward_h0(
    a: i64,
    deg_m: i64,
    r: i64,
    trivial_indices: &[i64],
) -> Result<i128, Error> {
    if a < 1 || r < 3 {
        return Err(Error::OutOfDomain {
            op: "cone_pushforward_h0",
            reason: "need a >= 1, r >= 3",
        });
    }
    let mut total: i128 = 0;
    for i in 0..=a {
        let deg = (deg_m as i128) - (i as i128) * (r as i128);
        // degrees below zero contribute nothing; clamp before narrowing
        let deg = deg.clamp(-1, i64::MAX as i128) as i64;
        total += elliptic_h0(deg, trivial_indices.contains(&i)) as i128;
    }
    Ok(total)
}
