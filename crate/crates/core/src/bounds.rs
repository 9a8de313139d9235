//! Numerical invariants of curves in projective space.
//!
//! Everything here is a closed-form integer function. Inputs are `i64`;
//! quantities that are products of inputs (genera, dimensions, Brill–Noether
//! numbers) are returned as `i128` so that no input in the `i64` range can
//! overflow them.

use alloc::vec::Vec;

use crate::Error;

/// A triple `(d, g, r)` indexing the Hilbert scheme of smooth irreducible
/// non-degenerate curves of degree `d` and genus `g` in `P^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "RawCurveClass")
)]
pub struct CurveClass {
    d: i64,
    g: i64,
    r: i64,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawCurveClass {
    d: i64,
    g: i64,
    r: i64,
}

#[cfg(feature = "serde")]
impl TryFrom<RawCurveClass> for CurveClass {
    type Error = Error;

    fn try_from(raw: RawCurveClass) -> Result<Self, Error> {
        CurveClass::new(raw.d, raw.g, raw.r)
    }
}

impl CurveClass {
    pub fn new(d: i64, g: i64, r: i64) -> Result<Self, Error> {
        if d < 1 || g < 0 || r < 3 {
            return Err(Error::InvalidCurveClass { d, g, r });
        }
        Ok(CurveClass { d, g, r })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn r(&self) -> i64 {
        self.r
    }
}

/// `n choose 2`.
pub(crate) fn choose2(n: i128) -> i128 {
    n * (n - 1) / 2
}

/// Brill–Noether number `g - (r+1)(g-d+r)`. Negative values are meaningful.
pub fn brill_noether(c: CurveClass) -> i128 {
    let (d, g, r) = (c.d as i128, c.g as i128, c.r as i128);
    g - (r + 1) * (g - d + r)
}

/// Euler characteristic of the normal bundle, `(r+1)d - (r-3)(g-1)`.
///
/// This is the expected dimension of the Hilbert scheme; for space curves it
/// is `4d` regardless of the genus.
pub fn euler_normal(c: CurveClass) -> i128 {
    let (d, g, r) = (c.d as i128, c.g as i128, c.r as i128);
    (r + 1) * d - (r - 3) * (g - 1)
}

/// Castelnuovo's bound `pi(d, r)` on the arithmetic genus of an irreducible
/// non-degenerate curve of degree `d` in `P^r`.
///
/// With `m = floor((d-1)/(r-1))` and `eps = d - 1 - m(r-1)` the bound is
/// `C(m,2)(r-1) + m*eps`.
pub fn max_genus_pi(d: i64, r: i64) -> Result<i128, Error> {
    if r < 2 {
        return Err(Error::OutOfDomain { op: "max_genus_pi", reason: "need r >= 2" });
    }
    if d < r {
        return Err(Error::OutOfDomain {
            op: "max_genus_pi",
            reason: "need d >= r for a non-degenerate curve",
        });
    }
    let (d, r) = (d as i128, r as i128);
    let m = (d - 1) / (r - 1);
    let eps = d - 1 - m * (r - 1);
    Ok(choose2(m) * (r - 1) + m * eps)
}

/// The second and third Castelnuovo bounds attached to `(d, alpha)`, together
/// with the division data they are built from.
///
/// `pi1` bounds the genus of curves not on a surface of degree `alpha - 1`,
/// `pi2` of curves not on a surface of degree at most `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CastelnuovoProfile {
    pub alpha: i64,
    /// `floor((d-1)/alpha)`
    pub m1: i64,
    /// `d - 1 - m1*alpha`, in `[0, alpha-1]`
    pub eps1: i64,
    pub mu1: i64,
    #[cfg_attr(feature = "serde", serde(with = "crate::wide"))]
    pub pi1: i128,
    /// `floor((d-1)/(alpha+1))`
    pub m2: i64,
    /// `d - 1 - m2*(alpha+1)`, in `[0, alpha]`
    pub eps2: i64,
    pub mu2: i64,
    #[cfg_attr(feature = "serde", serde(with = "crate::wide"))]
    pub pi2: i128,
}

impl CastelnuovoProfile {
    /// Degree recovered from the first division, `m1*alpha + eps1 + 1`.
    pub fn degree(&self) -> i128 {
        self.m1 as i128 * self.alpha as i128 + self.eps1 as i128 + 1
    }

    /// Degree recovered from the second division, `m2*(alpha+1) + eps2 + 1`.
    pub fn degree_from_second(&self) -> i128 {
        self.m2 as i128 * (self.alpha as i128 + 1) + self.eps2 as i128 + 1
    }
}

/// Correction term of `pi1`: 1 exactly when the remainder is maximal.
pub fn mu1_for(eps1: i64, alpha: i64) -> i64 {
    if eps1 == alpha - 1 {
        1
    } else {
        0
    }
}

/// Correction term of `pi2`; the three ranges are disjoint once `alpha >= 3`.
pub fn mu2_for(eps2: i64, alpha: i64) -> i64 {
    if eps2 == alpha {
        2
    } else if eps2 >= alpha - 2 {
        1
    } else {
        0
    }
}

pub fn castelnuovo_profile(d: i64, alpha: i64) -> Result<CastelnuovoProfile, Error> {
    if alpha < 3 {
        return Err(Error::OutOfDomain { op: "castelnuovo_profile", reason: "need alpha >= 3" });
    }
    if d < alpha.saturating_add(2) {
        return Err(Error::OutOfDomain {
            op: "castelnuovo_profile",
            reason: "need d >= alpha + 2",
        });
    }
    let m1 = (d - 1) / alpha;
    let eps1 = d - 1 - m1 * alpha;
    let mu1 = mu1_for(eps1, alpha);
    // alpha + 1 cannot overflow: alpha <= d - 2.
    let m2 = (d - 1) / (alpha + 1);
    let eps2 = d - 1 - m2 * (alpha + 1);
    let mu2 = mu2_for(eps2, alpha);

    let a = alpha as i128;
    let pi1 = choose2(m1 as i128) * a + m1 as i128 * (eps1 as i128 + 1) + mu1 as i128;
    let pi2 = choose2(m2 as i128) * (a + 1) + m2 as i128 * (eps2 as i128 + 2) + mu2 as i128;
    Ok(CastelnuovoProfile { alpha, m1, eps1, mu1, pi1, m2, eps2, mu2, pi2 })
}

/// Source of the Castelnuovo bounds used by the sieve.
///
/// The sieve and the verification harness take the bounds through this trait
/// so that corrupted formulas (see [`crate::mutants`]) can be substituted.
pub trait GenusBounds {
    fn max_genus(&self, d: i64, r: i64) -> Result<i128, Error> {
        max_genus_pi(d, r)
    }

    fn profile(&self, d: i64, alpha: i64) -> Result<CastelnuovoProfile, Error> {
        castelnuovo_profile(d, alpha)
    }
}

/// The genuine Castelnuovo bounds.
#[derive(Debug, Clone, Copy, Default)]
pub struct Castelnuovo;

impl GenusBounds for Castelnuovo {}

/// Upper bound on `dim W^rho_dim_d(C)` for a positive-dimensional family of
/// birationally very ample special series.
///
/// `d - 3*rho_dim + 1` when `d <= g`, otherwise `2d - 3*rho_dim - g + 1`. A
/// value `<= 0` means no family of positive dimension can exist.
pub fn agh_cap(d: i64, g: i64, rho_dim: i64) -> i128 {
    let (d, g, s) = (d as i128, g as i128, rho_dim as i128);
    if d <= g {
        d - 3 * s + 1
    } else {
        2 * d - 3 * s - g + 1
    }
}

/// Largest `r` for which a smooth non-degenerate curve of degree `d` and
/// genus `g` can sit in `P^r`.
pub fn embed_dim_cap(d: i64, g: i64) -> i64 {
    let (d, g) = (d as i128, g as i128);
    let cap = if d <= g { (d + 1).div_euclid(3) } else { (2 * d - g + 1).div_euclid(3) };
    cap as i64
}

/// Bidegrees `(a, b)`, `a >= b >= 0`, of curves of degree `d` and genus `g`
/// on a smooth quadric: `a + b = d` and `(a-1)(b-1) = g`. Sorted by
/// decreasing `a`.
pub fn quadric_types(d: i64, g: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    for b in 0..=d / 2 {
        let a = d - b;
        if (a as i128 - 1) * (b as i128 - 1) == g as i128 {
            out.push((a, b));
        }
    }
    out
}

/// Dimension of the image in moduli of a component of space curves whose
/// general member has `h^1(N_C) = h1_normal`: `4d - 15 + h1_normal`.
pub fn image_dim_r3(d: i64, h1_normal: i64) -> i128 {
    4 * d as i128 - 15 + h1_normal as i128
}

/// Dimension `2g + 2k - 5` of the locus of `k`-gonal curves of genus `g`.
///
/// Only used for reporting; the sieve never reads it.
pub fn gonality_locus_dim(g: i64, k: i64) -> Result<i64, Error> {
    if g < 2 {
        return Err(Error::OutOfDomain { op: "gonality_locus_dim", reason: "need g >= 2" });
    }
    if k < 2 || 2 * k as i128 > g as i128 + 3 {
        return Err(Error::OutOfDomain {
            op: "gonality_locus_dim",
            reason: "need 2 <= k <= (g+3)/2",
        });
    }
    i64::try_from(2 * g as i128 + 2 * k as i128 - 5)
        .map_err(|_| Error::Overflow { op: "gonality_locus_dim" })
}

/// Dimensions of the fibres of `Z -> W^alpha_d`: the Grassmannian of
/// `r`-dimensional subseries of a complete `g^alpha_d`, and `PGL(r+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BundleDims {
    pub grassmann: i128,
    pub pgl: i128,
}

pub fn bundle_dims(r: i64, alpha: i64) -> Result<BundleDims, Error> {
    if r < 3 {
        return Err(Error::OutOfDomain { op: "bundle_dims", reason: "need r >= 3" });
    }
    if alpha < r {
        return Err(Error::OutOfDomain { op: "bundle_dims", reason: "need alpha >= r" });
    }
    let (r, a) = (r as i128, alpha as i128);
    Ok(BundleDims { grassmann: (r + 1) * (a - r), pgl: r * r + 2 * r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cc(d: i64, g: i64, r: i64) -> CurveClass {
        CurveClass::new(d, g, r).unwrap()
    }

    /// Division by repeated subtraction; independent of `/` and `%`.
    fn divide_by_counting(n: i64, q: i64) -> (i64, i64) {
        let (mut m, mut rem) = (0, n);
        while rem >= q {
            rem -= q;
            m += 1;
        }
        (m, rem)
    }

    #[test]
    fn curve_class_rejects_out_of_range() {
        assert!(CurveClass::new(0, 0, 3).is_err());
        assert!(CurveClass::new(1, -1, 3).is_err());
        assert!(CurveClass::new(1, 0, 2).is_err());
        assert!(CurveClass::new(1, 0, 3).is_ok());
    }

    #[test]
    fn brill_noether_examples() {
        assert_eq!(brill_noether(cc(9, 8, 3)), 0);
        assert_eq!(brill_noether(cc(10, 6, 5)), 0);
        for g in 4..40 {
            assert_eq!(brill_noether(cc(2 * g - 2, g, g - 1)), 0);
        }
        assert_eq!(brill_noether(cc(14, 9, 3)), 17);
    }

    #[test]
    fn euler_normal_examples() {
        assert_eq!(euler_normal(cc(7, 6, 3)), 28);
        assert_eq!(euler_normal(cc(9, 9, 3)), 36);
        assert_eq!(euler_normal(cc(1, 0, 3)), 4);
        for d in 1..30 {
            for g in 0..30 {
                assert_eq!(euler_normal(cc(d, g, 3)), 4 * d as i128);
            }
        }
    }

    #[test]
    fn max_genus_spot_values() {
        assert_eq!(max_genus_pi(9, 3), Ok(12));
        assert_eq!(max_genus_pi(6, 3), Ok(4));
        assert_eq!(max_genus_pi(7, 3), Ok(6));
        assert_eq!(max_genus_pi(8, 3), Ok(9));
        for r in 2..40 {
            assert_eq!(max_genus_pi(r + 1, r), Ok(1), "elliptic normal curve in P^{r}");
        }
    }

    #[test]
    fn max_genus_domain() {
        assert!(max_genus_pi(2, 3).is_err());
        assert!(max_genus_pi(5, 1).is_err());
        assert_eq!(max_genus_pi(i64::MAX, 2), {
            let m = (i64::MAX as i128) - 1;
            Ok(m * (m - 1) / 2)
        });
    }

    #[test]
    fn profile_examples() {
        let p = castelnuovo_profile(9, 3).unwrap();
        assert_eq!((p.m1, p.eps1, p.mu1, p.pi1), (2, 2, 1, 10));
        let p = castelnuovo_profile(8, 3).unwrap();
        assert_eq!((p.m1, p.eps1, p.mu1, p.pi1), (2, 1, 0, 7));
        let p = castelnuovo_profile(30, 9).unwrap();
        assert_eq!((p.m1, p.eps1, p.mu1, p.pi1), (3, 2, 0, 36));
        assert_eq!((p.m2, p.eps2, p.mu2, p.pi2), (2, 9, 2, 34));
    }

    #[test]
    fn profile_matches_counting_division() {
        for alpha in 3..25 {
            for d in alpha + 2..200 {
                let p = castelnuovo_profile(d, alpha).unwrap();
                assert_eq!(divide_by_counting(d - 1, alpha), (p.m1, p.eps1));
                assert_eq!(divide_by_counting(d - 1, alpha + 1), (p.m2, p.eps2));
            }
        }
    }

    #[test]
    fn profile_domain() {
        assert!(castelnuovo_profile(10, 2).is_err());
        assert!(castelnuovo_profile(4, 3).is_err());
        assert!(castelnuovo_profile(5, 3).is_ok());
    }

    #[test]
    fn agh_cap_examples() {
        assert_eq!(agh_cap(9, 12, 3), 1);
        assert_eq!(agh_cap(12, 12, 3), 4);
        // both branches agree on the diagonal
        for d in 1..50 {
            let lower = d as i128 - 9 + 1;
            let upper = 2 * d as i128 - 9 - d as i128 + 1;
            assert_eq!(lower, upper);
            assert_eq!(agh_cap(d, d, 3), lower);
        }
        assert_eq!(agh_cap(8, 7, 3), 1);
    }

    #[test]
    fn embed_dim_cap_examples() {
        assert_eq!(embed_dim_cap(9, 12), 3);
        assert_eq!(embed_dim_cap(28, 100), 9);
        assert_eq!(embed_dim_cap(9, 8), 3);
    }

    #[test]
    fn quadric_type_examples() {
        assert_eq!(quadric_types(9, 11), vec![]);
        assert_eq!(quadric_types(9, 12), vec![(5, 4)]);
        assert_eq!(quadric_types(5, 0), vec![(4, 1)]);
        for d in 2..40 {
            assert_eq!(quadric_types(d, 0), vec![(d - 1, 1)]);
        }
        assert_eq!(quadric_types(8, 7), vec![]);
        assert_eq!(quadric_types(8, 8), vec![(5, 3)]);
        assert_eq!(quadric_types(8, 9), vec![(4, 4)]);
        assert_eq!(quadric_types(9, 10), vec![(6, 3)]);
    }

    #[test]
    fn image_dim_examples() {
        assert_eq!(image_dim_r3(8, 0), 17);
        assert_eq!(image_dim_r3(8, 1), 18);
        assert_eq!(image_dim_r3(9, 0), 21);
        assert_eq!(image_dim_r3(9, 2), 23);
    }

    #[test]
    fn gonality_examples() {
        assert_eq!(gonality_locus_dim(6, 3), Ok(13));
        assert_eq!(gonality_locus_dim(7, 4), Ok(17));
        for g in 2..30 {
            assert_eq!(gonality_locus_dim(g, 2), Ok(2 * g - 1));
        }
        assert!(gonality_locus_dim(6, 5).is_err());
        assert!(gonality_locus_dim(6, 1).is_err());
        assert!(gonality_locus_dim(1, 2).is_err());
    }

    #[test]
    fn bundle_dim_examples() {
        assert_eq!(bundle_dims(3, 3), Ok(BundleDims { grassmann: 0, pgl: 15 }));
        assert_eq!(bundle_dims(3, 5), Ok(BundleDims { grassmann: 8, pgl: 15 }));
        for r in 3..20 {
            assert_eq!(bundle_dims(r, r).unwrap().grassmann, 0);
            assert_eq!(bundle_dims(r, r).unwrap().pgl, (r * r + 2 * r) as i128);
        }
        assert!(bundle_dims(4, 3).is_err());
        // 22 + dim G(3, alpha) + dim PGL(4) - 12 = 4*alpha + 25
        for alpha in 3..40 {
            let b = bundle_dims(3, alpha).unwrap();
            assert_eq!(22 + b.grassmann + b.pgl, 4 * alpha as i128 + 25);
        }
    }
}
