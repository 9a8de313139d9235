use proptest::prelude::*;
use rigidity_core::surfaces::{
    arith_genus, cone_parameters, cone_pushforward_h0, find_stable_split, intersect,
    smooth_irreducible_exists,
};
use rigidity_core::{DivisorClass, Error};

fn class(a: i64, b: i64, e: i64) -> DivisorClass {
    DivisorClass { a, b, e }
}

fn add(x: DivisorClass, y: DivisorClass) -> DivisorClass {
    x.checked_add(y).unwrap()
}

#[test]
fn genus_is_exactly_half_the_product() {
    for a in 1..=50i64 {
        for b in -50..=50i64 {
            for e in 0..=50i64 {
                let twice = (a - 1) * (2 * b - a * e - 2);
                assert_eq!(twice % 2, 0);
                assert_eq!(2 * arith_genus(class(a, b, e)).unwrap(), twice, "({a},{b},{e})");
            }
        }
    }
}

#[test]
fn quadric_genus_matches_bidegree() {
    for a in 1..30 {
        for b in 0..30 {
            assert_eq!(arith_genus(class(a, b, 0)).unwrap(), (a - 1) * (b - 1));
        }
    }
}

#[test]
fn adjunction_is_additive() {
    for e in 0..=5i64 {
        let valid: Vec<DivisorClass> = (1..=20i64)
            .flat_map(|a| (a * e..=a * e + 6).map(move |b| class(a, b, e)))
            .collect();
        for &x in &valid {
            for &y in &valid {
                let lhs = arith_genus(add(x, y)).unwrap();
                let rhs = arith_genus(x).unwrap() + arith_genus(y).unwrap()
                    + intersect(x, y).unwrap()
                    - 1;
                assert_eq!(lhs, rhs, "{x:?} {y:?}");
            }
        }
    }
}

#[test]
fn splits_cover_every_eligible_class() {
    for e in 0..=4i64 {
        for a in 2..=12i64 {
            for b in 0..=60i64 {
                let d = class(a, b, e);
                if !smooth_irreducible_exists(d) || arith_genus(d).unwrap() < 2 {
                    continue;
                }
                if e > 0 && b < a * e {
                    continue;
                }
                let cert = find_stable_split(d).unwrap().unwrap_or_else(|| panic!("{d:?}"));
                assert_eq!(add(cert.d1, cert.d2), d);
                assert!(smooth_irreducible_exists(cert.d1) && smooth_irreducible_exists(cert.d2));
                assert_eq!(cert.intersection, intersect(cert.d1, cert.d2).unwrap());
                assert!(cert.intersection >= 3);
            }
        }
    }
}

#[test]
fn canonical_certificates() {
    let c = find_stable_split(class(4, 9, 2)).unwrap().unwrap();
    assert_eq!((c.d1, c.d2, c.intersection), (class(4, 8, 2), class(0, 1, 2), 4));
    let c = find_stable_split(class(4, 4, 1)).unwrap().unwrap();
    assert_eq!((c.d1, c.d2, c.intersection), (class(1, 1, 1), class(3, 3, 1), 3));
    assert_eq!(find_stable_split(class(3, 3, 1)), Err(Error::BelowStability { genus: 1 }));
}

#[test]
fn elliptic_cone_sums() {
    assert_eq!(cone_pushforward_h0(3, 24, 8, &[]).unwrap(), (0..3).map(|i| (3 - i) * 8).sum());
    assert_eq!(cone_pushforward_h0(2, 24, 8, &[]).unwrap(), 48);
    assert_eq!(cone_pushforward_h0(1, 0, 3, &[0]).unwrap(), 1);
    assert_eq!(cone_parameters(13, 4).unwrap().a, 3);
    assert!(matches!(cone_parameters(10, 4), Err(Error::NoConeRepresentation { .. })));
}

fn classes_on(e: i64) -> impl Strategy<Value = DivisorClass> {
    (-40i64..40, -40i64..40).prop_map(move |(a, b)| class(a, b, e))
}

proptest! {
    #[test]
    fn pairing_is_symmetric_and_bilinear(
        (x, y, z) in (0i64..6).prop_flat_map(|e| (classes_on(e), classes_on(e), classes_on(e)))
    ) {
        prop_assert_eq!(intersect(x, y).unwrap(), intersect(y, x).unwrap());
        let lhs = intersect(add(x, y), z).unwrap();
        prop_assert_eq!(lhs, intersect(x, z).unwrap() + intersect(y, z).unwrap());
    }

    #[test]
    fn mismatched_surfaces_are_rejected(e1 in 0i64..10, e2 in 0i64..10) {
        prop_assume!(e1 != e2);
        let r = intersect(class(1, 0, e1), class(1, 0, e2));
        prop_assert!(
            matches!(r, Err(Error::SurfaceMismatch { .. })),
            "expected SurfaceMismatch, got {:?}",
            r
        );
    }
}
