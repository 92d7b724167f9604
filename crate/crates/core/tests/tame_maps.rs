mod common;

use common::{random_tame, rng};
use polyaut::automap::{compose_all, is_elementary, ElementaryMap};
use polyaut::coordcheck::{coordinate_test_z, degree_bound, CoordVerdict};
use polyaut::derivation::{jacobian_derivation, lnd_check};
use polyaut::verify_inverse;

#[test]
fn reversed_inverses_invert() {
    let mut r = rng(21);
    for _ in 0..100 {
        let (f, factors) = random_tame(&mut r, 6);
        let inv: Vec<_> = factors.iter().rev().map(|e| e.inverse().to_map()).collect();
        assert!(verify_inverse(&f, &compose_all(&inv).unwrap()).unwrap());
    }
}

#[test]
fn elementary_maps_are_recognized() {
    let mut r = rng(22);
    for _ in 0..100 {
        let e = common::random_elementary(&mut r);
        if e.shift.is_zero() && e.unit == polyaut::Rational::from_integer(1.into()) {
            continue;
        }
        let got: ElementaryMap = is_elementary(&e.to_map()).expect("elementary");
        assert_eq!(got.to_map(), e.to_map());
    }
}

#[test]
fn tame_components_pass_the_coordinate_test() {
    let mut r = rng(23);
    for _ in 0..30 {
        let (f, _) = random_tame(&mut r, 3);
        for c in f.components() {
            if c.is_constant() {
                continue;
            }
            let report = coordinate_test_z(c).unwrap();
            assert_eq!(report.verdict, CoordVerdict::Coordinate, "{c}");
        }
    }
}

#[test]
fn lnd_bound_agrees_with_longer_iteration() {
    let mut r = rng(24);
    for _ in 0..100 {
        let (f, _) = random_tame(&mut r, 5);
        let c = f.component(0);
        let bound = degree_bound(c);
        let d = jacobian_derivation(c);
        let short = lnd_check(&d, bound).unwrap().is_lnd;
        let long = lnd_check(&d, 3 * bound).unwrap().is_lnd;
        assert!(short && long, "{c}");
    }
}
