use std::f64::consts::PI;

use isoword::arrowarc::{
    antipode_head, arc_to_rotation, rotation_to_arc, slide, triangle_compose, ArrowArc,
};
use isoword::random as rnd;
use isoword::so3::Rotation3;
use isoword::Tolerance;
use nalgebra::{Unit, UnitQuaternion, Vector3};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The rotation of an arc computed independently: nalgebra's rotation
/// taking `tail` to `head`, applied twice.
fn oracle(arc: &ArrowArc) -> UnitQuaternion<f64> {
    UnitQuaternion::rotation_between(&arc.tail(), &arc.head())
        .map(|q| q * q)
        .unwrap_or_else(UnitQuaternion::identity)
}

fn to_nalgebra(r: &Rotation3) -> UnitQuaternion<f64> {
    if r.is_identity() {
        return UnitQuaternion::identity();
    }
    UnitQuaternion::from_axis_angle(&Unit::new_normalize(r.axis()), r.angle())
}

fn arc_on(rng: &mut ChaCha8Rng, axis: &Vector3<f64>, tol: &Tolerance) -> ArrowArc {
    let axis = axis.normalize();
    let start = axis.cross(&rnd::unit3(rng)).normalize();
    let len: f64 = rng.random_range(-3.0..3.0);
    let head = UnitQuaternion::from_axis_angle(&Unit::new_unchecked(axis), len) * start;
    ArrowArc::new(start, head, tol).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn arc_rotation_matches_oracle(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let arc = rnd::arc(&mut ChaCha8Rng::seed_from_u64(seed), &tol);
        prop_assert!(to_nalgebra(&arc_to_rotation(&arc, &tol)).angle_to(&oracle(&arc)) <= 1e-8);
    }

    #[test]
    fn triangle_rule_matches_quaternion_product(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (rnd::arc(&mut rng, &tol), rnd::arc(&mut rng, &tol));
        let w = triangle_compose(&u, &v, &tol);
        prop_assert!(oracle(&w).angle_to(&(oracle(&v) * oracle(&u))) <= 1e-8);
    }

    #[test]
    fn triangle_rule_same_and_opposite_axes(seed in any::<u64>(), flip in any::<bool>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let axis = rnd::unit3(&mut rng);
        let u = arc_on(&mut rng, &axis, &tol);
        let v = arc_on(&mut rng, &if flip { -axis } else { axis }, &tol);
        let w = triangle_compose(&u, &v, &tol);
        prop_assert!(oracle(&w).angle_to(&(oracle(&v) * oracle(&u))) <= 1e-8);
    }

    #[test]
    fn triangle_rule_perpendicular_axes(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rnd::unit3(&mut rng);
        let b = a.cross(&rnd::unit3(&mut rng));
        let (u, v) = (arc_on(&mut rng, &a, &tol), arc_on(&mut rng, &b, &tol));
        let w = triangle_compose(&u, &v, &tol);
        prop_assert!(oracle(&w).angle_to(&(oracle(&v) * oracle(&u))) <= 1e-8);
    }

    #[test]
    fn slide_is_invariant_and_invertible(seed in any::<u64>(), delta in -7.0f64..7.0) {
        let tol = Tolerance::default();
        let arc = rnd::arc(&mut ChaCha8Rng::seed_from_u64(seed), &tol);
        let moved = slide(&arc, delta, &tol);
        prop_assert!(oracle(&moved).angle_to(&oracle(&arc)) <= 1e-8);
        let back = slide(&moved, -delta, &tol);
        prop_assert!((back.tail() - arc.tail()).norm() <= 1e-12);
        prop_assert!((back.head() - arc.head()).norm() <= 1e-12);
    }

    #[test]
    fn antipode_keeps_the_rotation(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let arc = rnd::arc(&mut ChaCha8Rng::seed_from_u64(seed), &tol);
        let flipped = antipode_head(&arc, &tol).unwrap();
        prop_assert!(oracle(&flipped).angle_to(&oracle(&arc)) <= 1e-8);
        prop_assert_eq!(antipode_head(&flipped, &tol).unwrap(), arc);
    }

    #[test]
    fn rotation_arc_round_trip(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let r = rnd::rotation(&mut ChaCha8Rng::seed_from_u64(seed), &tol);
        let arc = rotation_to_arc(&r, &tol);
        prop_assert!(arc.tail().dot(&r.axis()).abs() <= 1e-9);
        prop_assert!(arc.head().dot(&r.axis()).abs() <= 1e-9);
        prop_assert!(arc_to_rotation(&arc, &tol).distance(&r) <= 1e-8);
    }
}

#[test]
fn worked_example() {
    let tol = Tolerance::default();
    let u = rotation_to_arc(&Rotation3::new(Vector3::z(), PI / 2.0, &tol).unwrap(), &tol);
    let v = rotation_to_arc(&Rotation3::new(Vector3::x(), PI / 2.0, &tol).unwrap(), &tol);
    let r = arc_to_rotation(&triangle_compose(&u, &v, &tol), &tol);
    let axis = Vector3::new(1.0, -1.0, 1.0) / 3f64.sqrt();
    assert!((r.axis() - axis).norm() <= 1e-9);
    assert!((r.angle() - 2.0 * PI / 3.0).abs() <= 1e-9);
    let q = r.to_quaternion();
    for (got, want) in [q.w, q.x, q.y, q.z].iter().zip([0.5, 0.5, -0.5, 0.5]) {
        assert!((got - want).abs() <= 1e-12);
    }
}
