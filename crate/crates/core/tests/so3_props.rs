use isoword::random as rnd;
use isoword::so3::{
    classify_so3, line_word_matrix, normalize_so3, projective_representative, reduce_three, rotation_to_line_pair,
    AxisLine, Quaternion, Rotation3,
};
use isoword::Tolerance;
use nalgebra::{Matrix3, Quaternion as NQuaternion, Unit, UnitQuaternion, Vector3};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Half-turn about `a` as a nalgebra unit quaternion.
fn half_turn(a: &AxisLine) -> UnitQuaternion<f64> {
    UnitQuaternion::from_axis_angle(&Unit::new_unchecked(a.direction()), std::f64::consts::PI)
}

fn oracle(word: &[AxisLine]) -> UnitQuaternion<f64> {
    word.iter().fold(UnitQuaternion::identity(), |acc, a| half_turn(a) * acc)
}

fn to_nalgebra(r: &Rotation3) -> UnitQuaternion<f64> {
    let q = r.to_quaternion();
    UnitQuaternion::from_quaternion(NQuaternion::new(q.w, q.x, q.y, q.z))
}

fn words(max_len: usize) -> impl Strategy<Value = Vec<AxisLine>> {
    (any::<u64>(), 0..=max_len).prop_map(|(seed, len)| {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rnd::word(&mut rng, len, |r| rnd::axis_line(r, &tol))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn normalize_is_oracle_equal_and_short(word in words(9)) {
        let tol = Tolerance::default();
        let r = normalize_so3(&word, &tol);
        prop_assert!(r.word.len() <= 2);
        prop_assert!(oracle(&word).angle_to(&oracle(&r.word)) <= 1e-8);
        for state in r.trace.states(&word, &tol).unwrap() {
            prop_assert!(oracle(&word).angle_to(&oracle(&state)) <= 1e-8);
            prop_assert!((line_word_matrix(&state).determinant() - 1.0).abs() <= 1e-8);
        }
    }

    #[test]
    fn classify_matches_nalgebra(word in words(9)) {
        let tol = Tolerance::default();
        let r = classify_so3(&word, &tol);
        prop_assert!(to_nalgebra(&r).angle_to(&oracle(&word)) <= 1e-8);
        prop_assert!(r.angle() > -std::f64::consts::PI && r.angle() <= std::f64::consts::PI);
    }

    #[test]
    fn reduce_three_gives_two(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = rnd::word(&mut rng, 3, |r| rnd::axis_line(r, &tol));
        let r = reduce_three(&w[0], &w[1], &w[2], &tol);
        prop_assert!(r.word.len() <= 2);
        prop_assert!(oracle(&w).angle_to(&oracle(&r.word)) <= 1e-8);
        let moves: Vec<_> = r.trace.moves().iter().map(|m| m.name()).collect();
        prop_assert_eq!(&moves[..3], &["polar_frame", "pencil", "involution"]);
    }

    #[test]
    fn polar_frame_identity(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rnd::unit3(&mut rng);
        let b = a.cross(&rnd::unit3(&mut rng)).normalize();
        let c = a.cross(&b);
        let frame: Vec<AxisLine> = [a, b, c].iter().map(|d| AxisLine::new(*d, &tol).unwrap()).collect();
        prop_assert!((line_word_matrix(&frame) - Matrix3::identity()).norm() <= 1e-12);
    }

    #[test]
    fn line_pair_round_trip(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = rnd::rotation(&mut rng, &tol);
        let (a, b) = rotation_to_line_pair(&r, &tol).unwrap();
        prop_assert!(a.direction().dot(&r.axis()).abs() <= 1e-12);
        prop_assert!(oracle(&[a, b]).angle_to(&to_nalgebra(&r)) <= 1e-8);
    }

    #[test]
    fn hand_written_quaternion_agrees(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (r, s) = (rnd::rotation(&mut rng, &tol), rnd::rotation(&mut rng, &tol));
        let mine = r.after(&s, &tol);
        prop_assert!(to_nalgebra(&mine).angle_to(&(to_nalgebra(&r) * to_nalgebra(&s))) <= 1e-12);
        let m = mine.to_matrix();
        prop_assert!((m - to_nalgebra(&mine).to_rotation_matrix().into_inner()).norm() <= 1e-12);
        let back = Rotation3::from_quaternion(&Quaternion::from_matrix(&m), &tol);
        prop_assert!(back.distance(&mine) <= 1e-8);
    }

    /// ±M classes of O(3) map isomorphically onto SO(3).
    #[test]
    fn projective_representative_is_a_homomorphism(seed in any::<u64>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rnd::haar_orthogonal(&mut rng, 3);
        let b = rnd::haar_orthogonal(&mut rng, 3);
        let a = Matrix3::from_iterator(a.iter().copied());
        let b = Matrix3::from_iterator(b.iter().copied());
        let pa = projective_representative(&a, &tol).unwrap();
        let pb = projective_representative(&b, &tol).unwrap();
        let pab = projective_representative(&(a * b), &tol).unwrap();
        prop_assert!((pab - projective_representative(&(pa * pb), &tol).unwrap()).norm() <= 1e-8);
        prop_assert!((pa.determinant() - 1.0).abs() <= 1e-8);
        prop_assert!((projective_representative(&pa, &tol).unwrap() - pa).norm() == 0.0);
    }
}

#[test]
fn representative_examples() {
    let tol = Tolerance::default();
    assert_eq!(projective_representative(&Matrix3::identity(), &tol).unwrap(), Matrix3::identity());
    assert_eq!(projective_representative(&-Matrix3::identity(), &tol).unwrap(), Matrix3::identity());
    let z = Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0));
    assert_eq!(
        projective_representative(&z, &tol).unwrap(),
        Matrix3::from_diagonal(&Vector3::new(-1.0, -1.0, 1.0))
    );
}
