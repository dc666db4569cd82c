use isoword::orthon::{
    decompose, householder, normalize_n, pencil_completion_n, reduce_n_plus_one, spectral_split, symmetric_spectrum,
    Hyperplane, OrthogonalMatrixN, WordN,
};
use isoword::random as rnd;
use isoword::Tolerance;
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Product of explicit Householder matrices, first mirror rightmost.
fn oracle(n: usize, word: &[Hyperplane]) -> DMatrix<f64> {
    let mut m = DMatrix::identity(n, n);
    for h in word {
        let v = h.normal();
        m = (DMatrix::identity(n, n) - v * v.transpose() * 2.0) * m;
    }
    m
}

fn random_word(seed: u64, n: usize, len: usize) -> WordN {
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    WordN::new(n, rnd::word(&mut rng, len, |r| rnd::hyperplane(r, n, &tol))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn householder_is_a_symmetric_involution(seed in any::<u64>(), n in 2usize..=8) {
        let tol = Tolerance::default();
        let h = householder(&rnd::hyperplane(&mut ChaCha8Rng::seed_from_u64(seed), n, &tol));
        prop_assert!((h.transpose() - &h).norm() <= 1e-14);
        prop_assert!((&h * &h - DMatrix::identity(n, n)).norm() <= 1e-8);
        prop_assert!((h.determinant() + 1.0).abs() <= 1e-8);
    }

    #[test]
    fn decompose_bound_and_reconstruction(seed in any::<u64>(), n in 2usize..=8, haar in any::<bool>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = if haar { rnd::haar_orthogonal(&mut rng, n) } else { rnd::householder_product(&mut rng, n, n, &tol) };
        let w = decompose(&OrthogonalMatrixN::new(m.clone(), &tol).unwrap(), &tol).unwrap();
        prop_assert!(w.len() <= n);
        prop_assert!((oracle(n, w.mirrors()) - &m).norm() <= 1e-8 * (n as f64).sqrt());
        prop_assert_eq!(w.len() % 2 == 1, m.determinant() < 0.0);
    }

    #[test]
    fn spectral_split_reassembles(seed in any::<u64>(), n in 2usize..=8) {
        let tol = Tolerance::default();
        let m = rnd::haar_orthogonal(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let split = spectral_split(&OrthogonalMatrixN::new(m.clone(), &tol).unwrap(), &tol).unwrap();
        prop_assert!((split.reassemble() - &m).norm() <= 1e-8 * (n as f64).sqrt());
        // block bases are orthonormal as a whole
        let mut basis: Vec<DVector<f64>> = Vec::new();
        for b in &split.blocks {
            match b {
                isoword::orthon::Block::Fixed(f) => basis.extend(f.iter().cloned()),
                isoword::orthon::Block::NegatedLine(v) => basis.push(v.clone()),
                isoword::orthon::Block::RotationPlane { u, v, angle } => {
                    prop_assert!(*angle > 0.0 && *angle <= std::f64::consts::PI);
                    basis.extend([u.clone(), v.clone()]);
                }
            }
        }
        prop_assert_eq!(basis.len(), n);
        let q = DMatrix::from_columns(&basis);
        prop_assert!((q.transpose() * q - DMatrix::identity(n, n)).norm() <= 1e-8);
        let expected = symmetric_spectrum(&m);
        for (a, b) in expected.iter().zip(split.cosine_spectrum()) {
            prop_assert!((a - b).abs() <= 1e-8);
        }
    }

    #[test]
    fn single_mirror_splits_into_one_negated_line(seed in any::<u64>(), n in 2usize..=12) {
        let tol = Tolerance::default();
        let h = householder(&rnd::hyperplane(&mut ChaCha8Rng::seed_from_u64(seed), n, &tol));
        let split = spectral_split(&OrthogonalMatrixN::new(h.clone(), &tol).unwrap(), &tol).unwrap();
        prop_assert_eq!((split.fixed_dim(), split.negated_count()), (n - 1, 1));
        prop_assert!((split.reassemble() - h).norm() <= 1e-8);
    }

    #[test]
    fn reduce_drops_two_with_valid_steps(seed in any::<u64>(), n in 2usize..=6) {
        let tol = Tolerance::default();
        let w = random_word(seed, n, n + 1);
        let r = reduce_n_plus_one(&w, &tol).unwrap();
        prop_assert!(r.word.len() < n);
        prop_assert!((oracle(n, &r.word) - oracle(n, w.mirrors())).norm() <= 1e-8);
        let states = r.trace.states(w.mirrors(), &tol).unwrap();
        for s in &states {
            prop_assert!(s.len() <= n + 1);
            prop_assert!((oracle(n, s) - oracle(n, w.mirrors())).norm() <= 1e-8);
        }
        prop_assert!(r.trace.moves().iter().all(|m| matches!(m.name(), "pencil" | "involution")));
    }

    #[test]
    fn normalize_keeps_parity(seed in any::<u64>(), n in 2usize..=6, len in 0usize..=16) {
        let tol = Tolerance::default();
        let w = random_word(seed, n, len);
        let r = normalize_n(&w, &tol);
        prop_assert!(r.word.len() <= n);
        prop_assert_eq!(r.word.len() % 2, len % 2);
        prop_assert!((oracle(n, &r.word) - oracle(n, w.mirrors())).norm() <= 1e-8);
        prop_assert_eq!(&r.trace.replay(w.mirrors(), &tol).unwrap(), &r.word);
    }

    #[test]
    fn completion_preserves_product(seed in any::<u64>(), n in 2usize..=8, t in -3.0f64..3.0) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (l, m) = (rnd::hyperplane(&mut rng, n, &tol), rnd::hyperplane(&mut rng, n, &tol));
        let e1 = l.normal().clone();
        let e2 = (m.normal() - &e1 * e1.dot(m.normal())).normalize();
        let l2 = Hyperplane::new(&e1 * t.cos() + &e2 * t.sin(), &tol).unwrap();
        let m2 = pencil_completion_n(&l, &m, &l2, &tol).unwrap();
        prop_assert!((oracle(n, &[l, m]) - oracle(n, &[l2, m2])).norm() <= 1e-8);
    }
}
