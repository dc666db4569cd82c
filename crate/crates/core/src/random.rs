//! Seeded random mirrors, words and orthogonal matrices for batch
//! verification.
//!
//! Directions are normalized Gaussian vectors (uniform on the sphere) and
//! line offsets are uniform in `[-10, 10]`.

use nalgebra::{DMatrix, DVector, Vector2, Vector3};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::arrowarc::ArrowArc;
use crate::euclid2::Line2;
use crate::numerics::Tolerance;
use crate::orthon::{word_matrix_n, Hyperplane};
use crate::so3::{AxisLine, Rotation3};
use crate::sphere::GreatCircle;

pub const OFFSET_RANGE: f64 = 10.0;

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

/// Uniform on the unit sphere of `R^n`.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DVector<f64> {
    loop {
        let v = DVector::from_fn(n, |_, _| gaussian(rng));
        let norm = v.norm();
        if norm > 1e-6 {
            return v / norm;
        }
    }
}

pub fn unit3<R: Rng + ?Sized>(rng: &mut R) -> Vector3<f64> {
    let v = unit_vector(rng, 3);
    Vector3::new(v[0], v[1], v[2])
}

pub fn line2<R: Rng + ?Sized>(rng: &mut R, tol: &Tolerance) -> Line2 {
    let v = unit_vector(rng, 2);
    let offset = rng.random_range(-OFFSET_RANGE..=OFFSET_RANGE);
    Line2::new(Vector2::new(v[0], v[1]), offset, tol).expect("unit normal")
}

pub fn great_circle<R: Rng + ?Sized>(rng: &mut R, tol: &Tolerance) -> GreatCircle {
    GreatCircle::new(unit3(rng), tol).expect("unit pole")
}

pub fn axis_line<R: Rng + ?Sized>(rng: &mut R, tol: &Tolerance) -> AxisLine {
    AxisLine::new(unit3(rng), tol).expect("unit direction")
}

pub fn hyperplane<R: Rng + ?Sized>(rng: &mut R, n: usize, tol: &Tolerance) -> Hyperplane {
    Hyperplane::new(unit_vector(rng, n), tol).expect("unit normal")
}

/// `len` mirrors drawn with `mirror`.
pub fn word<R, M, F>(rng: &mut R, len: usize, mut mirror: F) -> Vec<M>
where
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> M,
{
    (0..len).map(|_| mirror(rng)).collect()
}

/// Uniform rotation (from a uniform unit quaternion).
pub fn rotation<R: Rng + ?Sized>(rng: &mut R, tol: &Tolerance) -> Rotation3 {
    let q = unit_vector(rng, 4);
    let q = crate::so3::Quaternion::new(q[0], q[1], q[2], q[3]);
    Rotation3::from_quaternion(&q, tol)
}

/// Arc with independent uniform endpoints.
pub fn arc<R: Rng + ?Sized>(rng: &mut R, tol: &Tolerance) -> ArrowArc {
    loop {
        if let Ok(a) = ArrowArc::new(unit3(rng), unit3(rng), tol) {
            return a;
        }
    }
}

/// Product of `k` random Householder reflections in `R^n`.
pub fn householder_product<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, tol: &Tolerance) -> DMatrix<f64> {
    let mirrors: Vec<Hyperplane> = (0..k).map(|_| hyperplane(rng, n, tol)).collect();
    word_matrix_n(n, &mirrors)
}

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
/// signs of `R`'s diagonal moved into `Q`.
pub fn haar_orthogonal<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| gaussian(rng));
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}
