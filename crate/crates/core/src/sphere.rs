//! Isometries of the 2-sphere (the group O(3)) as words of reflections in
//! great circles.
//!
//! Any two great circles meet, so four reflections always collapse by the
//! same move: turn the first pair about its intersection and the second
//! pair about its own until the inner circles both become the circle
//! through the two intersection points, then cancel them.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::numerics::{canonical_unit, wrap_angle, Tolerance};
use crate::pencil3;
use crate::rewrite::{Mirror, Reduced, Rewriter};
use crate::so3::Rotation3;

/// The great circle `{x ∈ S² : pole · x = 0}`, canonical pole sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreatCircle {
    pole: Vector3<f64>,
}

pub type SphereWord = Vec<GreatCircle>;

impl GreatCircle {
    pub fn new(pole: Vector3<f64>, tol: &Tolerance) -> Result<Self> {
        Ok(Self {
            pole: canonical_unit(&pole, tol)?,
        })
    }

    fn from_unit(pole: Vector3<f64>, tol: &Tolerance) -> Self {
        Self {
            pole: pencil3::canonical(pole, tol),
        }
    }

    pub fn pole(&self) -> Vector3<f64> {
        self.pole
    }

    /// `I − 2 p pᵀ`.
    pub fn reflection_matrix(&self) -> Matrix3<f64> {
        Matrix3::identity() - 2.0 * self.pole * self.pole.transpose()
    }
}

impl Mirror for GreatCircle {
    fn coincides(&self, other: &Self, tol: &Tolerance) -> bool {
        pencil3::same_line(&self.pole, &other.pole, tol)
    }

    fn is_pencil_move(l: &Self, m: &Self, l2: &Self, m2: &Self, tol: &Tolerance) -> bool {
        pencil3::is_pencil_move(&l.pole, &m.pole, &l2.pole, &m2.pole, tol)
    }
}

/// Classification of an isometry of S².
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassS2 {
    Identity,
    Reflection { circle: GreatCircle },
    /// Nonzero angle in `(-π, π]` about a canonical axis.
    Rotation { axis: Vector3<f64>, angle: f64 },
    /// Rotation by `angle` about `axis` followed by the reflection in the
    /// great circle polar to `axis`. The antipodal map is the glide with
    /// angle π (its axis is reported as `+z`).
    Glide { axis: Vector3<f64>, angle: f64 },
}

impl ClassS2 {
    pub fn name(&self) -> &'static str {
        match self {
            ClassS2::Identity => "identity",
            ClassS2::Reflection { .. } => "reflection",
            ClassS2::Rotation { .. } => "rotation",
            ClassS2::Glide { .. } => "glide",
        }
    }

    /// The 3×3 matrix of the classified isometry.
    pub fn to_matrix(&self, tol: &Tolerance) -> Matrix3<f64> {
        match self {
            ClassS2::Identity => Matrix3::identity(),
            ClassS2::Reflection { circle } => circle.reflection_matrix(),
            ClassS2::Rotation { axis, angle } => Rotation3::new(*axis, *angle, tol)
                .map(|r| r.to_matrix())
                .unwrap_or_else(|_| Matrix3::identity()),
            ClassS2::Glide { axis, angle } => {
                let rot = Rotation3::new(*axis, *angle, tol)
                    .map(|r| r.to_matrix())
                    .unwrap_or_else(|_| Matrix3::identity());
                (Matrix3::identity() - 2.0 * axis * axis.transpose()) * rot
            }
        }
    }
}

pub fn reflect_sphere(c: &GreatCircle, p: &Vector3<f64>) -> Vector3<f64> {
    p - 2.0 * c.pole.dot(p) * c.pole
}

/// Matrix oracle of a word (first mirror acts first).
pub fn sphere_word_matrix(word: &[GreatCircle]) -> Matrix3<f64> {
    word.iter()
        .fold(Matrix3::identity(), |acc, c| c.reflection_matrix() * acc)
}

/// Classifies `R_m ∘ R_l`.
pub fn compose_two_sphere(l: &GreatCircle, m: &GreatCircle, tol: &Tolerance) -> ClassS2 {
    if l.coincides(m, tol) {
        return ClassS2::Identity;
    }
    let cross = l.pole.cross(&m.pole);
    let half = cross.norm().atan2(l.pole.dot(&m.pole));
    match Rotation3::new(cross, 2.0 * half, tol) {
        Ok(r) if !r.is_identity() => ClassS2::Rotation {
            axis: r.axis(),
            angle: r.angle(),
        },
        _ => ClassS2::Identity,
    }
}

/// `m2` through the intersection pair of `l` and `m` with the same angles,
/// so that `R_m ∘ R_l = R_m2 ∘ R_l2`.
pub fn pencil_completion_sphere(
    l: &GreatCircle,
    m: &GreatCircle,
    l2: &GreatCircle,
    tol: &Tolerance,
) -> Result<GreatCircle> {
    if pencil3::common_axis(&[&l.pole, &m.pole, &l2.pole], tol).is_none() {
        return Err(Error::NotConcurrent);
    }
    Ok(GreatCircle::from_unit(
        pencil3::complete(&l.pole, &m.pole, &l2.pole, tol),
        tol,
    ))
}

fn complete(l: &GreatCircle, m: &GreatCircle, l2: &GreatCircle, tol: &Tolerance) -> GreatCircle {
    GreatCircle::from_unit(pencil3::complete(&l.pole, &m.pole, &l2.pole, tol), tol)
}

/// Rewrites the four-reflection word `[k, l, m, n]` into at most two.
pub fn reduce_four_sphere(word: &[GreatCircle; 4], tol: &Tolerance) -> Reduced<GreatCircle> {
    let mut rw = Rewriter::new(word.to_vec());
    reduce_four_at(&mut rw, 0, tol);
    rw.into()
}

fn reduce_four_at(rw: &mut Rewriter<GreatCircle>, at: usize, tol: &Tolerance) {
    if rw.strip_involutions_in(at, 4, tol) > 0 {
        return;
    }
    let w = rw.word();
    let (k, l, m, n) = (w[at], w[at + 1], w[at + 2], w[at + 3]);
    // intersection pairs, as the axes of the two pencils
    let p = pencil3::pencil_axis(&k.pole, &l.pole);
    let q = pencil3::pencil_axis(&m.pole, &n.pole);
    if pencil3::same_line(&p, &q, tol) {
        rw.pencil(at + 2, l, complete(&m, &n, &l, tol));
    } else {
        let joint = GreatCircle::from_unit(p.cross(&q).normalize(), tol);
        rw.pencil(at, complete(&l, &k, &joint, tol), joint);
        rw.pencil(at + 2, joint, complete(&m, &n, &joint, tol));
    }
    rw.involution(at + 1);
    rw.strip_involutions_in(at, 2, tol);
}

/// Rewrites any word into at most three reflections (two for even length).
pub fn normalize_sphere(word: &[GreatCircle], tol: &Tolerance) -> Reduced<GreatCircle> {
    let mut rw = Rewriter::new(word.to_vec());
    rw.strip_involutions(tol);
    while rw.len() >= 4 {
        reduce_four_at(&mut rw, 0, tol);
        rw.strip_involutions(tol);
    }
    rw.into()
}

/// Classifies an orientation-reversing orthogonal matrix: `-M` is a
/// rotation by `φ` about `a`, and `M` is the glide about `a` by `φ − π`.
fn classify_reversing(m: &Matrix3<f64>, tol: &Tolerance) -> ClassS2 {
    let rot = Rotation3::from_matrix(&(-m), tol);
    if rot.is_identity() {
        return ClassS2::Glide {
            axis: Vector3::z(),
            angle: PI,
        };
    }
    let glide = wrap_angle(rot.angle() - PI);
    if glide.abs() <= tol.eps_coincide {
        ClassS2::Reflection {
            circle: GreatCircle::from_unit(rot.axis(), tol),
        }
    } else {
        ClassS2::Glide {
            axis: rot.axis(),
            angle: glide,
        }
    }
}

pub fn classify_sphere(word: &[GreatCircle], tol: &Tolerance) -> ClassS2 {
    let reduced = normalize_sphere(word, tol).word;
    match reduced.as_slice() {
        [] => ClassS2::Identity,
        [c] => ClassS2::Reflection { circle: *c },
        [l, m] => compose_two_sphere(l, m, tol),
        _ => classify_reversing(&sphere_word_matrix(&reduced), tol),
    }
}
