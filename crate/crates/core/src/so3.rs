//! SO(3) presented by reflections in lines through the origin.
//!
//! The reflection in a line is the half-turn about it. Two half-turns
//! compose to a rotation about their common perpendicular by twice the
//! angle between the lines, and three mutually orthogonal half-turns
//! compose to the identity (the polar frame relation). With those, any word
//! shrinks to at most two half-turns.

use std::f64::consts::PI;
use std::ops::Mul;

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::numerics::{canonical_unit, probe_in_plane, rotate_about, wrap_angle, Tolerance};
use crate::pencil3;
use crate::rewrite::{Mirror, Reduced, Rewriter};

/// An unoriented line through the origin, stored by its canonical unit
/// direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisLine {
    direction: Vector3<f64>,
}

pub type LineWord = Vec<AxisLine>;

impl AxisLine {
    pub fn new(direction: Vector3<f64>, tol: &Tolerance) -> Result<Self> {
        Ok(Self {
            direction: canonical_unit(&direction, tol)?,
        })
    }

    pub(crate) fn from_unit(direction: Vector3<f64>, tol: &Tolerance) -> Self {
        Self {
            direction: pencil3::canonical(direction, tol),
        }
    }

    pub fn x() -> Self {
        Self {
            direction: Vector3::x(),
        }
    }

    pub fn y() -> Self {
        Self {
            direction: Vector3::y(),
        }
    }

    pub fn z() -> Self {
        Self {
            direction: Vector3::z(),
        }
    }

    pub fn direction(&self) -> Vector3<f64> {
        self.direction
    }
}

impl Mirror for AxisLine {
    fn coincides(&self, other: &Self, tol: &Tolerance) -> bool {
        pencil3::same_line(&self.direction, &other.direction, tol)
    }

    fn is_pencil_move(l: &Self, m: &Self, l2: &Self, m2: &Self, tol: &Tolerance) -> bool {
        pencil3::is_pencil_move(&l.direction, &m.direction, &l2.direction, &m2.direction, tol)
    }

    fn is_polar_frame(k: &Self, first: &Self, second: &Self, tol: &Tolerance) -> bool {
        let (a, b, c) = (k.direction, first.direction, second.direction);
        a.dot(&b).abs() <= tol.eps_coincide
            && a.dot(&c).abs() <= tol.eps_coincide
            && b.dot(&c).abs() <= tol.eps_coincide
    }
}

/// Unit quaternion `w + xi + yj + zk`; `q` and `-q` are the same rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const IDENTITY: Quaternion = Quaternion {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn vector(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn normalize(&self) -> Self {
        let n = self.norm();
        Self::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    /// The half-turn about a unit direction.
    pub fn half_turn(direction: &Vector3<f64>) -> Self {
        Self::new(0.0, direction.x, direction.y, direction.z)
    }

    pub fn to_matrix(&self) -> Matrix3<f64> {
        let Quaternion { w, x, y, z } = *self;
        Matrix3::new(
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        )
    }

    /// Shepperd's method; `m` must be a rotation matrix.
    pub fn from_matrix(m: &Matrix3<f64>) -> Self {
        let tr = m.trace();
        let q = if tr > 0.0 {
            let s = (tr + 1.0).sqrt() * 2.0;
            Self::new(
                0.25 * s,
                (m[(2, 1)] - m[(1, 2)]) / s,
                (m[(0, 2)] - m[(2, 0)]) / s,
                (m[(1, 0)] - m[(0, 1)]) / s,
            )
        } else if m[(0, 0)] > m[(1, 1)] && m[(0, 0)] > m[(2, 2)] {
            let s = (1.0 + m[(0, 0)] - m[(1, 1)] - m[(2, 2)]).sqrt() * 2.0;
            Self::new(
                (m[(2, 1)] - m[(1, 2)]) / s,
                0.25 * s,
                (m[(0, 1)] + m[(1, 0)]) / s,
                (m[(0, 2)] + m[(2, 0)]) / s,
            )
        } else if m[(1, 1)] > m[(2, 2)] {
            let s = (1.0 + m[(1, 1)] - m[(0, 0)] - m[(2, 2)]).sqrt() * 2.0;
            Self::new(
                (m[(0, 2)] - m[(2, 0)]) / s,
                (m[(0, 1)] + m[(1, 0)]) / s,
                0.25 * s,
                (m[(1, 2)] + m[(2, 1)]) / s,
            )
        } else {
            let s = (1.0 + m[(2, 2)] - m[(0, 0)] - m[(1, 1)]).sqrt() * 2.0;
            Self::new(
                (m[(1, 0)] - m[(0, 1)]) / s,
                (m[(0, 2)] + m[(2, 0)]) / s,
                (m[(1, 2)] + m[(2, 1)]) / s,
                0.25 * s,
            )
        };
        q.normalize()
    }

    /// Angle of the rotation taking `self` to `other`, in `[0, π]`.
    pub fn rotation_distance(&self, other: &Quaternion) -> f64 {
        let d = self.conjugate() * *other;
        2.0 * d.vector().norm().atan2(d.w.abs())
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

/// A rotation by `angle ∈ (-π, π]` about a canonical unit `axis`
/// (right-hand rule). The identity is stored as angle 0 about `+z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3 {
    axis: Vector3<f64>,
    angle: f64,
}

impl Rotation3 {
    pub fn identity() -> Self {
        Self {
            axis: Vector3::z(),
            angle: 0.0,
        }
    }

    /// Canonicalizes `(axis, angle) ~ (-axis, -angle)` and wraps the angle.
    pub fn new(axis: Vector3<f64>, angle: f64, tol: &Tolerance) -> Result<Self> {
        let unit = crate::numerics::unit_or_err(&axis, tol)?;
        let canon = pencil3::canonical(unit, tol);
        let angle = if canon.dot(&unit) < 0.0 { -angle } else { angle };
        let angle = wrap_angle(angle);
        if angle.abs() <= tol.eps_coincide {
            return Ok(Self::identity());
        }
        Ok(Self { axis: canon, angle })
    }

    pub fn axis(&self) -> Vector3<f64> {
        self.axis
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn is_identity(&self) -> bool {
        self.angle == 0.0
    }

    pub fn to_matrix(&self) -> Matrix3<f64> {
        self.to_quaternion().to_matrix()
    }

    pub fn to_quaternion(&self) -> Quaternion {
        let (s, c) = (0.5 * self.angle).sin_cos();
        Quaternion::new(c, s * self.axis.x, s * self.axis.y, s * self.axis.z)
    }

    pub fn from_quaternion(q: &Quaternion, tol: &Tolerance) -> Self {
        let q = q.normalize();
        let q = if q.w < 0.0 { q * -1.0 } else { q };
        let v = q.vector();
        let s = v.norm();
        if s <= f64::EPSILON {
            return Self::identity();
        }
        let angle = 2.0 * s.atan2(q.w);
        Self::new(v / s, angle, tol).unwrap_or_else(|_| Self::identity())
    }

    pub fn from_matrix(m: &Matrix3<f64>, tol: &Tolerance) -> Self {
        Self::from_quaternion(&Quaternion::from_matrix(m), tol)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Rotation3, tol: &Tolerance) -> Rotation3 {
        Self::from_quaternion(&(self.to_quaternion() * first.to_quaternion()), tol)
    }

    /// Angle of `self⁻¹ ∘ other`.
    pub fn distance(&self, other: &Rotation3) -> f64 {
        self.to_quaternion().rotation_distance(&other.to_quaternion())
    }

    pub fn apply(&self, v: &Vector3<f64>) -> Vector3<f64> {
        rotate_about(v, &self.axis, self.angle)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;

    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;

    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

/// `2 d dᵀ − I`: the half-turn about `a`.
pub fn line_reflection_matrix(a: &AxisLine) -> Matrix3<f64> {
    let d = a.direction;
    2.0 * d * d.transpose() - Matrix3::identity()
}

/// Matrix oracle of a word (first mirror acts first).
pub fn line_word_matrix(word: &[AxisLine]) -> Matrix3<f64> {
    word.iter()
        .fold(Matrix3::identity(), |acc, a| line_reflection_matrix(a) * acc)
}

/// Quaternion oracle of a word (first mirror acts first).
pub fn line_word_quaternion(word: &[AxisLine]) -> Quaternion {
    word.iter().fold(Quaternion::IDENTITY, |acc, a| {
        Quaternion::half_turn(&a.direction) * acc
    })
}

/// `R_b ∘ R_a`: the rotation about the common perpendicular by twice the
/// angle from `a` to `b`.
pub fn compose_line_reflections(a: &AxisLine, b: &AxisLine, tol: &Tolerance) -> Rotation3 {
    if a.coincides(b, tol) {
        return Rotation3::identity();
    }
    let cross = a.direction.cross(&b.direction);
    let half = cross.norm().atan2(a.direction.dot(&b.direction));
    Rotation3::new(cross, 2.0 * half, tol).unwrap_or_else(|_| Rotation3::identity())
}

/// Two lines perpendicular to the rotation axis, the second turned from the
/// first by half the rotation angle. The first line is the probe rule's
/// choice: the projection of `e1` (or `e2`) onto the plane normal to the
/// axis.
pub fn rotation_to_line_pair(r: &Rotation3, tol: &Tolerance) -> Result<(AxisLine, AxisLine)> {
    if r.is_identity() {
        return Err(Error::IdentityInput);
    }
    let first = probe_in_plane(&r.axis, tol.eps_coincide);
    let second = rotate_about(&first, &r.axis, 0.5 * r.angle);
    Ok((AxisLine::from_unit(first, tol), AxisLine::from_unit(second, tol)))
}

/// Splits the half-turn about `k` into half-turns about `b` and `c` with
/// `b` in the plane normal to `plane_normal`, and `(k, b, c)` an orthogonal
/// frame, so `R_k = R_c ∘ R_b`. When the plane is `k^⊥` every line in it
/// qualifies and `b` comes from the probe rule.
pub fn split_reflection(k: &AxisLine, plane_normal: &Vector3<f64>, tol: &Tolerance) -> Result<(AxisLine, AxisLine)> {
    let p = canonical_unit(plane_normal, tol)?;
    let raw = p.cross(&k.direction);
    let b = if raw.norm() <= tol.eps_coincide {
        probe_in_plane(&p, tol.eps_coincide)
    } else {
        raw.normalize()
    };
    let c = k.direction.cross(&b).normalize();
    Ok((AxisLine::from_unit(b, tol), AxisLine::from_unit(c, tol)))
}

/// Rewrites `R_m ∘ R_l ∘ R_k` into at most two half-turns.
pub fn reduce_three(k: &AxisLine, l: &AxisLine, m: &AxisLine, tol: &Tolerance) -> Reduced<AxisLine> {
    let mut rw = Rewriter::new(vec![*k, *l, *m]);
    reduce_three_at(&mut rw, 0, tol);
    rw.into()
}

fn reduce_three_at(rw: &mut Rewriter<AxisLine>, at: usize, tol: &Tolerance) {
    if rw.strip_involutions_in(at, 3, tol) > 0 {
        return;
    }
    let w = rw.word();
    let (k, l, m) = (w[at], w[at + 1], w[at + 2]);
    let plane = l.direction.cross(&m.direction);
    let (b, c) = split_reflection(&k, &plane, tol).expect("distinct lines span a plane");
    // R_k = R_b ∘ R_c as well; keep b next to l so b, l, m are coplanar
    rw.polar_frame(at, c, b);
    let b2 = AxisLine::from_unit(pencil3::complete(&l.direction, &b.direction, &m.direction, tol), tol);
    rw.pencil(at + 1, b2, m);
    rw.involution(at + 2);
    rw.strip_involutions_in(at, 2, tol);
}

/// Rewrites any word into at most two half-turns; the identity becomes the
/// empty word.
pub fn normalize_so3(word: &[AxisLine], tol: &Tolerance) -> Reduced<AxisLine> {
    let mut rw = Rewriter::new(word.to_vec());
    rw.strip_involutions(tol);
    while rw.len() >= 3 {
        reduce_three_at(&mut rw, 0, tol);
        rw.strip_involutions(tol);
    }
    rw.into()
}

/// The rotation a word represents, read off its normal form.
pub fn classify_so3(word: &[AxisLine], tol: &Tolerance) -> Rotation3 {
    match normalize_so3(word, tol).word.as_slice() {
        [] => Rotation3::identity(),
        [a] => Rotation3::new(a.direction, PI, tol).unwrap_or_else(|_| Rotation3::identity()),
        [a, b] => compose_line_reflections(a, b, tol),
        _ => unreachable!("normal form has at most two mirrors"),
    }
}

/// Picks the orientation-preserving lift of an isometry of the projective
/// plane: `M` itself when `det M = 1`, else `-M`.
pub fn projective_representative(m: &Matrix3<f64>, tol: &Tolerance) -> Result<Matrix3<f64>> {
    let residual = (m.transpose() * m - Matrix3::identity()).norm();
    if residual.is_nan() || residual > tol.eps_verify {
        return Err(Error::NotOrthogonal { residual });
    }
    Ok(if m.determinant() > 0.0 { *m } else { -m })
}
