//! Pencils of unoriented lines through the origin of R³.
//!
//! Great circles (by their poles) and reflection axes of SO(3) (by their
//! directions) share this geometry: two distinct lines span a plane, the
//! pencil is every line in that plane, and the gap between two members is
//! their angle modulo π measured about the plane's normal.

use nalgebra::Vector3;

use crate::numerics::{sign_factor, wrap_half_angle, Tolerance};

pub(crate) fn canonical(v: Vector3<f64>, tol: &Tolerance) -> Vector3<f64> {
    v * sign_factor(v.as_slice(), tol.eps_coincide)
}

pub(crate) fn same_line(u: &Vector3<f64>, v: &Vector3<f64>, tol: &Tolerance) -> bool {
    u.cross(v).norm() <= tol.eps_coincide
}

/// Unit normal of the plane spanned by two distinct lines.
pub(crate) fn pencil_axis(u: &Vector3<f64>, v: &Vector3<f64>) -> Vector3<f64> {
    u.cross(v).normalize()
}

/// Signed gap from `u` to `v` about `axis`, modulo π.
fn gap(u: &Vector3<f64>, v: &Vector3<f64>, axis: &Vector3<f64>) -> f64 {
    wrap_half_angle(u.cross(v).dot(axis).atan2(u.dot(v)))
}

/// `m2` in the plane of `l` and `m` with gap(l2, m2) = gap(l, m). `l2` is
/// assumed to lie in that plane.
pub(crate) fn complete(
    l: &Vector3<f64>,
    m: &Vector3<f64>,
    l2: &Vector3<f64>,
    tol: &Tolerance,
) -> Vector3<f64> {
    if same_line(l, m, tol) {
        return *l2;
    }
    let axis = pencil_axis(l, m);
    let theta = gap(l, m, &axis);
    // rotate l2 about the pencil axis by theta; l2 ⊥ axis
    let (s, c) = theta.sin_cos();
    let rotated = l2 * c + axis.cross(l2) * s;
    canonical(rotated.normalize(), tol)
}

/// Whether `v` lies in the pencil with normal `axis`.
pub(crate) fn in_pencil(axis: &Vector3<f64>, v: &Vector3<f64>, tol: &Tolerance) -> bool {
    axis.dot(v).abs() <= tol.eps_coincide
}

/// The pencil normal shared by all `lines`: `None` if they span more than
/// a plane, `Some(None)` if they are all the same line.
pub(crate) fn common_axis(lines: &[&Vector3<f64>], tol: &Tolerance) -> Option<Option<Vector3<f64>>> {
    let first = lines[0];
    let Some(other) = lines.iter().find(|v| !same_line(first, v, tol)) else {
        return Some(None);
    };
    let axis = pencil_axis(first, other);
    lines
        .iter()
        .all(|v| in_pencil(&axis, v, tol))
        .then_some(Some(axis))
}

pub(crate) fn is_pencil_move(
    l: &Vector3<f64>,
    m: &Vector3<f64>,
    l2: &Vector3<f64>,
    m2: &Vector3<f64>,
    tol: &Tolerance,
) -> bool {
    match common_axis(&[l, m, l2, m2], tol) {
        None => false,
        Some(None) => true,
        Some(Some(axis)) => wrap_half_angle(gap(l, m, &axis) - gap(l2, m2, &axis)).abs() <= tol.eps_coincide,
    }
}
