//! Tolerance policy, sign conventions and small angle utilities shared by
//! every geometry module.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{allocator::Allocator, DefaultAllocator, Dim, OVector, Vector3};

use crate::error::{Error, Result};

/// Two-tier tolerance. `eps_coincide` decides geometric predicates (parallel?
/// same mirror?), `eps_verify` bounds oracle residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps_coincide: f64,
    pub eps_verify: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_coincide: 1e-9,
            eps_verify: 1e-8,
        }
    }
}

impl Tolerance {
    pub fn new(eps_coincide: f64, eps_verify: f64) -> Result<Self> {
        if !(eps_coincide > 0.0 && eps_coincide < eps_verify && eps_verify < 1e-3) {
            return Err(Error::DegenerateInput(
                "tolerances must satisfy 0 < eps_coincide < eps_verify < 1e-3",
            ));
        }
        Ok(Self {
            eps_coincide,
            eps_verify,
        })
    }

    /// Same predicate tolerance, different residual bound.
    pub fn with_verify(self, eps_verify: f64) -> Result<Self> {
        Self::new(self.eps_coincide, eps_verify)
    }
}

/// `+1.0` or `-1.0`: the factor that makes the first component whose
/// magnitude exceeds `eps` positive. All-small vectors fall back to the
/// largest component.
pub fn sign_factor(components: &[f64], eps: f64) -> f64 {
    let lead = components
        .iter()
        .copied()
        .find(|c| c.abs() > eps)
        .or_else(|| {
            components
                .iter()
                .copied()
                .max_by(|a, b| a.abs().total_cmp(&b.abs()))
        })
        .unwrap_or(0.0);
    if lead < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// Normalizes `v` and fixes its sign so the first significant component is
/// positive. Vectors already of unit length (to a few ulps) are not
/// rescaled, which makes the map idempotent bit for bit.
pub fn canonical_unit<D>(v: &OVector<f64, D>, tol: &Tolerance) -> Result<OVector<f64, D>>
where
    D: Dim,
    DefaultAllocator: Allocator<D>,
{
    let unit = unit_or_err(v, tol)?;
    let s = sign_factor(unit.as_slice(), tol.eps_coincide);
    Ok(if s < 0.0 { -unit } else { unit })
}

/// Normalizes without touching the sign.
pub fn unit_or_err<D>(v: &OVector<f64, D>, tol: &Tolerance) -> Result<OVector<f64, D>>
where
    D: Dim,
    DefaultAllocator: Allocator<D>,
{
    let norm = v.norm();
    if !norm.is_finite() {
        return Err(Error::DegenerateInput("non-finite vector"));
    }
    if norm <= tol.eps_coincide {
        return Err(Error::DegenerateInput("zero vector"));
    }
    if (norm - 1.0).abs() <= 4.0 * f64::EPSILON {
        Ok(v.clone())
    } else {
        Ok(v / norm)
    }
}

/// Unsigned angle in `[0, π/2]` between two unoriented lines with unit
/// directions `u` and `v`.
pub fn angle_between_directions<D>(u: &OVector<f64, D>, v: &OVector<f64, D>) -> f64
where
    D: Dim,
    DefaultAllocator: Allocator<D>,
{
    let dot = u.dot(v);
    let perp = (v - u * dot).norm();
    perp.atan2(dot.abs()).min(FRAC_PI_2)
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    t
}

/// Wraps an angle into `(-π/2, π/2]`: angles between unoriented lines.
pub fn wrap_half_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(PI);
    if t > FRAC_PI_2 {
        t -= PI;
    }
    t
}

/// Signed angle from `u` to `v` measured about the oriented `axis`, in
/// `(-π, π]`. Both vectors are assumed perpendicular to `axis`.
pub fn signed_angle_about(u: &Vector3<f64>, v: &Vector3<f64>, axis: &Vector3<f64>) -> f64 {
    u.cross(v).dot(axis).atan2(u.dot(v))
}

/// Rodrigues rotation of `v` about the unit `axis` by `theta`.
pub fn rotate_about(v: &Vector3<f64>, axis: &Vector3<f64>, theta: f64) -> Vector3<f64> {
    let (s, c) = theta.sin_cos();
    v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c))
}

/// First of `e1`, `e2`, `e3` whose projection onto the plane normal to
/// `normal` is longer than `eps`, projected and normalized. The projection
/// is applied twice so the result is orthogonal to working precision even
/// for a nearly parallel probe.
pub fn probe_in_plane(normal: &Vector3<f64>, eps: f64) -> Vector3<f64> {
    let probes = [Vector3::x(), Vector3::y(), Vector3::z()];
    let mut best = probes[0] - normal * normal.dot(&probes[0]);
    for p in probes {
        let proj = p - normal * normal.dot(&p);
        if proj.norm() > eps {
            best = proj;
            break;
        }
    }
    let once = best.normalize();
    (once - normal * normal.dot(&once)).normalize()
}
