//! Rotations of R³ as directed arcs on the unit sphere.
//!
//! The arc from `tail` to `head` stands for `R_b ∘ R_a`, where `a` and `b`
//! are the lines through the endpoints: the rotation about the arc's polar
//! axis by twice its length. Sliding an arc along its own great circle
//! leaves the rotation unchanged, so two arcs compose by sliding both to a
//! shared endpoint on the intersection of their circles.

use std::fmt::Write as _;

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::numerics::{canonical_unit, probe_in_plane, rotate_about, signed_angle_about, unit_or_err, Tolerance};
use crate::so3::Rotation3;

/// Directed arc between two non-antipodal unit vectors. `tail == head` is
/// the identity arc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrowArc {
    tail: Vector3<f64>,
    head: Vector3<f64>,
}

impl ArrowArc {
    /// Normalizes both endpoints; antipodal endpoints are rejected.
    pub fn new(tail: Vector3<f64>, head: Vector3<f64>, tol: &Tolerance) -> Result<Self> {
        let tail = unit_or_err(&tail, tol)?;
        let head = unit_or_err(&head, tol)?;
        if (tail + head).norm() <= tol.eps_coincide {
            return Err(Error::DegenerateArc);
        }
        Ok(Self { tail, head })
    }

    pub fn identity_at(point: Vector3<f64>, tol: &Tolerance) -> Result<Self> {
        let p = unit_or_err(&point, tol)?;
        Ok(Self { tail: p, head: p })
    }

    pub fn tail(&self) -> Vector3<f64> {
        self.tail
    }

    pub fn head(&self) -> Vector3<f64> {
        self.head
    }

    pub fn is_identity(&self, tol: &Tolerance) -> bool {
        self.tail.cross(&self.head).norm() <= tol.eps_coincide && self.tail.dot(&self.head) > 0.0
    }

    /// Arc length in `[0, π)`.
    pub fn length(&self) -> f64 {
        self.tail.cross(&self.head).norm().atan2(self.tail.dot(&self.head))
    }

    /// Unit normal of the arc's circle, oriented so the arc runs
    /// counterclockwise about it. `None` for the identity arc.
    fn axis(&self, tol: &Tolerance) -> Option<Vector3<f64>> {
        let c = self.tail.cross(&self.head);
        (c.norm() > tol.eps_coincide).then(|| c.normalize())
    }
}

pub fn arc_to_rotation(arc: &ArrowArc, tol: &Tolerance) -> Rotation3 {
    let cross = arc.tail.cross(&arc.head);
    if cross.norm() <= tol.eps_coincide {
        return Rotation3::identity();
    }
    Rotation3::new(cross, 2.0 * arc.length(), tol).unwrap_or_else(|_| Rotation3::identity())
}

/// The arc on the circle polar to the axis, starting at the probe point of
/// that circle. The identity maps to the identity arc at `(1,0,0)`.
pub fn rotation_to_arc(r: &Rotation3, tol: &Tolerance) -> ArrowArc {
    if r.is_identity() {
        return ArrowArc {
            tail: Vector3::x(),
            head: Vector3::x(),
        };
    }
    let tail = probe_in_plane(&r.axis(), tol.eps_coincide);
    let head = rotate_about(&tail, &r.axis(), 0.5 * r.angle());
    ArrowArc { tail, head }
}

/// Glides the arc by `delta` along its great circle.
pub fn slide(arc: &ArrowArc, delta: f64, tol: &Tolerance) -> ArrowArc {
    match arc.axis(tol) {
        None => *arc,
        Some(axis) => ArrowArc {
            tail: rotate_about(&arc.tail, &axis, delta),
            head: rotate_about(&arc.head, &axis, delta),
        },
    }
}

/// Replaces the head by its antipode: same line, same rotation.
pub fn antipode_head(arc: &ArrowArc, tol: &Tolerance) -> Result<ArrowArc> {
    if (arc.tail - arc.head).norm() <= tol.eps_coincide {
        return Err(Error::DegenerateArc);
    }
    Ok(ArrowArc {
        tail: arc.tail,
        head: -arc.head,
    })
}

/// Slides `arc` along its circle (normal `axis`) so that `point` (assumed
/// on that circle) becomes its head, or its tail.
fn slide_head_to(arc: &ArrowArc, axis: &Vector3<f64>, point: &Vector3<f64>) -> ArrowArc {
    let delta = signed_angle_about(&arc.head, point, axis);
    ArrowArc {
        tail: rotate_about(&arc.tail, axis, delta),
        head: rotate_about(&arc.head, axis, delta),
    }
}

fn slide_tail_to(arc: &ArrowArc, axis: &Vector3<f64>, point: &Vector3<f64>) -> ArrowArc {
    let delta = signed_angle_about(&arc.tail, point, axis);
    ArrowArc {
        tail: rotate_about(&arc.tail, axis, delta),
        head: rotate_about(&arc.head, axis, delta),
    }
}

/// An arc for `V ∘ U` where `u` encodes `U` and `v` encodes `V`.
pub fn triangle_compose(u: &ArrowArc, v: &ArrowArc, tol: &Tolerance) -> ArrowArc {
    let (Some(a_u), Some(a_v)) = (u.axis(tol), v.axis(tol)) else {
        return if u.axis(tol).is_none() { *v } else { *u };
    };
    let joint = a_u.cross(&a_v);
    let (tail, head) = if joint.norm() <= tol.eps_coincide {
        (u.tail, slide_tail_to(v, &a_v, &u.head).head)
    } else {
        let p = canonical_unit(&joint, tol).unwrap_or_else(|_| joint.normalize());
        (slide_head_to(u, &a_u, &p).tail, slide_tail_to(v, &a_v, &p).head)
    };
    if (tail + head).norm() <= tol.eps_coincide {
        return ArrowArc { tail, head: tail };
    }
    ArrowArc { tail, head }
}

/// Orthographic view of `arcs` on the unit sphere as a standalone SVG
/// document. `view` points from the sphere toward the viewer.
pub fn arcs_to_svg(arcs: &[ArrowArc], view: &Vector3<f64>, size: u32) -> String {
    let w = view.normalize();
    let up = if w.cross(&Vector3::z()).norm() > 1e-6 {
        Vector3::z()
    } else {
        Vector3::y()
    };
    let right = up.cross(&w).normalize();
    let up = w.cross(&right);
    let half = size as f64 / 2.0;
    let radius = half * 0.9;
    let project = |p: &Vector3<f64>| (half + radius * p.dot(&right), half - radius * p.dot(&up));
    const COLORS: [&str; 6] = ["#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#117a65"];

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(svg, "<defs>");
    for (i, color) in COLORS.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"<marker id="head{i}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="{color}"/></marker>"#
        );
    }
    let _ = writeln!(svg, "</defs>");
    let _ = writeln!(
        svg,
        r##"<circle cx="{half:.3}" cy="{half:.3}" r="{radius:.3}" fill="none" stroke="#888" stroke-width="1"/>"##
    );
    for (i, arc) in arcs.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let (tx, ty) = project(&arc.tail);
        let mut d = format!("M{tx:.3},{ty:.3}");
        if let Some(axis) = arc.axis(&Tolerance::default()) {
            let len = arc.length();
            for step in 1..=48 {
                let p = rotate_about(&arc.tail, &axis, len * step as f64 / 48.0);
                let (x, y) = project(&p);
                let _ = write!(d, " L{x:.3},{y:.3}");
            }
        }
        let _ = writeln!(
            svg,
            r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="2" marker-end="url(#head{})"/>"#,
            i % COLORS.len()
        );
        let _ = writeln!(svg, r#"<circle cx="{tx:.3}" cy="{ty:.3}" r="3" fill="{color}"/>"#);
    }
    svg.push_str("</svg>\n");
    svg
}
