//! Isometries of the Euclidean plane as words of line reflections.
//!
//! Any word reduces to at most three reflections by repeatedly collapsing
//! its first four mirrors into two: adjacent equal lines cancel, and pairs
//! of lines are moved within their pencils (rotated about their common
//! point or translated along their common normal) until two adjacent
//! mirrors coincide.

use std::f64::consts::FRAC_PI_2;

use nalgebra::{Matrix2, Vector2};

use crate::error::{Error, Result};
use crate::numerics::{canonical_unit, sign_factor, wrap_angle, wrap_half_angle, Tolerance};
use crate::rewrite::{Mirror, Reduced, Rewriter};

/// The line `{x : normal · x = offset}` with a unit normal whose sign is
/// canonical, so every geometric line has one stored representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2 {
    normal: Vector2<f64>,
    offset: f64,
}

/// Mirrors in application order: element 0 acts first.
pub type Word2 = Vec<Line2>;

impl Line2 {
    pub fn new(normal: Vector2<f64>, offset: f64, tol: &Tolerance) -> Result<Self> {
        let norm = normal.norm();
        let unit = canonical_unit(&normal, tol)?;
        if !offset.is_finite() {
            return Err(Error::DegenerateInput("non-finite offset"));
        }
        // same sign flip and scale applied to the offset
        let scale = if unit.dot(&normal) < 0.0 { -norm } else { norm };
        let offset = if (norm - 1.0).abs() <= 4.0 * f64::EPSILON {
            offset * scale.signum()
        } else {
            offset / scale
        };
        Ok(Self {
            normal: unit,
            offset,
        })
    }

    /// From a normal that is already unit length; only the sign is fixed.
    fn from_unit(normal: Vector2<f64>, offset: f64, tol: &Tolerance) -> Self {
        let s = sign_factor(normal.as_slice(), tol.eps_coincide);
        Self {
            normal: normal * s,
            offset: offset * s,
        }
    }

    /// The line through `point` whose normal makes angle `theta` with the
    /// x-axis.
    fn through_at_angle(point: &Vector2<f64>, theta: f64, tol: &Tolerance) -> Self {
        let normal = Vector2::new(theta.cos(), theta.sin());
        Self::from_unit(normal, normal.dot(point), tol)
    }

    /// The line through two distinct points.
    pub fn through_points(p: &Vector2<f64>, q: &Vector2<f64>, tol: &Tolerance) -> Result<Self> {
        let d = q - p;
        let normal = Vector2::new(-d.y, d.x);
        let normal = canonical_unit(&normal, tol)?;
        Ok(Self {
            normal,
            offset: normal.dot(p),
        })
    }

    pub fn normal(&self) -> Vector2<f64> {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Unit direction along the line, canonical sign.
    pub fn direction(&self, tol: &Tolerance) -> Vector2<f64> {
        let d = Vector2::new(-self.normal.y, self.normal.x);
        d * sign_factor(d.as_slice(), tol.eps_coincide)
    }

    /// Angle of the normal, in `(-π/2, π/2]` up to the sign convention.
    fn normal_angle(&self) -> f64 {
        self.normal.y.atan2(self.normal.x)
    }

    /// Offset measured along `reference` (which must be ± this normal).
    fn offset_along(&self, reference: &Vector2<f64>) -> f64 {
        if self.normal.dot(reference) < 0.0 {
            -self.offset
        } else {
            self.offset
        }
    }

    pub fn reflection(&self) -> Isometry2 {
        let n = self.normal;
        Isometry2 {
            linear: Matrix2::identity() - 2.0 * n * n.transpose(),
            translation: 2.0 * self.offset * n,
        }
    }

    fn contains_point(&self, p: &Vector2<f64>, tol: &Tolerance) -> bool {
        (self.normal.dot(p) - self.offset).abs() <= tol.eps_coincide * (1.0 + p.norm())
    }
}

fn parallel(l: &Line2, m: &Line2, tol: &Tolerance) -> bool {
    l.normal.perp(&m.normal).abs() <= tol.eps_coincide
}

fn intersection(l: &Line2, m: &Line2) -> Vector2<f64> {
    let det = l.normal.perp(&m.normal);
    Vector2::new(
        (l.offset * m.normal.y - m.offset * l.normal.y) / det,
        (l.normal.x * m.offset - m.normal.x * l.offset) / det,
    )
}

impl Mirror for Line2 {
    fn coincides(&self, other: &Self, tol: &Tolerance) -> bool {
        parallel(self, other, tol)
            && (self.offset - other.offset_along(&self.normal)).abs()
                <= tol.eps_coincide * (1.0 + self.offset.abs())
    }

    fn is_pencil_move(l: &Self, m: &Self, l2: &Self, m2: &Self, tol: &Tolerance) -> bool {
        verify_pencil_relation2(l, m, l2, m2, tol)
    }
}

/// An affine isometry `x ↦ linear · x + translation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry2 {
    pub linear: Matrix2<f64>,
    pub translation: Vector2<f64>,
}

impl Isometry2 {
    pub fn identity() -> Self {
        Self {
            linear: Matrix2::identity(),
            translation: Vector2::zeros(),
        }
    }

    pub fn apply(&self, p: &Vector2<f64>) -> Vector2<f64> {
        self.linear * p + self.translation
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Isometry2) -> Isometry2 {
        Isometry2 {
            linear: self.linear * first.linear,
            translation: self.linear * first.translation + self.translation,
        }
    }

    pub fn det(&self) -> f64 {
        self.linear.determinant()
    }

    /// Frobenius distance of linear parts plus Euclidean distance of
    /// translations.
    pub fn distance(&self, other: &Isometry2) -> f64 {
        (self.linear - other.linear).norm() + (self.translation - other.translation).norm()
    }
}

/// Classification of a plane isometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Class2 {
    Identity,
    Reflection { axis: Line2 },
    Translation { vector: Vector2<f64> },
    /// Counterclockwise angle in `(-π, π]`.
    Rotation { center: Vector2<f64>, angle: f64 },
    /// `vector` is nonzero and parallel to `axis`.
    Glide { axis: Line2, vector: Vector2<f64> },
}

impl Class2 {
    pub fn name(&self) -> &'static str {
        match self {
            Class2::Identity => "identity",
            Class2::Reflection { .. } => "reflection",
            Class2::Translation { .. } => "translation",
            Class2::Rotation { .. } => "rotation",
            Class2::Glide { .. } => "glide",
        }
    }
}

/// Two lines and the pencil they span.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pencil2 {
    Parallel { direction: Vector2<f64> },
    Concurrent { point: Vector2<f64> },
}

impl Pencil2 {
    fn contains(&self, line: &Line2, tol: &Tolerance) -> bool {
        match self {
            Pencil2::Parallel { direction } => line.normal.dot(direction).abs() <= tol.eps_coincide,
            Pencil2::Concurrent { point } => line.contains_point(point, tol),
        }
    }
}

pub fn reflect_point2(l: &Line2, p: &Vector2<f64>) -> Vector2<f64> {
    p - 2.0 * (l.normal.dot(p) - l.offset) * l.normal
}

pub fn word_to_isometry2(word: &[Line2]) -> Isometry2 {
    word.iter()
        .fold(Isometry2::identity(), |acc, l| l.reflection().after(&acc))
}

/// Classifies `R_m ∘ R_l`.
pub fn compose_two2(l: &Line2, m: &Line2, tol: &Tolerance) -> Class2 {
    if l.coincides(m, tol) {
        return Class2::Identity;
    }
    if parallel(l, m, tol) {
        let n = l.normal;
        let gap = m.offset_along(&n) - l.offset;
        return Class2::Translation {
            vector: 2.0 * gap * n,
        };
    }
    let gap = wrap_half_angle(m.normal_angle() - l.normal_angle());
    Class2::Rotation {
        center: intersection(l, m),
        angle: wrap_angle(2.0 * gap),
    }
}

pub fn pencil_of2(l: &Line2, m: &Line2, tol: &Tolerance) -> Pencil2 {
    if parallel(l, m, tol) {
        Pencil2::Parallel {
            direction: l.direction(tol),
        }
    } else {
        Pencil2::Concurrent {
            point: intersection(l, m),
        }
    }
}

/// The pencil shared by all of `lines`, if any. Coincident lines carry no
/// information beyond one of them.
fn common_pencil(lines: &[&Line2], tol: &Tolerance) -> Option<Option<Pencil2>> {
    let first = lines[0];
    let Some(other) = lines.iter().find(|x| !x.coincides(first, tol)) else {
        return Some(None);
    };
    let pencil = pencil_of2(first, other, tol);
    lines
        .iter()
        .all(|x| pencil.contains(x, tol))
        .then_some(Some(pencil))
}

/// `m2` such that `R_m ∘ R_l = R_m2 ∘ R_l2`, without checking that `l2`
/// belongs to the pencil of `l` and `m`.
fn complete(l: &Line2, m: &Line2, l2: &Line2, tol: &Tolerance) -> Line2 {
    if l.coincides(m, tol) {
        return *l2;
    }
    if parallel(l, m, tol) {
        let n = l.normal;
        let gap = m.offset_along(&n) - l.offset;
        Line2::from_unit(n, l2.offset_along(&n) + gap, tol)
    } else {
        let p = intersection(l, m);
        let theta = l2.normal_angle() + (m.normal_angle() - l.normal_angle());
        Line2::through_at_angle(&p, theta, tol)
    }
}

/// The unique `m2` in the pencil of `l`, `m`, `l2` with the same gaps, so
/// that `R_m ∘ R_l = R_m2 ∘ R_l2`.
pub fn pencil_completion2(l: &Line2, m: &Line2, l2: &Line2, tol: &Tolerance) -> Result<Line2> {
    if common_pencil(&[l, m, l2], tol).is_none() {
        return Err(Error::NotConcurrent);
    }
    Ok(complete(l, m, l2, tol))
}

/// True iff the four lines share a pencil and the signed gap from `l` to
/// `m` equals the gap from `l2` to `m2` (distance for parallel pencils,
/// angle modulo π for concurrent ones).
pub fn verify_pencil_relation2(l: &Line2, m: &Line2, l2: &Line2, m2: &Line2, tol: &Tolerance) -> bool {
    let Some(pencil) = common_pencil(&[l, m, l2, m2], tol) else {
        return false;
    };
    match pencil {
        None => true,
        Some(Pencil2::Parallel { .. }) => {
            let n = l.normal;
            let gap = m.offset_along(&n) - l.offset;
            let gap2 = m2.offset_along(&n) - l2.offset_along(&n);
            let scale = 1.0 + l.offset.abs() + l2.offset.abs();
            (gap - gap2).abs() <= tol.eps_coincide * scale
        }
        Some(Pencil2::Concurrent { .. }) => {
            let gap = m.normal_angle() - l.normal_angle();
            let gap2 = m2.normal_angle() - l2.normal_angle();
            wrap_half_angle(gap - gap2).abs() <= tol.eps_coincide
        }
    }
}

/// Rewrites `R_n ∘ R_m ∘ R_l ∘ R_k` (the word `[k, l, m, n]`) into at most
/// two reflections.
pub fn reduce_four2(k: &Line2, l: &Line2, m: &Line2, n: &Line2, tol: &Tolerance) -> Reduced<Line2> {
    let mut rw = Rewriter::new(vec![*k, *l, *m, *n]);
    reduce_four_at(&mut rw, 0, tol);
    rw.into()
}

fn reduce_four_at(rw: &mut Rewriter<Line2>, at: usize, tol: &Tolerance) {
    if rw.strip_involutions_in(at, 4, tol) > 0 {
        return;
    }
    let w = rw.word();
    let (k, l, m, n) = (w[at], w[at + 1], w[at + 2], w[at + 3]);
    match (parallel(&k, &l, tol), parallel(&m, &n, tol)) {
        (false, false) => join_transverse_pairs(rw, at, tol),
        (true, false) => {
            // translate k ∪ l until l passes through m ∩ n
            let q = intersection(&m, &n);
            let l2 = Line2::from_unit(l.normal, l.normal.dot(&q), tol);
            rw.pencil(at, complete(&l, &k, &l2, tol), l2);
            rw.pencil(at + 2, l2, complete(&m, &n, &l2, tol));
            rw.involution(at + 1);
        }
        (false, true) => {
            // translate m ∪ n until m passes through k ∩ l
            let p = intersection(&k, &l);
            let m2 = Line2::from_unit(m.normal, m.normal.dot(&p), tol);
            rw.pencil(at + 2, m2, complete(&m, &n, &m2, tol));
            rw.pencil(at, complete(&l, &k, &m2, tol), m2);
            rw.involution(at + 1);
        }
        (true, true) if !parallel(&l, &m, tol) => {
            // turn the middle pair by a right angle; both outer pairs become
            // transverse
            let p = intersection(&l, &m);
            let l2 = Line2::through_at_angle(&p, l.normal_angle() + FRAC_PI_2, tol);
            rw.pencil(at + 1, l2, complete(&l, &m, &l2, tol));
            join_transverse_pairs(rw, at, tol);
        }
        (true, true) => {
            // all parallel: translate k ∪ l until l lands on m
            rw.pencil(at, complete(&l, &k, &m, tol), m);
            rw.involution(at + 1);
        }
    }
    rw.strip_involutions_in(at, 2, tol);
}

/// `k ∩ l = P` and `m ∩ n = Q`: rotate both pairs about their centres so
/// the inner lines become the line `PQ`, then cancel them.
fn join_transverse_pairs(rw: &mut Rewriter<Line2>, at: usize, tol: &Tolerance) {
    let w = rw.word();
    let (k, l, m, n) = (w[at], w[at + 1], w[at + 2], w[at + 3]);
    let p = intersection(&k, &l);
    let q = intersection(&m, &n);
    match Line2::through_points(&p, &q, tol) {
        Ok(joint) if (p - q).norm() > tol.eps_coincide * (1.0 + p.norm()) => {
            rw.pencil(at, complete(&l, &k, &joint, tol), joint);
            rw.pencil(at + 2, joint, complete(&m, &n, &joint, tol));
        }
        _ => {
            // common centre: rotate m, n so that m lands on l
            rw.pencil(at + 2, l, complete(&m, &n, &l, tol));
        }
    }
    rw.involution(at + 1);
}

/// Rewrites any word into at most three reflections (at most two for even
/// length) using only pencil and involution moves.
pub fn normalize2(word: &[Line2], tol: &Tolerance) -> Reduced<Line2> {
    let mut rw = Rewriter::new(word.to_vec());
    rw.strip_involutions(tol);
    while rw.len() >= 4 {
        reduce_four_at(&mut rw, 0, tol);
        rw.strip_involutions(tol);
    }
    rw.into()
}

/// Classifies the isometry of an orientation-reversing map.
fn classify_reversing(iso: &Isometry2, tol: &Tolerance) -> Class2 {
    // linear = I − 2 n nᵀ; the largest column of I − linear is ∥ n
    let defect = Matrix2::identity() - iso.linear;
    let col = if defect.column(0).norm() >= defect.column(1).norm() {
        defect.column(0).into_owned()
    } else {
        defect.column(1).into_owned()
    };
    let normal = col.normalize();
    let t = iso.translation;
    let axis = Line2::from_unit(normal, 0.5 * t.dot(&normal), tol);
    let dir = axis.direction(tol);
    let along = t.dot(&dir);
    if along.abs() <= tol.eps_coincide * (1.0 + t.norm()) {
        Class2::Reflection { axis }
    } else {
        Class2::Glide {
            axis,
            vector: along * dir,
        }
    }
}

pub fn classify2(word: &[Line2], tol: &Tolerance) -> Class2 {
    let reduced = normalize2(word, tol).word;
    match reduced.as_slice() {
        [] => Class2::Identity,
        [l] => Class2::Reflection { axis: *l },
        [l, m] => compose_two2(l, m, tol),
        _ => classify_reversing(&word_to_isometry2(&reduced), tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn line(a: f64, b: f64, c: f64) -> Line2 {
        Line2::new(Vector2::new(a, b), c, &tol()).unwrap()
    }

    /// Line through the origin whose direction makes `deg` degrees with the
    /// x-axis.
    fn origin_line(deg: f64) -> Line2 {
        let t = deg.to_radians();
        line(-t.sin(), t.cos(), 0.0)
    }

    fn close(a: Vector2<f64>, b: Vector2<f64>) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn construction_canonicalizes() {
        let l = line(-2.0, 0.0, 4.0);
        assert_eq!(l.normal(), Vector2::new(1.0, 0.0));
        assert_eq!(l.offset(), -2.0);
        assert!(Line2::new(Vector2::zeros(), 1.0, &tol()).is_err());
    }

    #[test]
    fn reflect_point_examples() {
        let p = reflect_point2(&line(0.0, 1.0, 0.0), &Vector2::new(3.0, 2.0));
        assert!(close(p, Vector2::new(3.0, -2.0)));
        let p = reflect_point2(&line(1.0, 0.0, 2.0), &Vector2::zeros());
        assert!(close(p, Vector2::new(4.0, 0.0)));
        let p = reflect_point2(&line(1.0, -1.0, 0.0), &Vector2::new(1.0, 0.0));
        assert!(close(p, Vector2::new(0.0, 1.0)));
    }

    #[test]
    fn word_oracle_examples() {
        assert_eq!(word_to_isometry2(&[]), Isometry2::identity());
        let l = line(1.0, 2.0, 3.0);
        assert!(word_to_isometry2(&[l, l]).distance(&Isometry2::identity()) < 1e-14);
        let t = word_to_isometry2(&[line(1.0, 0.0, 0.0), line(1.0, 0.0, 1.0)]);
        assert!(t.distance(&Isometry2 {
            linear: Matrix2::identity(),
            translation: Vector2::new(2.0, 0.0)
        }) < 1e-14);
    }

    #[test]
    fn compose_two_examples() {
        let l = line(3.0, 1.0, 2.0);
        assert_eq!(compose_two2(&l, &l, &tol()), Class2::Identity);
        match compose_two2(&line(1.0, 0.0, 0.0), &line(1.0, 0.0, 1.0), &tol()) {
            Class2::Translation { vector } => assert!(close(vector, Vector2::new(2.0, 0.0))),
            other => panic!("{other:?}"),
        }
        match compose_two2(&origin_line(0.0), &origin_line(45.0), &tol()) {
            Class2::Rotation { center, angle } => {
                assert!(close(center, Vector2::zeros()));
                assert!((angle - FRAC_PI_2).abs() < 1e-14);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn translation_direction_follows_word_order() {
        // x = 1 first, then x = 0: translation by (−2, 0)
        match compose_two2(&line(1.0, 0.0, 1.0), &line(-1.0, 0.0, 0.0), &tol()) {
            Class2::Translation { vector } => assert!(close(vector, Vector2::new(-2.0, 0.0))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pencil_of_examples() {
        assert_eq!(
            pencil_of2(&line(1.0, 0.0, 0.0), &line(1.0, 0.0, 1.0), &tol()),
            Pencil2::Parallel {
                direction: Vector2::new(0.0, 1.0)
            }
        );
        match pencil_of2(&line(0.0, 1.0, 0.0), &line(1.0, 0.0, 0.0), &tol()) {
            Pencil2::Concurrent { point } => assert!(close(point, Vector2::zeros())),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            pencil_of2(&line(1.0, 0.0, 0.0), &line(1.0, 0.0, 0.0), &tol()),
            Pencil2::Parallel {
                direction: Vector2::new(0.0, 1.0)
            }
        );
    }

    #[test]
    fn completion_examples() {
        let m2 = pencil_completion2(
            &line(1.0, 0.0, 0.0),
            &line(1.0, 0.0, 1.0),
            &line(1.0, 0.0, 5.0),
            &tol(),
        )
        .unwrap();
        assert!(m2.coincides(&line(1.0, 0.0, 6.0), &tol()));

        let m2 = pencil_completion2(&origin_line(0.0), &origin_line(30.0), &origin_line(45.0), &tol())
            .unwrap();
        assert!(m2.coincides(&origin_line(75.0), &tol()));

        let l = line(1.0, 1.0, 1.0);
        let l2 = line(1.0, -1.0, 1.0);
        assert_eq!(pencil_completion2(&l, &l, &l2, &tol()).unwrap(), l2);
    }

    #[test]
    fn completion_rejects_foreign_line() {
        let r = pencil_completion2(
            &line(1.0, 0.0, 0.0),
            &line(1.0, 0.0, 1.0),
            &line(0.0, 1.0, 5.0),
            &tol(),
        );
        assert_eq!(r, Err(Error::NotConcurrent));
        let r = pencil_completion2(&origin_line(0.0), &origin_line(30.0), &line(1.0, 0.0, 1.0), &tol());
        assert_eq!(r, Err(Error::NotConcurrent));
    }

    #[test]
    fn verify_pencil_examples() {
        let x = |c| line(1.0, 0.0, c);
        assert!(verify_pencil_relation2(&x(0.0), &x(1.0), &x(5.0), &x(6.0), &tol()));
        assert!(!verify_pencil_relation2(&x(0.0), &x(1.0), &x(5.0), &x(7.0), &tol()));
        assert!(verify_pencil_relation2(
            &origin_line(0.0),
            &origin_line(45.0),
            &origin_line(10.0),
            &origin_line(55.0),
            &tol()
        ));
    }

    #[test]
    fn swapped_pair_is_not_a_pencil_move() {
        // equal unsigned distances, opposite translations
        let x = |c| line(1.0, 0.0, c);
        assert!(!verify_pencil_relation2(&x(0.0), &x(1.0), &x(1.0), &x(0.0), &tol()));
    }

    #[test]
    fn reduce_four_examples() {
        let (k, m, n) = (line(1.0, 2.0, 3.0), line(0.3, 1.0, -2.0), line(-1.0, 0.2, 0.5));
        let r = reduce_four2(&k, &k, &m, &n, &tol());
        assert_eq!(r.word, vec![m, n]);

        let r = reduce_four2(
            &line(1.0, 0.0, 0.0),
            &line(1.0, 0.0, 1.0),
            &line(0.0, 1.0, 0.0),
            &line(0.0, 1.0, 1.0),
            &tol(),
        );
        assert!(r.word.len() <= 2);
        let iso = word_to_isometry2(&r.word);
        assert!(iso.distance(&Isometry2 {
            linear: Matrix2::identity(),
            translation: Vector2::new(2.0, 2.0)
        }) < 1e-12);

        let word: Vec<_> = [0.0, 30.0, 60.0, 90.0].map(origin_line).to_vec();
        let r = reduce_four2(&word[0], &word[1], &word[2], &word[3], &tol());
        assert!(r.word.len() <= 2);
        let (s, c) = (2.0 * PI / 3.0).sin_cos();
        let iso = word_to_isometry2(&r.word);
        assert!(iso.distance(&Isometry2 {
            linear: Matrix2::new(c, -s, s, c),
            translation: Vector2::zeros()
        }) < 1e-12);
    }

    #[test]
    fn reduce_four_covers_every_branch() {
        let cases = [
            // transverse, transverse with distinct centres
            [line(1.0, 0.0, 0.0), line(0.0, 1.0, 0.0), line(1.0, 1.0, 3.0), line(1.0, -1.0, 0.0)],
            // common centre
            [origin_line(0.0), origin_line(20.0), origin_line(70.0), origin_line(100.0)],
            // k ∥ l, m × n
            [line(1.0, 0.0, 0.0), line(1.0, 0.0, 2.0), line(1.0, 1.0, 1.0), line(0.0, 1.0, 4.0)],
            // k × l, m ∥ n
            [line(1.0, 1.0, 1.0), line(0.0, 1.0, 4.0), line(1.0, 0.0, 0.0), line(1.0, 0.0, 2.0)],
            // k ∥ l, m ∥ n, l × m
            [line(1.0, 0.0, 0.0), line(1.0, 0.0, 1.0), line(1.0, 2.0, 0.0), line(1.0, 2.0, 3.0)],
            // all parallel
            [line(1.0, 0.0, 0.0), line(1.0, 0.0, 1.0), line(1.0, 0.0, 3.0), line(1.0, 0.0, 7.0)],
            // reduces to the identity
            [line(1.0, 0.0, 0.0), line(0.0, 1.0, 0.0), line(0.0, 1.0, 0.0), line(1.0, 0.0, 0.0)],
            [line(1.0, 0.0, 0.0), line(1.0, 0.0, 1.0), line(1.0, 0.0, 5.0), line(1.0, 0.0, 4.0)],
        ];
        for word in cases {
            let r = reduce_four2(&word[0], &word[1], &word[2], &word[3], &tol());
            assert!(r.word.len() <= 2, "{word:?}");
            let before = word_to_isometry2(&word);
            assert!(word_to_isometry2(&r.word).distance(&before) < 1e-12, "{word:?}");
            assert_eq!(r.trace.replay(&word, &tol()).unwrap(), r.word);
        }
    }

    #[test]
    fn normalize_examples() {
        assert!(normalize2(&[], &tol()).word.is_empty());
        let (l, m) = (line(1.0, 2.0, 3.0), line(0.0, 1.0, 1.0));
        assert_eq!(normalize2(&[l, l, m], &tol()).word, vec![m]);
    }

    #[test]
    fn classify_examples() {
        let x_axis = line(0.0, 1.0, 0.0);
        assert_eq!(classify2(&[x_axis], &tol()), Class2::Reflection { axis: x_axis });
        match classify2(&[line(1.0, 0.0, 0.0), line(1.0, 0.0, 1.0)], &tol()) {
            Class2::Translation { vector } => assert!(close(vector, Vector2::new(2.0, 0.0))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn classify_glide_example() {
        // x-axis, then y = x, then x = 3. Applied to a point: (x, y) ↦ (x, −y)
        // ↦ (−y, x) ↦ (6 + y, x). The linear part swaps coordinates, so the
        // axis is parallel to (1, 1); the translation (6, 0) splits into
        // (3, 3) along the axis and (3, −3) across it, putting the axis on
        // x − y = 3.
        let word = [line(0.0, 1.0, 0.0), line(1.0, -1.0, 0.0), line(1.0, 0.0, 3.0)];
        let iso = word_to_isometry2(&word);
        assert!(close(iso.apply(&Vector2::new(1.0, 2.0)), Vector2::new(8.0, 1.0)));
        match classify2(&word, &tol()) {
            Class2::Glide { axis, vector } => {
                assert!(axis.coincides(&line(1.0, -1.0, 3.0), &tol()));
                assert!(close(vector, Vector2::new(3.0, 3.0)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn classify_three_mirror_reflection() {
        // three lines through one point compose to a reflection
        let word = [origin_line(0.0), origin_line(30.0), origin_line(90.0)];
        match classify2(&word, &tol()) {
            Class2::Reflection { axis } => assert!(axis.coincides(&origin_line(60.0), &tol())),
            other => panic!("{other:?}"),
        }
    }
}
