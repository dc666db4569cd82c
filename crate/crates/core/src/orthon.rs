//! O(n) as words of reflections in hyperplanes through the origin.
//!
//! An orthogonal matrix splits into fixed lines, negated lines and rotated
//! planes; each negated line costs one mirror and each plane two, so every
//! element is a word of at most `n` Householder reflections.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector, Schur, SymmetricEigen, SVD};

use crate::error::{Error, Result};
use crate::numerics::{canonical_unit, wrap_half_angle, Tolerance};
use crate::rewrite::{Mirror, Reduced, Rewriter};

/// The hyperplane `{x : normal · x = 0}`, canonical normal sign.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: DVector<f64>,
}

impl Hyperplane {
    pub fn new(normal: DVector<f64>, tol: &Tolerance) -> Result<Self> {
        if normal.len() < 2 {
            return Err(Error::DegenerateInput("dimension must be at least 2"));
        }
        Ok(Self {
            normal: canonical_unit(&normal, tol)?,
        })
    }

    pub fn from_slice(normal: &[f64], tol: &Tolerance) -> Result<Self> {
        Self::new(DVector::from_column_slice(normal), tol)
    }

    /// The hyperplane normal to the `i`-th basis vector of `R^dim`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut normal = DVector::zeros(dim);
        normal[i] = 1.0;
        Self { normal }
    }

    pub fn normal(&self) -> &DVector<f64> {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }
}

/// Orthonormal basis of the plane through `lines`, with the first line as
/// the first basis vector. `None` if the lines span more than a plane;
/// `Some(None)` if they are all the same line.
fn common_plane(
    lines: &[&DVector<f64>],
    tol: &Tolerance,
) -> Option<Option<(DVector<f64>, DVector<f64>)>> {
    let e1 = lines[0];
    let Some(e2) = lines.iter().find_map(|v| {
        let perp = *v - e1 * e1.dot(v);
        (perp.norm() > tol.eps_coincide).then(|| perp.normalize())
    }) else {
        return Some(None);
    };
    lines
        .iter()
        .all(|v| {
            let residual = *v - e1 * e1.dot(v) - &e2 * e2.dot(v);
            residual.norm() <= tol.eps_coincide
        })
        .then(|| Some((e1.clone(), e2)))
}

fn plane_angle(v: &DVector<f64>, e1: &DVector<f64>, e2: &DVector<f64>) -> f64 {
    e2.dot(v).atan2(e1.dot(v))
}

impl Mirror for Hyperplane {
    fn coincides(&self, other: &Self, tol: &Tolerance) -> bool {
        let dot = self.normal.dot(&other.normal);
        (&other.normal - &self.normal * dot).norm() <= tol.eps_coincide
    }

    fn is_pencil_move(l: &Self, m: &Self, l2: &Self, m2: &Self, tol: &Tolerance) -> bool {
        match common_plane(&[&l.normal, &m.normal, &l2.normal, &m2.normal], tol) {
            None => false,
            Some(None) => true,
            Some(Some((e1, e2))) => {
                let gap = |a: &Hyperplane, b: &Hyperplane| {
                    plane_angle(&b.normal, &e1, &e2) - plane_angle(&a.normal, &e1, &e2)
                };
                wrap_half_angle(gap(l, m) - gap(l2, m2)).abs() <= tol.eps_coincide
            }
        }
    }
}

/// A word of hyperplane reflections in a fixed dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct WordN {
    dim: usize,
    mirrors: Vec<Hyperplane>,
}

impl WordN {
    pub fn new(dim: usize, mirrors: Vec<Hyperplane>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DegenerateInput("dimension must be at least 2"));
        }
        if let Some(h) = mirrors.iter().find(|h| h.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: h.dim(),
            });
        }
        Ok(Self { dim, mirrors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mirrors(&self) -> &[Hyperplane] {
        &self.mirrors
    }

    pub fn len(&self) -> usize {
        self.mirrors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mirrors.is_empty()
    }

    /// Matrix oracle (first mirror acts first).
    pub fn matrix(&self) -> DMatrix<f64> {
        word_matrix_n(self.dim, &self.mirrors)
    }
}

/// An `n × n` matrix checked to be orthogonal within `eps_verify`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalMatrixN {
    entries: DMatrix<f64>,
}

impl OrthogonalMatrixN {
    pub fn new(entries: DMatrix<f64>, tol: &Tolerance) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::DimensionMismatch {
                expected: entries.nrows(),
                found: entries.ncols(),
            });
        }
        let n = entries.nrows();
        let residual = (entries.transpose() * &entries - DMatrix::identity(n, n)).norm();
        if residual.is_nan() || residual > tol.eps_verify {
            return Err(Error::NotOrthogonal { residual });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn into_inner(self) -> DMatrix<f64> {
        self.entries
    }
}

/// One invariant subspace of an orthogonal map.
#[derive(Debug, Clone, PartialEq)]
pub enum Block {
    /// Orthonormal basis of the fixed subspace.
    Fixed(Vec<DVector<f64>>),
    NegatedLine(DVector<f64>),
    /// `u ↦ cos θ u + sin θ v` with `θ ∈ (0, π]`.
    RotationPlane {
        u: DVector<f64>,
        v: DVector<f64>,
        angle: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSplit {
    pub dim: usize,
    pub blocks: Vec<Block>,
}

impl SpectralSplit {
    /// The orthogonal map described by the blocks.
    pub fn reassemble(&self) -> DMatrix<f64> {
        let n = self.dim;
        let mut m = DMatrix::zeros(n, n);
        for block in &self.blocks {
            match block {
                Block::Fixed(basis) => {
                    for f in basis {
                        m += f * f.transpose();
                    }
                }
                Block::NegatedLine(v) => m -= v * v.transpose(),
                Block::RotationPlane { u, v, angle } => {
                    let (s, c) = angle.sin_cos();
                    m += (u * u.transpose() + v * v.transpose()) * c;
                    m += (v * u.transpose() - u * v.transpose()) * s;
                }
            }
        }
        m
    }

    pub fn fixed_dim(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| match b {
                Block::Fixed(basis) => basis.len(),
                _ => 0,
            })
            .sum()
    }

    pub fn negated_count(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| matches!(b, Block::NegatedLine(_)))
            .count()
    }

    /// Rotation angles in increasing order.
    pub fn angles(&self) -> Vec<f64> {
        let mut angles: Vec<f64> = self
            .blocks
            .iter()
            .filter_map(|b| match b {
                Block::RotationPlane { angle, .. } => Some(*angle),
                _ => None,
            })
            .collect();
        angles.sort_by(f64::total_cmp);
        angles
    }

    pub fn det(&self) -> f64 {
        if self.negated_count().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }
}

/// `I − 2 n nᵀ`.
pub fn householder(h: &Hyperplane) -> DMatrix<f64> {
    let n = h.dim();
    DMatrix::identity(n, n) - &h.normal * h.normal.transpose() * 2.0
}

/// Matrix oracle of a word (first mirror acts first).
pub fn word_matrix_n(dim: usize, mirrors: &[Hyperplane]) -> DMatrix<f64> {
    mirrors
        .iter()
        .fold(DMatrix::identity(dim, dim), |acc, h| householder(h) * acc)
}

pub fn spectral_split(m: &OrthogonalMatrixN, tol: &Tolerance) -> Result<SpectralSplit> {
    let n = m.dim();
    // loosen the deflation test if clustered eigenvalues stall the iteration
    let (q, t) = [1.0, 4.0, 64.0]
        .iter()
        .find_map(|k| Schur::try_new(m.entries.clone(), k * f64::EPSILON, 100 * n.max(10)))
        .ok_or(Error::DegenerateInput("Schur iteration did not converge"))?
        .unpack();
    let col = |i: usize| -> DVector<f64> { q.column(i).into_owned() };

    let mut fixed = Vec::new();
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < n {
        if i + 1 < n && t[(i + 1, i)].abs() > 4.0 * f64::EPSILON {
            let (a, b, c, d) = (t[(i, i)], t[(i, i + 1)], t[(i + 1, i)], t[(i + 1, i + 1)]);
            let (q0, q1) = (col(i), col(i + 1));
            if a * d - b * c > 0.0 {
                // rotation: q0 ↦ a q0 + c q1
                let angle = (0.5 * (c - b)).atan2(0.5 * (a + d));
                if angle.abs() <= tol.eps_coincide {
                    fixed.extend([q0, q1]);
                } else if angle > 0.0 {
                    blocks.push(Block::RotationPlane { u: q0, v: q1, angle });
                } else {
                    blocks.push(Block::RotationPlane {
                        u: q0,
                        v: -q1,
                        angle: -angle,
                    });
                }
            } else {
                // reflection [[cos φ, sin φ], [sin φ, −cos φ]] fixes the line at φ/2
                let phi = (0.5 * (b + c)).atan2(0.5 * (a - d));
                let (s, co) = (0.5 * phi).sin_cos();
                fixed.push(&q0 * co + &q1 * s);
                blocks.push(Block::NegatedLine(&q1 * co - &q0 * s));
            }
            i += 2;
        } else {
            if t[(i, i)] > 0.0 {
                fixed.push(col(i));
            } else {
                blocks.push(Block::NegatedLine(col(i)));
            }
            i += 1;
        }
    }
    if !fixed.is_empty() {
        blocks.insert(0, Block::Fixed(fixed));
    }
    Ok(SpectralSplit { dim: n, blocks })
}

/// A word of at most `n` mirrors whose product is `m`.
pub fn decompose(m: &OrthogonalMatrixN, tol: &Tolerance) -> Result<WordN> {
    let split = spectral_split(m, tol)?;
    let mut mirrors = Vec::new();
    for block in &split.blocks {
        match block {
            Block::Fixed(_) => {}
            Block::NegatedLine(v) => mirrors.push(Hyperplane::new(v.clone(), tol)?),
            Block::RotationPlane { u, v, angle } => {
                let (s, c) = (0.5 * angle).sin_cos();
                mirrors.push(Hyperplane::new(u.clone(), tol)?);
                mirrors.push(Hyperplane::new(u * c + v * s, tol)?);
            }
        }
    }
    WordN::new(m.dim(), mirrors)
}

/// `m2` in the pencil of `l` and `m` with `R_m ∘ R_l = R_m2 ∘ R_l2`.
pub fn pencil_completion_n(l: &Hyperplane, m: &Hyperplane, l2: &Hyperplane, tol: &Tolerance) -> Result<Hyperplane> {
    let dim = l.dim();
    for h in [m, l2] {
        if h.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: h.dim(),
            });
        }
    }
    match common_plane(&[&l.normal, &m.normal, &l2.normal], tol) {
        None => Err(Error::NotCoplanarNormals),
        Some(None) => Ok(l2.clone()),
        Some(Some(_)) if l.coincides(m, tol) => Ok(l2.clone()),
        Some(Some(_)) => Ok(complete(l, m, l2, tol)),
    }
}

/// Turns `l2` within the plane of `l` and `m` by the angle from `l` to `m`.
fn complete(l: &Hyperplane, m: &Hyperplane, l2: &Hyperplane, tol: &Tolerance) -> Hyperplane {
    let e1 = &l.normal;
    let perp = &m.normal - e1 * e1.dot(&m.normal);
    let e2 = perp.normalize();
    let theta = plane_angle(&m.normal, e1, &e2) + plane_angle(&l2.normal, e1, &e2);
    let (s, c) = theta.sin_cos();
    let normal = e1 * c + e2 * s;
    Hyperplane::new(normal.clone(), tol).unwrap_or(Hyperplane { normal })
}

/// Unit null vector of the columns `cols` (padded to a square system).
fn null_vector(cols: &[&DVector<f64>]) -> DVector<f64> {
    let rows = cols[0].len().max(cols.len());
    let mut a = DMatrix::zeros(rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        a.view_mut((0, j), (c.len(), 1)).copy_from(*c);
    }
    let svd = SVD::new(a, false, true);
    let v_t = svd.v_t.expect("requested V");
    let k = svd.singular_values.argmin().0;
    v_t.row(k).transpose()
}

/// Rewrites `n + 1` hyperplane reflections in `R^n` into at most `n − 1`
/// using pencil and involution moves only.
///
/// The normals of a window `a..=b` are kept linearly dependent, starting
/// from the whole word. A dependency `Σ cᵢ uᵢ = 0` makes
/// `c_a u_a + c_{a+1} u_{a+1}` a vector of the pencil `(u_a, u_{a+1})` that
/// lies in the span of the rest of the window; a pencil move turns that
/// vector into the second mirror of the pair, and the window drops its
/// first element. A dependent window of two is a cancelling pair.
pub fn reduce_n_plus_one(word: &WordN, tol: &Tolerance) -> Result<Reduced<Hyperplane>> {
    let n = word.dim;
    if word.len() != n + 1 {
        return Err(Error::WrongLength {
            expected: n + 1,
            found: word.len(),
        });
    }
    let mut rw = Rewriter::new(word.mirrors.clone());
    reduce_window(&mut rw, 0, n, tol);
    Ok(rw.into())
}

/// Reduces the dependent window `a..=b` by one involution, after stripping
/// any cancellation already present.
fn reduce_window(rw: &mut Rewriter<Hyperplane>, mut a: usize, b: usize, tol: &Tolerance) {
    if rw.strip_involutions_in(a, b - a + 1, tol) > 0 {
        return;
    }
    while b - a >= 2 {
        let w = rw.word();
        let (ua, ub) = (&w[a], &w[a + 1]);
        if ua.coincides(ub, tol) {
            break;
        }
        let cols: Vec<&DVector<f64>> = w[a..=b].iter().map(|h| &h.normal).collect();
        let c = null_vector(&cols);
        let y = &ua.normal * c[0] + &ub.normal * c[1];
        if y.norm() <= 1e-6 * c.norm() {
            // the dependency lives in the tail of the window
            a += 1;
            continue;
        }
        let x = if b - a == 2 {
            w[b].clone()
        } else {
            Hyperplane::new(y, tol).expect("nonzero")
        };
        let first = complete(ub, ua, &x, tol);
        rw.pencil(a, first, x);
        a += 1;
    }
    if rw.word()[a].coincides(&rw.word()[a + 1], tol) {
        rw.involution(a);
    }
}

/// Rewrites any word into at most `n` mirrors of the same parity.
pub fn normalize_n(word: &WordN, tol: &Tolerance) -> Reduced<Hyperplane> {
    let n = word.dim;
    let mut rw = Rewriter::new(word.mirrors.clone());
    rw.strip_involutions(tol);
    while rw.len() > n {
        let before = rw.len();
        reduce_window(&mut rw, 0, n, tol);
        rw.strip_involutions(tol);
        if rw.len() == before {
            break;
        }
    }
    rw.into()
}

/// Spectral type of the product of a word, after normalization.
pub fn classify_n(word: &WordN, tol: &Tolerance) -> Result<SpectralSplit> {
    let reduced = normalize_n(word, tol).word;
    let m = OrthogonalMatrixN::new(word_matrix_n(word.dim, &reduced), tol)?;
    spectral_split(&m, tol)
}

/// Eigenvalues of the symmetric part `(M + Mᵀ)/2` in increasing order: the
/// cosines of the rotation angles (each twice), `+1` per fixed direction and
/// `−1` per negated one.
pub fn symmetric_spectrum(m: &DMatrix<f64>) -> Vec<f64> {
    let sym = (m + m.transpose()) * 0.5;
    let mut values: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

impl SpectralSplit {
    /// The same multiset as [`symmetric_spectrum`], computed from the blocks.
    pub fn cosine_spectrum(&self) -> Vec<f64> {
        let mut values = vec![1.0; self.fixed_dim()];
        values.extend(std::iter::repeat_n(-1.0, self.negated_count()));
        for angle in self.angles() {
            let c = if angle == PI { -1.0 } else { angle.cos() };
            values.extend([c, c]);
        }
        values.sort_by(f64::total_cmp);
        values
    }
}
