use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("mirrors do not share a pencil")]
    NotConcurrent,
    #[error("hyperplane normals are not coplanar")]
    NotCoplanarNormals,
    #[error("the identity rotation has no line pair; use the empty word")]
    IdentityInput,
    #[error("degenerate arc: coincident or antipodal endpoints")]
    DegenerateArc,
    #[error("matrix is not orthogonal (residual {residual:e})")]
    NotOrthogonal { residual: f64 },
    #[error("expected a word of length {expected}, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rewrite at step {step}: {reason}")]
    InvalidMove { step: usize, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
