//! Isometry groups presented by reflections.
//!
//! Elements of Isom(E²), O(3) acting on the 2-sphere, SO(3) and O(n) are
//! stored as words of mirrors and rewritten with three kinds of moves:
//!
//! * **involution**: two equal adjacent mirrors cancel;
//! * **pencil**: an adjacent pair `(l, m)` is replaced by `(l', m')` taken from
//!   the same pencil with the same gap, which leaves `R_m ∘ R_l` unchanged;
//! * **polar frame** (SO(3) only): the reflection in a line `k` is replaced by
//!   the reflections in two lines completing `k` to an orthogonal frame.
//!
//! Every rewrite is recorded in a [`rewrite::Trace`] that can be replayed and
//! checked move by move, and every module carries a matrix (or quaternion)
//! oracle against which the symbolic results are verified.
//!
//! Words are ordered by application: element `0` acts first. The product
//! `R_n ∘ R_m ∘ R_l ∘ R_k` is the word `[k, l, m, n]`.

pub mod arrowarc;
pub mod error;
pub mod euclid2;
pub mod numerics;
pub mod orthon;
mod pencil3;
pub mod random;
pub mod rewrite;
pub mod so3;
pub mod sphere;

pub use error::{Error, Result};
pub use numerics::Tolerance;
