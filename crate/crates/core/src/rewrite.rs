//! Rewrite moves on reflection words and replayable traces.
//!
//! A [`Trace`] is the audit log of a normalization: replaying it from the
//! input word re-checks every move with the group's own predicates and
//! reproduces the output word exactly.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::numerics::Tolerance;

/// A mirror of some reflection group, with the predicates that validate
/// rewrite moves.
pub trait Mirror: Clone + Debug {
    /// Same mirror up to `eps_coincide`.
    fn coincides(&self, other: &Self, tol: &Tolerance) -> bool;

    /// `R_m ∘ R_l = R_m2 ∘ R_l2` as a pencil relation: all four mirrors in
    /// one pencil with the same signed gap.
    fn is_pencil_move(l: &Self, m: &Self, l2: &Self, m2: &Self, tol: &Tolerance) -> bool;

    /// `R_k = R_second ∘ R_first` as a polar frame relation.
    fn is_polar_frame(_k: &Self, _first: &Self, _second: &Self, _tol: &Tolerance) -> bool {
        false
    }
}

/// One rewrite move. Positions index the word *before* the move.
#[derive(Debug, Clone, PartialEq)]
pub enum Move<M> {
    /// Removes the equal mirrors at `at` and `at + 1`.
    Involution { at: usize },
    /// Replaces the pair at `at`, `at + 1` by `pair`.
    Pencil { at: usize, pair: [M; 2] },
    /// Replaces the single mirror at `at` by `pair`.
    PolarFrame { at: usize, pair: [M; 2] },
}

impl<M: Mirror> Move<M> {
    pub fn name(&self) -> &'static str {
        match self {
            Move::Involution { .. } => "involution",
            Move::Pencil { .. } => "pencil",
            Move::PolarFrame { .. } => "polar_frame",
        }
    }

    pub fn at(&self) -> usize {
        match self {
            Move::Involution { at } | Move::Pencil { at, .. } | Move::PolarFrame { at, .. } => *at,
        }
    }

    /// Change in word length caused by the move.
    pub fn length_delta(&self) -> isize {
        match self {
            Move::Involution { .. } => -2,
            Move::Pencil { .. } => 0,
            Move::PolarFrame { .. } => 1,
        }
    }

    fn shifted(&self, offset: usize) -> Self {
        match self {
            Move::Involution { at } => Move::Involution { at: at + offset },
            Move::Pencil { at, pair } => Move::Pencil {
                at: at + offset,
                pair: pair.clone(),
            },
            Move::PolarFrame { at, pair } => Move::PolarFrame {
                at: at + offset,
                pair: pair.clone(),
            },
        }
    }

    /// Checks the move against `word` and applies it.
    pub fn apply(&self, word: &mut Vec<M>, tol: &Tolerance, step: usize) -> Result<()> {
        let invalid = |reason| Error::InvalidMove { step, reason };
        match self {
            Move::Involution { at } => {
                let at = *at;
                if at + 1 >= word.len() {
                    return Err(invalid("position out of range"));
                }
                if !word[at].coincides(&word[at + 1], tol) {
                    return Err(invalid("involution on distinct mirrors"));
                }
                word.drain(at..at + 2);
            }
            Move::Pencil { at, pair } => {
                let at = *at;
                if at + 1 >= word.len() {
                    return Err(invalid("position out of range"));
                }
                if !M::is_pencil_move(&word[at], &word[at + 1], &pair[0], &pair[1], tol) {
                    return Err(invalid("not a pencil relation"));
                }
                word[at] = pair[0].clone();
                word[at + 1] = pair[1].clone();
            }
            Move::PolarFrame { at, pair } => {
                let at = *at;
                if at >= word.len() {
                    return Err(invalid("position out of range"));
                }
                if !M::is_polar_frame(&word[at], &pair[0], &pair[1], tol) {
                    return Err(invalid("not a polar frame"));
                }
                word.splice(at..at + 1, pair.iter().cloned());
            }
        }
        Ok(())
    }
}

/// Ordered list of moves.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace<M> {
    moves: Vec<Move<M>>,
}

impl<M> Default for Trace<M> {
    fn default() -> Self {
        Self { moves: Vec::new() }
    }
}

impl<M: Mirror> Trace<M> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn moves(&self) -> &[Move<M>] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn push(&mut self, mv: Move<M>) {
        self.moves.push(mv);
    }

    /// Appends `other` with every position shifted by `offset`.
    pub fn extend_shifted(&mut self, other: &Trace<M>, offset: usize) {
        self.moves
            .extend(other.moves.iter().map(|mv| mv.shifted(offset)));
    }

    /// Replays the trace from `start`, validating each move.
    pub fn replay(&self, start: &[M], tol: &Tolerance) -> Result<Vec<M>> {
        let mut word = start.to_vec();
        for (step, mv) in self.moves.iter().enumerate() {
            mv.apply(&mut word, tol, step)?;
        }
        Ok(word)
    }

    /// Every intermediate word, starting with `start` and ending with the
    /// replayed result.
    pub fn states(&self, start: &[M], tol: &Tolerance) -> Result<Vec<Vec<M>>> {
        let mut word = start.to_vec();
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        out.push(word.clone());
        for (step, mv) in self.moves.iter().enumerate() {
            mv.apply(&mut word, tol, step)?;
            out.push(word.clone());
        }
        Ok(out)
    }
}

/// Result of a reduction: the rewritten word and the moves that produced
/// it from the input.
#[derive(Debug, Clone)]
pub struct Reduced<M> {
    pub word: Vec<M>,
    pub trace: Trace<M>,
}

impl<M: Mirror> From<Rewriter<M>> for Reduced<M> {
    fn from(rw: Rewriter<M>) -> Self {
        let (word, trace) = rw.into_parts();
        Self { word, trace }
    }
}

/// A word under rewriting together with the trace of moves applied to it.
/// Moves are applied unchecked; [`Trace::replay`] is the checked path.
#[derive(Debug, Clone)]
pub struct Rewriter<M> {
    word: Vec<M>,
    trace: Trace<M>,
}

impl<M: Mirror> Rewriter<M> {
    pub fn new(word: Vec<M>) -> Self {
        Self {
            word,
            trace: Trace::new(),
        }
    }

    pub fn word(&self) -> &[M] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn trace(&self) -> &Trace<M> {
        &self.trace
    }

    pub fn into_parts(self) -> (Vec<M>, Trace<M>) {
        (self.word, self.trace)
    }

    pub fn involution(&mut self, at: usize) {
        self.word.drain(at..at + 2);
        self.trace.push(Move::Involution { at });
    }

    pub fn pencil(&mut self, at: usize, first: M, second: M) {
        self.word[at] = first.clone();
        self.word[at + 1] = second.clone();
        self.trace.push(Move::Pencil {
            at,
            pair: [first, second],
        });
    }

    pub fn polar_frame(&mut self, at: usize, first: M, second: M) {
        self.word
            .splice(at..at + 1, [first.clone(), second.clone()]);
        self.trace.push(Move::PolarFrame {
            at,
            pair: [first, second],
        });
    }

    /// Cancels coinciding adjacent mirrors until none remain. Cancelling a
    /// pair can expose a new one at the seam, so the scan steps back.
    pub fn strip_involutions(&mut self, tol: &Tolerance) {
        let mut i = 0;
        while i + 1 < self.word.len() {
            if self.word[i].coincides(&self.word[i + 1], tol) {
                self.involution(i);
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
    }

    /// Cancels within `start..start + len` only; returns the number of
    /// mirrors removed.
    pub fn strip_involutions_in(&mut self, start: usize, len: usize, tol: &Tolerance) -> usize {
        let mut end = start + len;
        let mut i = start;
        while i + 1 < end {
            if self.word[i].coincides(&self.word[i + 1], tol) {
                self.involution(i);
                end -= 2;
                i = if i > start { i - 1 } else { start };
            } else {
                i += 1;
            }
        }
        start + len - end
    }
}
