//! Reflection-word expressions.
//!
//! ```text
//! expr   := group ":" term { "*" term }
//! term   := "refl" "(" mirror ")" | "id"
//! mirror := "line" "(" num "," num "," num ")"      E2: normal_x, normal_y, offset
//!         | "circle" "(" num "," num "," num ")"    S2: pole
//!         | "axis" "(" num "," num "," num ")"      SO3: direction
//!         | "hyper" "(" num { "," num } ")"         ON: normal
//! group  := "E2" | "S2" | "SO3" | "ON" [ "(" int ")" ]
//! ```
//!
//! Terms compose like operators: the leftmost term acts last, so
//! `refl(a) * refl(b)` is the word `[b, a]`. `id` is the empty word; it
//! lets the printer round-trip identities (`ON` then needs its dimension).

use std::fmt;

use isoword::euclid2::Line2;
use isoword::orthon::Hyperplane;
use isoword::so3::AxisLine;
use isoword::sphere::GreatCircle;
use isoword::Tolerance;
use nalgebra::{DVector, Vector2, Vector3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    E2,
    S2,
    So3,
    On,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::E2 => "e2",
            Group::S2 => "s2",
            Group::So3 => "so3",
            Group::On => "on",
        }
    }

    fn mirror_keyword(self) -> &'static str {
        match self {
            Group::E2 => "line",
            Group::S2 => "circle",
            Group::So3 => "axis",
            Group::On => "hyper",
        }
    }
}

/// A word in one of the four groups, stored first-acts-first.
#[derive(Debug, Clone, PartialEq)]
pub enum Word {
    E2(Vec<Line2>),
    S2(Vec<GreatCircle>),
    So3(Vec<AxisLine>),
    On { dim: usize, mirrors: Vec<Hyperplane> },
}

impl Word {
    pub fn group(&self) -> Group {
        match self {
            Word::E2(_) => Group::E2,
            Word::S2(_) => Group::S2,
            Word::So3(_) => Group::So3,
            Word::On { .. } => Group::On,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Word::E2(w) => w.len(),
            Word::S2(w) => w.len(),
            Word::So3(w) => w.len(),
            Word::On { mirrors, .. } => mirrors.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `self * other`: `other` acts first.
    pub fn compose(&self, other: &Word) -> Result<Word, ParseError> {
        let mismatch = || ParseError::GroupMismatch {
            left: self.group().name(),
            right: other.group().name(),
        };
        Ok(match (self, other) {
            (Word::E2(a), Word::E2(b)) => Word::E2([b.as_slice(), a].concat()),
            (Word::S2(a), Word::S2(b)) => Word::S2([b.as_slice(), a].concat()),
            (Word::So3(a), Word::So3(b)) => Word::So3([b.as_slice(), a].concat()),
            (Word::On { dim, mirrors: a }, Word::On { dim: d2, mirrors: b }) => {
                if dim != d2 {
                    return Err(ParseError::DimensionMismatch {
                        expected: *dim,
                        found: *d2,
                        pos: 0,
                    });
                }
                Word::On {
                    dim: *dim,
                    mirrors: [b.as_slice(), a].concat(),
                }
            }
            _ => return Err(mismatch()),
        })
    }

    /// Mirror coordinates, first acting first.
    pub fn coordinates(&self) -> Vec<Vec<f64>> {
        match self {
            Word::E2(w) => w
                .iter()
                .map(|l| vec![l.normal().x, l.normal().y, l.offset()])
                .collect(),
            Word::S2(w) => w.iter().map(|c| c.pole().as_slice().to_vec()).collect(),
            Word::So3(w) => w.iter().map(|a| a.direction().as_slice().to_vec()).collect(),
            Word::On { mirrors, .. } => mirrors.iter().map(|h| h.normal().as_slice().to_vec()).collect(),
        }
    }
}

/// Prints in the expression grammar; parsing the output gives the same word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::On { dim, .. } => write!(f, "ON({dim}):")?,
            other => write!(f, "{}:", other.group().name().to_uppercase())?,
        }
        let keyword = self.group().mirror_keyword();
        let coords = self.coordinates();
        if coords.is_empty() {
            return write!(f, " id");
        }
        for (i, c) in coords.iter().rev().enumerate() {
            let sep = if i == 0 { " " } else { " * " };
            let nums: Vec<String> = c.iter().map(|x| format!("{x:?}")).collect();
            write!(f, "{sep}refl({keyword}({}))", nums.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    Syntax { pos: usize, message: String },
    DimensionMismatch { expected: usize, found: usize, pos: usize },
    Degenerate { pos: usize, message: String },
    GroupMismatch { left: &'static str, right: &'static str },
}

impl ParseError {
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax",
            ParseError::DimensionMismatch { .. } => "dimension_mismatch",
            ParseError::Degenerate { .. } => "degenerate_input",
            ParseError::GroupMismatch { .. } => "group_mismatch",
        }
    }

    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::DimensionMismatch { pos, .. }
            | ParseError::Degenerate { pos, .. } => Some(*pos),
            ParseError::GroupMismatch { .. } => None,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, message } => write!(f, "syntax error at {pos}: {message}"),
            ParseError::DimensionMismatch { expected, found, pos } => {
                write!(f, "dimension mismatch at {pos}: expected {expected}, found {found}")
            }
            ParseError::Degenerate { pos, message } => write!(f, "degenerate mirror at {pos}: {message}"),
            ParseError::GroupMismatch { left, right } => {
                write!(f, "cannot compose words of groups {left} and {right}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.syntax(format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        if len == 0 {
            return self.syntax("expected a name");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E')))
            .unwrap_or(rest.len());
        match rest[..len].parse::<f64>() {
            Ok(x) if x.is_finite() => {
                self.pos += len;
                Ok(x)
            }
            _ => self.syntax("expected a number"),
        }
    }

    fn group(&mut self) -> Result<(Group, Option<usize>), ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        let group = match name.to_ascii_uppercase().as_str() {
            "E2" => Group::E2,
            "S2" => Group::S2,
            "SO3" => Group::So3,
            "ON" => Group::On,
            _ => {
                return Err(ParseError::Syntax {
                    pos: start,
                    message: format!("unknown group '{name}'"),
                })
            }
        };
        let mut dim = None;
        if group == Group::On && self.eat('(') {
            let at = self.pos;
            let n = self.number()?;
            if n.fract() != 0.0 || n < 2.0 {
                return Err(ParseError::Syntax {
                    pos: at,
                    message: "dimension must be an integer ≥ 2".into(),
                });
            }
            dim = Some(n as usize);
            self.expect(')')?;
        }
        Ok((group, dim))
    }

    fn numbers(&mut self) -> Result<Vec<f64>, ParseError> {
        self.expect('(')?;
        let mut out = vec![self.number()?];
        while self.eat(',') {
            out.push(self.number()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    /// One term: `None` for `id`, else the position of the mirror keyword
    /// and the coordinates.
    fn term(&mut self, group: Group) -> Result<Option<(usize, Vec<f64>)>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.ident() {
            Ok("refl") => {}
            Ok("id") => return Ok(None),
            _ => {
                self.pos = start;
                return self.syntax("expected 'refl' or 'id'");
            }
        }
        self.expect('(')?;
        self.skip_ws();
        let at = self.pos;
        let keyword = self.ident()?;
        if keyword != group.mirror_keyword() {
            return Err(ParseError::Syntax {
                pos: at,
                message: format!(
                    "expected '{}' for group {}, found '{keyword}'",
                    group.mirror_keyword(),
                    group.name().to_uppercase()
                ),
            });
        }
        let nums = self.numbers()?;
        self.expect(')')?;
        Ok(Some((at, nums)))
    }
}

fn degenerate(pos: usize, e: isoword::Error) -> ParseError {
    ParseError::Degenerate {
        pos,
        message: e.to_string(),
    }
}

fn arity(pos: usize, expected: usize, nums: &[f64]) -> Result<(), ParseError> {
    if nums.len() == expected {
        Ok(())
    } else {
        Err(ParseError::DimensionMismatch {
            expected,
            found: nums.len(),
            pos,
        })
    }
}

pub fn parse_expression(text: &str, tol: &Tolerance) -> Result<Word, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let (group, mut dim) = p.group()?;
    p.expect(':')?;
    let mut terms: Vec<(usize, Vec<f64>)> = p.term(group)?.into_iter().collect();
    while p.eat('*') {
        terms.extend(p.term(group)?);
    }
    if p.peek().is_some() {
        return p.syntax("expected '*' or end of input");
    }
    terms.reverse();
    let v3 = |n: &[f64]| Vector3::new(n[0], n[1], n[2]);
    let word = match group {
        Group::E2 => Word::E2(
            terms
                .iter()
                .map(|(at, n)| {
                    arity(*at, 3, n)?;
                    Line2::new(Vector2::new(n[0], n[1]), n[2], tol).map_err(|e| degenerate(*at, e))
                })
                .collect::<Result<_, _>>()?,
        ),
        Group::S2 => Word::S2(
            terms
                .iter()
                .map(|(at, n)| {
                    arity(*at, 3, n)?;
                    GreatCircle::new(v3(n), tol).map_err(|e| degenerate(*at, e))
                })
                .collect::<Result<_, _>>()?,
        ),
        Group::So3 => Word::So3(
            terms
                .iter()
                .map(|(at, n)| {
                    arity(*at, 3, n)?;
                    AxisLine::new(v3(n), tol).map_err(|e| degenerate(*at, e))
                })
                .collect::<Result<_, _>>()?,
        ),
        Group::On => {
            let mut mirrors = Vec::with_capacity(terms.len());
            for (at, n) in &terms {
                let d = *dim.get_or_insert(n.len());
                arity(*at, d, n)?;
                mirrors.push(Hyperplane::new(DVector::from_column_slice(n), tol).map_err(|e| degenerate(*at, e))?);
            }
            let Some(dim) = dim else {
                return Err(ParseError::Syntax {
                    pos: 0,
                    message: "ON without mirrors needs an explicit dimension, as in ON(3)".into(),
                });
            };
            Word::On { dim, mirrors }
        }
    };
    Ok(word)
}
