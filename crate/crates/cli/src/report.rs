//! Group dispatch and JSON rendering of words, traces and classifications.

use isoword::euclid2::{classify2, normalize2, word_to_isometry2, Class2, Line2};
use isoword::orthon::{classify_n, normalize_n, word_matrix_n, Hyperplane, SpectralSplit, WordN};
use isoword::rewrite::{Mirror, Move, Trace};
use isoword::so3::{classify_so3, line_word_matrix, line_word_quaternion, normalize_so3, AxisLine, Rotation3};
use isoword::sphere::{classify_sphere, normalize_sphere, sphere_word_matrix, ClassS2, GreatCircle};
use isoword::Tolerance;
use serde_json::{json, Map, Value};

use crate::expr::Word;

pub fn line_json(l: &Line2) -> Value {
    json!({ "normal": [l.normal().x, l.normal().y], "offset": l.offset() })
}

pub fn circle_json(c: &GreatCircle) -> Value {
    json!({ "pole": c.pole().as_slice() })
}

pub fn axis_json(a: &AxisLine) -> Value {
    json!({ "direction": a.direction().as_slice() })
}

pub fn hyper_json(h: &Hyperplane) -> Value {
    json!({ "normal": h.normal().as_slice() })
}

/// `{"group": .., "mirrors": [..]}`, mirrors listed first-acting first.
pub fn word_json(word: &Word) -> Value {
    match word {
        Word::E2(w) => json!({ "group": "e2", "mirrors": w.iter().map(line_json).collect::<Vec<_>>() }),
        Word::S2(w) => json!({ "group": "s2", "mirrors": w.iter().map(circle_json).collect::<Vec<_>>() }),
        Word::So3(w) => json!({ "group": "so3", "mirrors": w.iter().map(axis_json).collect::<Vec<_>>() }),
        Word::On { dim, mirrors } => json!({
            "group": "on",
            "dim": dim,
            "mirrors": mirrors.iter().map(hyper_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn class2_json(c: &Class2) -> Value {
    match c {
        Class2::Identity => json!({ "type": "identity" }),
        Class2::Reflection { axis } => json!({ "type": "reflection", "axis": line_json(axis) }),
        Class2::Translation { vector } => json!({ "type": "translation", "vector": [vector.x, vector.y] }),
        Class2::Rotation { center, angle } => {
            json!({ "type": "rotation", "center": [center.x, center.y], "angle": angle })
        }
        Class2::Glide { axis, vector } => {
            json!({ "type": "glide", "axis": line_json(axis), "vector": [vector.x, vector.y] })
        }
    }
}

pub fn class_s2_json(c: &ClassS2) -> Value {
    match c {
        ClassS2::Identity => json!({ "type": "identity" }),
        ClassS2::Reflection { circle } => json!({ "type": "reflection", "circle": circle_json(circle) }),
        ClassS2::Rotation { axis, angle } => {
            json!({ "type": "rotation", "axis": axis.as_slice(), "angle": angle })
        }
        ClassS2::Glide { axis, angle } => json!({ "type": "glide", "axis": axis.as_slice(), "angle": angle }),
    }
}

pub fn rotation_json(r: &Rotation3) -> Value {
    if r.is_identity() {
        json!({ "type": "identity" })
    } else {
        json!({ "type": "rotation", "axis": r.axis().as_slice(), "angle": r.angle() })
    }
}

pub fn split_json(s: &SpectralSplit) -> Value {
    let angles = s.angles();
    let kind = match (s.negated_count(), angles.len()) {
        (0, 0) => "identity",
        (1, 0) => "reflection",
        (n, _) if n % 2 == 0 => "rotation",
        _ => "improper_rotation",
    };
    json!({
        "type": kind,
        "det": s.det(),
        "fixed_dim": s.fixed_dim(),
        "negated_lines": s.negated_count(),
        "rotation_angles": angles,
    })
}

fn moves_json<M: Mirror>(trace: &Trace<M>, mirror: impl Fn(&M) -> Value) -> Vec<Value> {
    trace
        .moves()
        .iter()
        .map(|mv| {
            let mut obj = Map::new();
            obj.insert("move".into(), json!(mv.name()));
            obj.insert("at".into(), json!(mv.at()));
            if let Move::Pencil { pair, .. } | Move::PolarFrame { pair, .. } = mv {
                obj.insert("pair".into(), json!([mirror(&pair[0]), mirror(&pair[1])]));
            }
            Value::Object(obj)
        })
        .collect()
}

/// A rewrite of one word into another, with its oracle check.
pub struct Rewrite {
    pub input: Word,
    pub output: Word,
    pub moves: Vec<Value>,
    /// Intermediate words, starting with the input. Empty when the trace
    /// failed to replay.
    pub states: Vec<Word>,
    pub replay_ok: bool,
    pub residual: f64,
}

/// Oracle distance between two words of the same group: Frobenius plus
/// translation norm for E², Frobenius for S² and O(n), rotation angle for
/// SO(3).
pub fn residual(a: &Word, b: &Word) -> f64 {
    match (a, b) {
        (Word::E2(a), Word::E2(b)) => word_to_isometry2(a).distance(&word_to_isometry2(b)),
        (Word::S2(a), Word::S2(b)) => (sphere_word_matrix(a) - sphere_word_matrix(b)).norm(),
        (Word::So3(a), Word::So3(b)) => line_word_quaternion(a).rotation_distance(&line_word_quaternion(b)),
        (Word::On { dim, mirrors: a }, Word::On { mirrors: b, .. }) => {
            (word_matrix_n(*dim, a) - word_matrix_n(*dim, b)).norm()
        }
        _ => f64::INFINITY,
    }
}

/// Determinant of the oracle matrix (linear part for E²).
pub fn oracle_det(w: &Word) -> f64 {
    match w {
        Word::E2(w) => word_to_isometry2(w).det(),
        Word::S2(w) => sphere_word_matrix(w).determinant(),
        Word::So3(w) => line_word_matrix(w).determinant(),
        Word::On { dim, mirrors } => word_matrix_n(*dim, mirrors).determinant(),
    }
}

/// Replays `trace` from `start`; the last state must equal `end`.
fn states_of<M: Mirror + PartialEq>(
    trace: &Trace<M>,
    start: &[M],
    end: &[M],
    tol: &Tolerance,
    wrap: impl Fn(Vec<M>) -> Word,
) -> (Vec<Word>, bool) {
    match trace.states(start, tol) {
        Ok(states) if states.last().map(|s| s.as_slice()) == Some(end) => (states.into_iter().map(wrap).collect(), true),
        _ => (Vec::new(), false),
    }
}

pub fn normalize(word: &Word, tol: &Tolerance) -> Rewrite {
    let (output, moves, (states, replay_ok)) = match word {
        Word::E2(w) => {
            let r = normalize2(w, tol);
            let states = states_of(&r.trace, w, &r.word, tol, Word::E2);
            (Word::E2(r.word), moves_json(&r.trace, line_json), states)
        }
        Word::S2(w) => {
            let r = normalize_sphere(w, tol);
            let states = states_of(&r.trace, w, &r.word, tol, Word::S2);
            (Word::S2(r.word), moves_json(&r.trace, circle_json), states)
        }
        Word::So3(w) => {
            let r = normalize_so3(w, tol);
            let states = states_of(&r.trace, w, &r.word, tol, Word::So3);
            (Word::So3(r.word), moves_json(&r.trace, axis_json), states)
        }
        Word::On { dim, mirrors } => {
            let wn = WordN::new(*dim, mirrors.clone()).expect("parser checks dimensions");
            let r = normalize_n(&wn, tol);
            let dim = *dim;
            let states = states_of(&r.trace, mirrors, &r.word, tol, |m| Word::On { dim, mirrors: m });
            (Word::On { dim, mirrors: r.word }, moves_json(&r.trace, hyper_json), states)
        }
    };
    Rewrite {
        residual: residual(word, &output),
        input: word.clone(),
        output,
        moves,
        states,
        replay_ok,
    }
}

/// The `(n+1) → (n−1)` reduction of an O(n) word.
pub fn reduce(dim: usize, mirrors: &[Hyperplane], tol: &Tolerance) -> isoword::Result<Rewrite> {
    let wn = WordN::new(dim, mirrors.to_vec())?;
    let r = isoword::orthon::reduce_n_plus_one(&wn, tol)?;
    let input = Word::On { dim, mirrors: mirrors.to_vec() };
    let (states, replay_ok) = states_of(&r.trace, mirrors, &r.word, tol, |m| Word::On { dim, mirrors: m });
    let output = Word::On { dim, mirrors: r.word };
    Ok(Rewrite {
        residual: residual(&input, &output),
        moves: moves_json(&r.trace, hyper_json),
        states,
        replay_ok,
        input,
        output,
    })
}

pub fn classify(word: &Word, tol: &Tolerance) -> Value {
    match word {
        Word::E2(w) => class2_json(&classify2(w, tol)),
        Word::S2(w) => class_s2_json(&classify_sphere(w, tol)),
        Word::So3(w) => rotation_json(&classify_so3(w, tol)),
        Word::On { dim, mirrors } => {
            let wn = WordN::new(*dim, mirrors.clone()).expect("parser checks dimensions");
            match classify_n(&wn, tol) {
                Ok(split) => split_json(&split),
                Err(e) => json!({ "type": "error", "message": e.to_string() }),
            }
        }
    }
}

/// Per-step view of a rewrite: the move, the word after it and the oracle
/// residual against the input.
pub fn steps_json(rw: &Rewrite) -> Vec<Value> {
    rw.moves
        .iter()
        .zip(rw.states.iter().skip(1))
        .map(|(mv, state)| {
            let mut step = mv.as_object().cloned().unwrap_or_default();
            step.insert("expression".into(), json!(state.to_string()));
            step.insert("residual".into(), json!(residual(&rw.input, state)));
            Value::Object(step)
        })
        .collect()
}

pub fn rewrite_json(rw: &Rewrite, tol: &Tolerance, with_steps: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("input".into(), word_json(&rw.input));
    obj.insert("expression".into(), json!(rw.input.to_string()));
    obj.insert("normalized".into(), word_json(&rw.output));
    obj.insert("normalized_expression".into(), json!(rw.output.to_string()));
    obj.insert("length".into(), json!(rw.output.len()));
    obj.insert("classification".into(), classify(&rw.output, tol));
    obj.insert("residual".into(), json!(rw.residual));
    obj.insert("trace".into(), json!(rw.moves));
    if with_steps {
        obj.insert("steps".into(), json!(steps_json(rw)));
    }
    obj.insert("status".into(), json!(status(rw.residual, tol)));
    Value::Object(obj)
}

pub fn status(residual: f64, tol: &Tolerance) -> &'static str {
    if residual <= tol.eps_verify {
        "ok"
    } else {
        "fail"
    }
}

/// `key: value` lines for a JSON object, nested objects flattened inline.
pub fn human(value: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
    } else {
        out.push_str(&value.to_string());
        out.push('\n');
    }
    out
}
