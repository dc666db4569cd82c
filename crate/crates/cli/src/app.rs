//! Command-line front end.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isoword::arrowarc::{arc_to_rotation, arcs_to_svg, rotation_to_arc};
use isoword::random as rnd;
use isoword::so3::classify_so3;
use isoword::Tolerance;
use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::expr::{parse_expression, ParseError, Word};
use crate::report::{self, Rewrite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "isoword", version, about = "Isometries as words of reflections")]
pub struct Cli {
    /// Emit JSON instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    /// Residual bound, overriding the default 1e-8.
    #[arg(long, global = true, value_name = "X")]
    tol: Option<f64>,
    /// Include every rewrite step.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite a word into normal form.
    Normalize { expr: String },
    /// Classify the isometry of a word.
    Classify { expr: String },
    /// Normalize the product A * B (B acts first).
    Compose { a: String, b: String },
    /// Arrow-arc of an SO3 word.
    Arc {
        expr: String,
        /// Write an SVG drawing of the arc.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Normalize a seeded batch of random words and check every result.
    Verify(VerifyArgs),
    /// Reduce an ON(n) word of n+1 mirrors to at most n-1.
    Reduce { expr: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    E2,
    S2,
    So3,
    On,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Dimension for `--group on`.
    #[arg(long, default_value_t = 4)]
    dim: usize,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Parse(ParseError),
    Usage(String),
    Library(isoword::Error),
}

impl Failure {
    fn json(&self) -> Value {
        let (kind, message, position) = match self {
            Failure::Parse(e) => (e.kind(), e.to_string(), e.position()),
            Failure::Usage(m) => ("usage", m.clone(), None),
            Failure::Library(e) => ("library", e.to_string(), None),
        };
        let mut err = Map::new();
        err.insert("kind".into(), json!(kind));
        err.insert("message".into(), json!(message));
        if let Some(p) = position {
            err.insert("position".into(), json!(p));
        }
        json!({ "error": err })
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

struct Ctx {
    tol: Tolerance,
    json: bool,
    trace: bool,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let msg = rendered.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("{}\n", Failure::Usage(msg).json()),
                }
            } else {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let tol = match cli.tol {
        None => Tolerance::default(),
        Some(x) => match Tolerance::default().with_verify(x) {
            Ok(t) => t,
            Err(e) => return failure(Failure::Usage(format!("--tol: {e}"))),
        },
    };
    let ctx = Ctx {
        tol,
        json: cli.json,
        trace: cli.trace,
    };
    let result = match &cli.command {
        Command::Normalize { expr } => normalize(&ctx, expr),
        Command::Classify { expr } => classify(&ctx, expr),
        Command::Compose { a, b } => compose(&ctx, a, b),
        Command::Arc { expr, svg } => arc(&ctx, expr, svg.as_ref()),
        Command::Verify(args) => verify(&ctx, args),
        Command::Reduce { expr } => reduce(&ctx, expr),
    };
    match result {
        Ok((code, value, human)) => Outcome {
            code,
            stdout: if ctx.json { format!("{value}\n") } else { human },
            stderr: String::new(),
        },
        Err(f) => failure(f),
    }
}

fn failure(f: Failure) -> Outcome {
    let code = match f {
        Failure::Parse(_) | Failure::Usage(_) => EXIT_USAGE,
        Failure::Library(_) => EXIT_VERIFY,
    };
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("{}\n", f.json()),
    }
}

type CmdResult = Result<(i32, Value, String), Failure>;

fn exit_for(status: &str) -> i32 {
    if status == "ok" {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

fn rewrite_human(rw: &Rewrite, tol: &Tolerance, steps: bool) -> String {
    let names: Vec<String> = rw
        .moves
        .iter()
        .map(|m| format!("{}@{}", m["move"].as_str().unwrap_or("?"), m["at"]))
        .collect();
    let mut out = format!(
        "input: {}\nnormalized: {}\nlength: {}\nclassification: {}\nresidual: {:e}\ntrace: [{}]\n",
        rw.input,
        rw.output,
        rw.output.len(),
        report::classify(&rw.output, tol),
        rw.residual,
        names.join(", "),
    );
    if steps {
        for (i, step) in report::steps_json(rw).iter().enumerate() {
            out.push_str(&format!(
                "step {}: {}@{} -> {}  (residual {:e})\n",
                i + 1,
                step["move"].as_str().unwrap_or("?"),
                step["at"],
                step["expression"].as_str().unwrap_or(""),
                step["residual"].as_f64().unwrap_or(f64::NAN),
            ));
        }
    }
    out.push_str(&format!("status: {}\n", report::status(rw.residual, tol)));
    out
}

fn rewrite_result(ctx: &Ctx, rw: &Rewrite) -> CmdResult {
    let value = report::rewrite_json(rw, &ctx.tol, ctx.trace);
    let status = report::status(rw.residual, &ctx.tol);
    let code = if rw.replay_ok { exit_for(status) } else { EXIT_VERIFY };
    Ok((code, value, rewrite_human(rw, &ctx.tol, ctx.trace)))
}

fn normalize(ctx: &Ctx, expr: &str) -> CmdResult {
    let word = parse_expression(expr, &ctx.tol)?;
    rewrite_result(ctx, &report::normalize(&word, &ctx.tol))
}

fn compose(ctx: &Ctx, a: &str, b: &str) -> CmdResult {
    let wa = parse_expression(a, &ctx.tol)?;
    let wb = parse_expression(b, &ctx.tol)?;
    let product = wa.compose(&wb)?;
    rewrite_result(ctx, &report::normalize(&product, &ctx.tol))
}

fn classify(ctx: &Ctx, expr: &str) -> CmdResult {
    let word = parse_expression(expr, &ctx.tol)?;
    let class = report::classify(&word, &ctx.tol);
    let value = json!({
        "expression": word.to_string(),
        "group": word.group().name(),
        "classification": class,
    });
    let human = format!("expression: {word}\n{}", report::human(&class));
    Ok((EXIT_OK, value, human))
}

fn arc(ctx: &Ctx, expr: &str, svg: Option<&PathBuf>) -> CmdResult {
    let word = parse_expression(expr, &ctx.tol)?;
    let Word::So3(lines) = &word else {
        return Err(Failure::Usage(format!(
            "arc needs an SO3 expression, got group {}",
            word.group().name()
        )));
    };
    let rotation = classify_so3(lines, &ctx.tol);
    let arc = rotation_to_arc(&rotation, &ctx.tol);
    let back = arc_to_rotation(&arc, &ctx.tol);
    let residual = back.distance(&rotation);
    let mut value = json!({
        "expression": word.to_string(),
        "rotation": report::rotation_json(&rotation),
        "arc": {
            "tail": arc.tail().as_slice(),
            "head": arc.head().as_slice(),
            "length": arc.length(),
        },
        "residual": residual,
    });
    if let Some(path) = svg {
        let doc = arcs_to_svg(&[arc], &Vector3::new(1.0, 0.8, 0.6), 400);
        std::fs::write(path, doc).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
        value["svg"] = json!(path.display().to_string());
    }
    let status = report::status(residual, &ctx.tol);
    value["status"] = json!(status);
    let human = report::human(&value);
    Ok((exit_for(status), value, human))
}

fn reduce(ctx: &Ctx, expr: &str) -> CmdResult {
    let word = parse_expression(expr, &ctx.tol)?;
    let Word::On { dim, mirrors } = &word else {
        return Err(Failure::Usage(format!(
            "reduce needs an ON expression, got group {}",
            word.group().name()
        )));
    };
    let rw = report::reduce(*dim, mirrors, &ctx.tol).map_err(|e| match e {
        isoword::Error::WrongLength { .. } => Failure::Usage(e.to_string()),
        other => Failure::Library(other),
    })?;
    let mut value = report::rewrite_json(&rw, &ctx.tol, true);
    value["reduced"] = value["normalized"].take();
    value["reduced_expression"] = value["normalized_expression"].take();
    let obj = value.as_object_mut().expect("object");
    obj.remove("normalized");
    obj.remove("normalized_expression");
    let status = report::status(rw.residual, &ctx.tol);
    let code = if rw.replay_ok { exit_for(status) } else { EXIT_VERIFY };
    Ok((code, value, rewrite_human(&rw, &ctx.tol, true)))
}

fn random_word(group: GroupArg, dim: usize, len: usize, rng: &mut ChaCha8Rng, tol: &Tolerance) -> Word {
    match group {
        GroupArg::E2 => Word::E2(rnd::word(rng, len, |r| rnd::line2(r, tol))),
        GroupArg::S2 => Word::S2(rnd::word(rng, len, |r| rnd::great_circle(r, tol))),
        GroupArg::So3 => Word::So3(rnd::word(rng, len, |r| rnd::axis_line(r, tol))),
        GroupArg::On => Word::On {
            dim,
            mirrors: rnd::word(rng, len, |r| rnd::hyperplane(r, dim, tol)),
        },
    }
}

fn length_bound(group: GroupArg, dim: usize) -> usize {
    match group {
        GroupArg::E2 | GroupArg::S2 => 3,
        GroupArg::So3 => 2,
        GroupArg::On => dim,
    }
}

/// Per-sample checks of a batch; combined with an order-independent
/// reduction so the summary does not depend on scheduling.
#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    max_residual: f64,
    residual_failures: usize,
    length_violations: usize,
    parity_violations: usize,
    replay_failures: usize,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            max_residual: self.max_residual.max(o.max_residual),
            residual_failures: self.residual_failures + o.residual_failures,
            length_violations: self.length_violations + o.length_violations,
            parity_violations: self.parity_violations + o.parity_violations,
            replay_failures: self.replay_failures + o.replay_failures,
        }
    }

    fn failures(&self) -> usize {
        self.residual_failures + self.length_violations + self.parity_violations + self.replay_failures
    }
}

/// Expected determinant of a word's oracle: `(-1)^len`, except that line
/// reflections in SO(3) are rotations.
fn expected_det(word: &Word) -> f64 {
    match word {
        Word::So3(_) => 1.0,
        w if w.len() % 2 == 0 => 1.0,
        _ => -1.0,
    }
}

fn check_sample(word: &Word, group: GroupArg, dim: usize, tol: &Tolerance) -> Tally {
    let rw = report::normalize(word, tol);
    let parity_ok = rw
        .states
        .iter()
        .all(|s| (report::oracle_det(s) - expected_det(s)).abs() <= 1e-8);
    let same_parity = group == GroupArg::So3 || rw.output.len() % 2 == word.len() % 2;
    let residual = if rw.residual.is_nan() { f64::INFINITY } else { rw.residual };
    Tally {
        max_residual: residual,
        residual_failures: usize::from(residual > tol.eps_verify),
        length_violations: usize::from(rw.output.len() > length_bound(group, dim)),
        parity_violations: usize::from(!parity_ok || !same_parity),
        replay_failures: usize::from(!rw.replay_ok),
    }
}

fn verify(ctx: &Ctx, args: &VerifyArgs) -> CmdResult {
    if args.group == GroupArg::On && args.dim < 2 {
        return Err(Failure::Usage("--dim must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let words: Vec<Word> = (0..args.count)
        .map(|_| {
            let len = rng.random_range(0..=args.max_len);
            random_word(args.group, args.dim, len, &mut rng, &ctx.tol)
        })
        .collect();
    let tally = words
        .par_iter()
        .map(|w| check_sample(w, args.group, args.dim, &ctx.tol))
        .reduce(Tally::default, Tally::merge);
    let status = if tally.failures() == 0 { "ok" } else { "fail" };
    let group_name = match args.group {
        GroupArg::E2 => "e2",
        GroupArg::S2 => "s2",
        GroupArg::So3 => "so3",
        GroupArg::On => "on",
    };
    let mut value = json!({
        "group": group_name,
        "count": args.count,
        "max_len": args.max_len,
        "seed": args.seed,
    });
    if args.group == GroupArg::On {
        value["dim"] = json!(args.dim);
    }
    value["tolerance"] = json!(ctx.tol.eps_verify);
    value["max_residual"] = json!(tally.max_residual);
    value["residual_failures"] = json!(tally.residual_failures);
    value["length_violations"] = json!(tally.length_violations);
    value["parity_violations"] = json!(tally.parity_violations);
    value["replay_failures"] = json!(tally.replay_failures);
    value["status"] = json!(status);
    let human = report::human(&value);
    Ok((exit_for(status), value, human))
}
