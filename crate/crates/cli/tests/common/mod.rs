//! Golden cases shared by the snapshot and acceptance targets. Set
//! `UPDATE_GOLDEN=1` to refresh the files under `tests/golden/`.

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "normalize_involution",
        args: &["normalize", "E2: refl(line(0,1,0)) * refl(line(0,1,0))"],
        exit: 0,
    },
    Case {
        name: "normalize_involution_json",
        args: &["--json", "normalize", "E2: refl(line(0,1,0)) * refl(line(0,1,0))"],
        exit: 0,
    },
    Case {
        name: "classify_translation",
        args: &["--json", "classify", "E2: refl(line(1,0,1)) * refl(line(1,0,0))"],
        exit: 0,
    },
    Case {
        name: "classify_glide",
        args: &["classify", "E2: refl(line(0,1,0)) * refl(line(1,0,1)) * refl(line(1,0,0))"],
        exit: 0,
    },
    Case {
        name: "normalize_sphere_trace",
        args: &[
            "--trace",
            "normalize",
            "S2: refl(circle(0,0,1)) * refl(circle(1,0,0)) * refl(circle(0,1,0)) * refl(circle(1,1,0))",
        ],
        exit: 0,
    },
    Case {
        name: "classify_so3",
        args: &["--json", "classify", "SO3: refl(axis(1,0,0)) * refl(axis(1,1,0)) * refl(axis(0,0,1))"],
        exit: 0,
    },
    Case {
        name: "classify_on",
        args: &["--json", "classify", "ON(4): refl(hyper(1,0,0,0)) * refl(hyper(0,1,0,0)) * refl(hyper(1,1,1,1))"],
        exit: 0,
    },
    Case {
        name: "compose_rotations",
        args: &["--json", "compose", "SO3: refl(axis(1,0,0)) * refl(axis(0,1,0))", "SO3: refl(axis(0,1,0)) * refl(axis(0,0,1))"],
        exit: 0,
    },
    Case {
        name: "compose_group_mismatch",
        args: &["compose", "E2: id", "S2: id"],
        exit: 2,
    },
    Case {
        name: "arc_quarter_turn",
        args: &["--json", "arc", "SO3: refl(axis(1,0,0)) * refl(axis(1,1,0))"],
        exit: 0,
    },
    Case {
        name: "reduce_on3",
        args: &["reduce", "ON(3): refl(hyper(1,0,0)) * refl(hyper(0,1,0)) * refl(hyper(0,0,1)) * refl(hyper(1,1,1))"],
        exit: 0,
    },
    Case {
        name: "reduce_wrong_length",
        args: &["reduce", "ON(3): refl(hyper(1,0,0)) * refl(hyper(0,1,0))"],
        exit: 2,
    },
    Case {
        name: "verify_so3_seed42",
        args: &["verify", "--group", "so3", "--count", "1000", "--max-len", "7", "--seed", "42"],
        exit: 0,
    },
    Case {
        name: "verify_on5_json",
        args: &["--json", "verify", "--group", "on", "--dim", "5", "--count", "300", "--max-len", "11", "--seed", "7"],
        exit: 0,
    },
    Case {
        name: "syntax_error",
        args: &["normalize", "E2: refl(line(1,0"],
        exit: 2,
    },
    Case {
        name: "dimension_mismatch",
        args: &["normalize", "ON(3): refl(hyper(1,0,0)) * refl(hyper(1,0))"],
        exit: 2,
    },
    Case {
        name: "degenerate_mirror",
        args: &["classify", "S2: refl(circle(0,0,0))"],
        exit: 2,
    },
    Case {
        name: "unknown_subcommand",
        args: &["frobnicate"],
        exit: 2,
    },
];

pub fn run_bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_isoword"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn render(code: i32, stdout: &str, stderr: &str) -> String {
    format!("exit: {code}\n--- stdout\n{stdout}--- stderr\n{stderr}")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

/// Names of cases whose output differs from the stored snapshot.
pub fn mismatches() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for case in CASES {
        let (code, stdout, stderr) = run_bin(case.args);
        let got = render(code, &stdout, &stderr);
        let path = golden_path(case.name);
        if update {
            std::fs::write(&path, &got).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap_or_default();
        if code != case.exit || got != want {
            bad.push(format!("{} (exit {code})\n{got}", case.name));
        }
    }
    bad
}
