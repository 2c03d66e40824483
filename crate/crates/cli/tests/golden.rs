//! Golden-file coverage: every subcommand in every format it supports.
//! Timing fields are zeroed before comparison; everything else must match
//! byte for byte. Regenerate with RTK_BLESS=1 after an intentional output
//! change and review the diff like any other code.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rtk"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(dir: &Path, args: &[&str]) -> String {
    let out = run_in(dir, args);
    assert!(
        out.status.success(),
        "rtk {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

/// Recursively zeroes `elapsed` / `elapsed_ms` numbers so reruns compare
/// equal regardless of machine speed.
fn zero_timers(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (k, val) in map.iter_mut() {
                if (k == "elapsed" || k == "elapsed_ms") && val.is_number() {
                    *val = Value::from(0);
                } else {
                    zero_timers(val);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(zero_timers),
        _ => {}
    }
}

fn scrub_json(text: &str) -> String {
    let mut v: Value = serde_json::from_str(text).expect("stdout is JSON");
    zero_timers(&mut v);
    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
}

/// Zeroes the final CSV column when the header names it as a timer. The
/// timer is always last, which sidesteps quoting in earlier fields.
fn scrub_csv(text: &str) -> String {
    let mut lines = text.lines();
    let Some(header) = lines.next() else {
        return String::new();
    };
    let timed = matches!(header.rsplit(',').next(), Some("elapsed" | "elapsed_ms"));
    let mut out = format!("{header}\n");
    for line in lines {
        match (timed, line.rfind(',')) {
            (true, Some(at)) => {
                out.push_str(&line[..=at]);
                out.push('0');
            }
            _ => out.push_str(line),
        }
        out.push('\n');
    }
    out
}

/// Replaces each number directly before " ms" with 0.
fn scrub_ms(text: &str) -> String {
    let parts: Vec<&str> = text.split(" ms").collect();
    let mut out = String::new();
    for (idx, part) in parts.iter().enumerate() {
        if idx + 1 == parts.len() {
            out.push_str(part);
            break;
        }
        let trimmed = part.trim_end_matches(|c: char| c.is_ascii_digit());
        out.push_str(trimmed);
        if trimmed.len() < part.len() {
            out.push('0');
        }
        out.push_str(" ms");
    }
    out
}

fn check(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("RTK_BLESS").is_some() {
        fs::write(&path, actual).expect("golden dir exists");
        return;
    }
    let want = fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden {name}; rerun with RTK_BLESS=1"));
    assert_eq!(actual, want, "golden mismatch in {name}");
}

#[test]
fn construct_emits_graph_sidecar_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let stdout = stdout_of(
        dir.path(),
        &["--format", "json", "construct", "k4-union", "--n", "8", "--out", "g.cg"],
    );
    check("construct-k4-union.json", &scrub_json(&stdout));
    let graph = fs::read_to_string(dir.path().join("g.cg")).unwrap();
    check("construct-k4-union.cg", &graph);
    let sidecar = fs::read_to_string(dir.path().join("g.cg.json")).unwrap();
    check("construct-k4-union.sidecar.json", &scrub_json(&sidecar));
}

#[test]
fn construct_text_and_csv_reports() {
    let dir = tempfile::tempdir().unwrap();
    let text = stdout_of(
        dir.path(),
        &["construct", "h-star-forest", "--forest", "S2,2", "--n", "10", "--c", "1"],
    );
    check("construct-h-star-forest.txt", &text);
    let csv = stdout_of(
        dir.path(),
        &["--format", "csv", "construct", "split-graph", "--n", "9", "--k", "3"],
    );
    check("construct-split-graph.csv", &csv);
}

#[test]
fn construct_reports_a_missing_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let stdout = stdout_of(
        dir.path(),
        &["--format", "json", "construct", "rainbow-free-clique", "--c", "5", "--l", "4"],
    );
    check("construct-miss.json", &scrub_json(&stdout));
}

#[test]
fn search_formats() {
    let dir = tempfile::tempdir().unwrap();
    stdout_of(dir.path(), &["construct", "k44-union", "--n", "8", "--out", "k.cg"]);
    let found = stdout_of(
        dir.path(),
        &["--format", "json", "search", "--pattern", "S1,2", "--input", "k.cg"],
    );
    check("search-found.json", &scrub_json(&found));
    let miss = stdout_of(dir.path(), &["search", "--pattern", "P4", "--input", "k.cg"]);
    check("search-miss.txt", &miss);
    let csv = stdout_of(
        dir.path(),
        &["--format", "csv", "search", "--pattern", "S1,2", "--input", "k.cg"],
    );
    check("search-found.csv", &scrub_csv(&csv));
}

#[test]
fn oracle_formats() {
    let dir = tempfile::tempdir().unwrap();
    let json = stdout_of(
        dir.path(),
        &["--format", "json", "oracle", "--mode", "rainbow", "--n", "4", "--pattern", "P3"],
    );
    check("oracle-rainbow.json", &scrub_json(&json));
    let text = stdout_of(
        dir.path(),
        &["oracle", "--mode", "classical", "--n", "6", "--pattern", "M2"],
    );
    check("oracle-classical.txt", &scrub_ms(&text));
    let csv = stdout_of(
        dir.path(),
        &["--format", "csv", "oracle", "--mode", "rainbow", "--n", "5", "--pattern", "M2"],
    );
    check("oracle-rainbow.csv", &scrub_csv(&csv));
}

#[test]
fn verify_sweep_formats() {
    let dir = tempfile::tempdir().unwrap();
    let base = [
        "verify",
        "two-thirds",
        "--trials",
        "40",
        "--seed",
        "7",
        "--n-max",
        "8",
    ];
    let json_args: Vec<&str> = ["--format", "json"].iter().chain(&base).copied().collect();
    check("verify-two-thirds.json", &scrub_json(&stdout_of(dir.path(), &json_args)));
    check("verify-two-thirds.txt", &stdout_of(dir.path(), &base));
    let csv = stdout_of(
        dir.path(),
        &["--format", "csv", "verify", "theta", "--trials", "25", "--seed", "11"],
    );
    check("verify-theta.csv", &csv);
}

#[test]
fn verify_degree_lemma_formats() {
    let dir = tempfile::tempdir().unwrap();
    let json = stdout_of(
        dir.path(),
        &["--format", "json", "verify", "degree-lemma", "--n-max", "4"],
    );
    check("verify-degree-lemma.json", &scrub_json(&json));
    let csv = stdout_of(
        dir.path(),
        &["--format", "csv", "verify", "degree-lemma", "--n-max", "4", "--eps", "0.0,0.25"],
    );
    check("verify-degree-lemma.csv", &csv);
}

#[test]
fn verify_falsify_survivor_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = stdout_of(
        dir.path(),
        &[
            "--format", "json", "verify", "falsify", "--pattern", "P4", "--n", "8", "--edges",
            "17", "--trials", "5", "--seed", "3",
        ],
    );
    check("verify-falsify.json", &scrub_json(&json));
}

#[test]
fn table_formats() {
    let dir = tempfile::tempdir().unwrap();
    let txt = stdout_of(
        dir.path(),
        &["table", "h-edges", "--forest", "S2,2", "--n-min", "6", "--n-max", "10"],
    );
    check("table-h-edges.txt", &txt);
    let csv = stdout_of(
        dir.path(),
        &["--format", "csv", "table", "h-edges", "--forest", "S2,2", "--n-min", "6", "--n-max", "10"],
    );
    check("table-h-edges.csv", &csv);
    let json = stdout_of(
        dir.path(),
        &["--format", "json", "table", "ex-rainbow", "--pattern", "P3", "--n-min", "3", "--n-max", "5"],
    );
    check("table-ex-rainbow.json", &scrub_json(&json));
}
