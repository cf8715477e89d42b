//! End-to-end tests of the `hypermatch` binary: exit codes, canonical JSON
//! output, the generator round trip, and the budget escape hatch.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypermatch"))
}

fn write_instance(name: &str, text: &str) -> std::path::PathBuf {
    let path =
        std::env::temp_dir().join(format!("hypermatch-cli-{name}-{}.hg", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let output = bin().args(args).output().unwrap();
    let stdout = String::from_utf8(output.stdout).unwrap();
    let json: Value = serde_json::from_str(stdout.trim()).unwrap_or_else(|_| {
        panic!("non-JSON output for {args:?}: {stdout}");
    });
    (json, output.status.code().unwrap())
}

#[test]
fn check_balance_reports_witnesses() {
    let c3 = write_instance("c3", "3 3\n1 2\n2 3\n1 3\n");
    let (json, code) = run_json(&["check-balance", c3.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json["verdict"], "unbalanced");
    assert_eq!(json["witness"]["vertices"], serde_json::json!([1, 2, 3, 1]));
    std::fs::remove_file(c3).ok();
}

#[test]
fn konig_matches_the_example() {
    let p3 = write_instance("p3", "3 2\n1 2\n2 3\n");
    let (json, code) = run_json(&["konig", p3.to_str().unwrap(), "--weights", "v"]);
    assert_eq!(code, 0);
    assert_eq!(json["gamma"], 2);
    assert_eq!(json["tau"], 2);
    assert_eq!(json["equal"], true);
    std::fs::remove_file(p3).ok();
}

#[test]
fn decompose_matches_the_example() {
    let p3 = write_instance("p3b", "3 2\n1 2\n2 3\n");
    let (json, code) = run_json(&["decompose", p3.to_str().unwrap(), "--mode", "dpm"]);
    assert_eq!(code, 0);
    assert_eq!(json["D"], serde_json::json!([1, 3]));
    assert_eq!(json["P"], serde_json::json!([2]));
    assert_eq!(json["M"], serde_json::json!([]));
    std::fs::remove_file(p3).ok();
}

#[test]
fn custom_weights_from_the_file() {
    let t1 = write_instance("t1", "4 2\n1 2 3 w=5\n3 4 w=1\n");
    let (json, code) = run_json(&["konig", t1.to_str().unwrap(), "--weights", "custom"]);
    assert_eq!(code, 0);
    assert_eq!(json["gamma"], 5);
    assert_eq!(json["tau"], 5);
    std::fs::remove_file(t1).ok();
}

#[test]
fn gen_round_trips_through_stdin() {
    let generated = bin()
        .args([
            "gen", "--family", "interval", "--seed", "7", "--n", "6", "--m", "4",
        ])
        .output()
        .unwrap();
    assert!(generated.status.success());
    let text = String::from_utf8(generated.stdout).unwrap();
    assert!(text.starts_with("6 4\n"));

    // Re-generating must be byte-identical.
    let again = bin()
        .args([
            "gen", "--family", "interval", "--seed", "7", "--n", "6", "--m", "4",
        ])
        .output()
        .unwrap();
    assert_eq!(text, String::from_utf8(again.stdout).unwrap());

    let mut child = bin()
        .args(["check-balance", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    let json: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(json["verdict"], "balanced");
}

#[test]
fn augment_emits_step_lines() {
    let p5 = write_instance("p5", "5 4\n1 2\n2 3\n3 4\n4 5\n");
    let output = bin()
        .args(["augment", p5.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    let lines: Vec<&str> = stdout.trim().lines().collect();
    assert!(lines.len() >= 2, "expected step lines plus a summary");
    for line in &lines {
        let value: Value = serde_json::from_str(line).unwrap();
        assert!(value.is_object());
    }
    let summary: Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["command"], "augment");
    assert_eq!(summary["weight"], 4);
    assert_eq!(summary["optimal"], true);
    std::fs::remove_file(p5).ok();
}

#[test]
fn error_exit_codes() {
    // Unreadable file: usage/IO error.
    let status = bin()
        .args(["check-balance", "/nonexistent/path.hg"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));

    // Unbalanced input to a balance-only operation: input error.
    let c3 = write_instance("c3b", "3 3\n1 2\n2 3\n1 3\n");
    let status = bin()
        .args(["color", c3.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    std::fs::remove_file(c3).ok();

    // Exhausted search budget: its own exit path.
    let c4 = write_instance("c4", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let status = bin()
        .args(["check-balance", c4.to_str().unwrap(), "--max-states", "2"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));
    std::fs::remove_file(c4).ok();
}

#[test]
fn bound_subcommand() {
    let c4 = write_instance("c4b", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let (json, code) = run_json(&["bound", c4.to_str().unwrap(), "--q", "1"]);
    assert_eq!(code, 0);
    assert_eq!(json["hypothesis_holds"], true);
    assert_eq!(json["bound"], 4);
    assert_eq!(json["gamma_v"], 4);
    assert_eq!(json["violated"], false);
    std::fs::remove_file(c4).ok();
}

#[test]
fn augment_accepts_a_starting_matching() {
    let p5 = write_instance("p5s", "5 4\n1 2\n2 3\n3 4\n4 5\n");
    let output = bin()
        .args(["augment", p5.to_str().unwrap(), "--start", "2"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    let summary: Value = serde_json::from_str(stdout.trim().lines().last().unwrap()).unwrap();
    assert_eq!(summary["weight"], 4);

    // A non-matching start is rejected.
    let output = bin()
        .args(["augment", p5.to_str().unwrap(), "--start", "1,2"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    std::fs::remove_file(p5).ok();
}

#[test]
fn verify_subcommand_passes_on_fixtures() {
    let t1 = write_instance("t1v", "4 2\n1 2 3\n3 4\n");
    for theorem in ["galed2", "galed1", "equalities"] {
        let (json, code) = run_json(&["verify", t1.to_str().unwrap(), "--theorem", theorem]);
        assert_eq!(code, 0, "{theorem} violated: {json}");
    }
    std::fs::remove_file(t1).ok();
}

#[test]
fn charac_subcommand_is_consistent() {
    let c4 = write_instance("c4c", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    for which in ["d", "weighted", "stable"] {
        let (json, code) = run_json(&["charac", c4.to_str().unwrap(), "--which", which]);
        assert_eq!(code, 0);
        assert_eq!(json["holds"], true);
    }
    std::fs::remove_file(c4).ok();

    // Unbalanced instance: the D characterization must fail, consistently
    // with the verdict, still exit 0 (an expected refutation, not a finding).
    let h5 = write_instance("h5c", "4 3\n1 2\n2 3\n1 3 4\n");
    let (json, code) = run_json(&["charac", h5.to_str().unwrap(), "--which", "d"]);
    assert_eq!(code, 0);
    assert_eq!(json["holds"], false);
    assert!(json["witness"].is_object());
    std::fs::remove_file(h5).ok();
}

#[test]
fn reports_are_byte_stable_across_runs() {
    let c4 = write_instance("c4s", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let first = bin()
        .args(["color", c4.to_str().unwrap()])
        .output()
        .unwrap();
    let second = bin()
        .args(["color", c4.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_file(c4).ok();
}
