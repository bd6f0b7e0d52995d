use std::process::{Command, Output};

use serde_json::Value;

fn rookrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn enumerate_reports_order() {
    let out = rookrep(&["enumerate", "--n", "2", "--r", "2"]);
    assert!(out.status.success());
    // Σ_k C(n,k)^2 k! r^k for n = 2, r = 2.
    assert_eq!(stdout_json(&out)["count"], 1 + 4 * 2 + 2 * 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["irrep", "--n", "3", "--lambda", "[[1],[1]]"];
    let a = rookrep(&args);
    let b = rookrep(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bratteli_dot() {
    let out = rookrep(&["bratteli", "--r", "1", "--nmax", "2", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph bratteli {"));
    assert!(text.contains("\"0:0\" -- \"1:0\""));
    assert!(text.trim_end().ends_with('}'));
}

#[test]
fn groth_applies_word() {
    let out = rookrep(&["groth", "--p", "2", "--apply", "f1 f0", "--start", "[]:0"]);
    assert!(out.status.success());
    let terms = stdout_json(&out)["terms"].as_array().unwrap().clone();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["lambda"], serde_json::json!([2]));
}

#[test]
fn bialgebra_counit() {
    let out = rookrep(&["bialgebra", "--x", "[]:0"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["counit"], serde_json::json!(["1", "1"]));
}

#[test]
fn passing_suite_exits_zero() {
    let out = rookrep(&["verify", "--suite", "jm", "--n", "2", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["passed"], true);
}

#[test]
fn failing_suite_exits_one() {
    let out = rookrep(&["verify", "--suite", "bialgebra", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["passed"], false);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["enumerate", "--n", "7"][..],
        &["enumerate", "--n", "2", "--r", "0"],
        &["groth", "--p", "4"],
        &["irrep", "--n", "1", "--lambda", "[[2],[]]"],
        &["irrep", "--n", "2", "--lambda", "[[1]", "--r", "1"],
        &["verify", "--suite", "nonsense"],
        &["bratteli", "--r", "1", "--nmax", "2", "--format", "svg"],
    ] {
        let out = rookrep(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
