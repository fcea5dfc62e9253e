//! End-to-end checks of the command-line binary: output shapes and the
//! documented exit codes (0 ok, 1 computation error, 2 parse error,
//! 3 self-test failure).

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-skein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn eval_prints_canonical_text() {
    let out = run(&["eval", "(1,0)_T * (0,1)_T"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t^-1*(1,-1)_T + t*(1,1)_T");
}

#[test]
fn eval_json_is_single_line() {
    let out = run(&["--json", "eval", "phi"]);
    assert!(out.status.success());
    let line = stdout(&out);
    assert!(!line.contains('\n'));
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["basis"], "T");
    assert_eq!(v["terms"][0]["coeff"]["num"]["0"], "1");
}

#[test]
fn trace_of_square_is_two() {
    let out = run(&["trace", "phi", "(1,0)^2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2");
}

#[test]
fn convert_to_simple_basis() {
    let out = run(&["convert", "(2,0)_T", "--to", "simple"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-2*phi + (1,0)^2");
}

#[test]
fn leading_minus_arguments_are_values_not_flags() {
    // formatted output can start with '-' and must feed back in unchanged
    let out = run(&["convert", "-2*phi + (1,0)^2", "--to", "T"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(2,0)_T");

    let out = run(&["eval", "-3*(1,0)_T"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-3*(1,0)_T");

    // witness coordinates may be negative
    let out = run(&["witness", "-2", "0", "0", "-2"]);
    assert!(out.status.success());
}

#[test]
fn witness_command_round_trip() {
    let out = run(&["--json", "witness", "2", "0", "0", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["left"], serde_json::json!({"p": 1, "q": 1}));
    assert_eq!(v["right"], serde_json::json!({"p": 1, "q": -1}));
}

#[test]
fn reduce_emits_verified_certificate() {
    let out = run(&["--json", "reduce", "(2,0)_T - (0,2)_T"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let cert = torus_skein::json::certificate_from_value(&v).unwrap();
    assert_eq!(cert.witnesses.len(), 1);
    assert!(cert.residual.is_zero());
}

#[test]
fn computation_errors_exit_1() {
    let out = run(&["witness", "1", "0", "0", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["witness", "2", "0", "4", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "--mode", "numeric", "--t", "1,0", "witness", "2", "0", "0", "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_2() {
    let out = run(&["eval", "(1,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eval", "x + 1"]);
    assert_eq!(out.status.code(), Some(2));
    // missing --t in numeric mode is a usage error
    let out = run(&["--mode", "numeric", "eval", "phi"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_is_deterministic_and_exits_0() {
    let a = run(&[
        "selftest",
        "--seed",
        "42",
        "--cases",
        "25",
        "--max-index",
        "8",
    ]);
    let b = run(&[
        "selftest",
        "--seed",
        "42",
        "--cases",
        "25",
        "--max-index",
        "8",
    ]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let j = run(&["--json", "selftest", "--seed", "42", "--cases", "25"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 8);
}

#[test]
fn numeric_mode_prints_twelve_significant_digits() {
    let out = run(&["--mode", "numeric", "--t", "0.7,0.3", "eval", "t * phi"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(7.00000000000e-1+3.00000000000e-1i)*phi");
}
