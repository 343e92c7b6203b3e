use std::io::Write;
use std::process::{Command, Output, Stdio};

fn csjack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csjack")).args(args).output().unwrap()
}

fn csjack_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_csjack"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn jack_31_json() {
    let doc = json(&csjack(&["jack", "--lambda", "3,1", "--nvars", "3"]));
    assert_eq!(doc["lambda"], serde_json::json!([3, 1]));
    assert_eq!(doc["nvars"], 3);
    assert_eq!(doc["c"]["num"], serde_json::json!(["0", "0", "2", "4", "2"]));
    assert_eq!(doc["monomial_expansion"].as_array().unwrap().len(), 3);
}

#[test]
fn jack_at_beta_one_is_schur() {
    let out = csjack(&["jack", "--lambda", "1", "--nvars", "2", "--beta", "1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("m[1]"));
}

#[test]
fn full_length_needs_shift() {
    let out = csjack(&["jack", "--lambda", "1,1,1", "--nvars", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("requires l(lambda) <= N-1 (or Galilei reduction)"));
    let doc = json(&csjack(&["jack", "--lambda", "1,1,1", "--nvars", "3", "--allow-shift"]));
    assert_eq!(doc["monomial_expansion"][0]["partition"], serde_json::json!([1, 1, 1]));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(csjack(&["jack", "--bogus"]).status.code(), Some(2));
    assert_eq!(csjack(&["spectrum", "--lambda", "1", "--nparticles", "2", "--beta", "sym"]).status.code(), Some(2));
}

#[test]
fn spectrum_single_state() {
    let doc = json(&csjack(&["spectrum", "--lambda", "1", "--nparticles", "2", "--beta", "2"]));
    let state = &doc["states"][0];
    assert_eq!(state["kappa"], serde_json::json!(["2", "-1"]));
    assert_eq!(state["energy"], "5");
    assert_eq!(state["momentum"], "1");
    assert_eq!(doc["ground_energy"], "8");
}

#[test]
fn spectrum_rejects_too_many_parts() {
    assert_eq!(csjack(&["spectrum", "--lambda", "1,1,1", "--nparticles", "2", "--beta", "1"]).status.code(), Some(1));
}

#[test]
fn convert_round_trip() {
    let jack = csjack(&["jack", "--lambda", "2", "--nvars", "2", "--beta", "1"]);
    assert_eq!(jack.status.code(), Some(0));
    let doc = json(&csjack_stdin(&["convert", "--basis", "p"], &jack.stdout));
    assert_eq!(doc["basis"], "p");
    assert!(!doc["coords"].as_array().unwrap().is_empty());
}

#[test]
fn convert_rejects_non_symmetric() {
    let input = br#"{"nvars":2,"terms":[{"exponents":[1,0],"coeff":{"num":["1"],"den":["1"]}}]}"#;
    assert_eq!(csjack_stdin(&["convert", "--basis", "m"], input).status.code(), Some(1));
}

#[test]
fn verify_small_suite_passes() {
    let out = csjack(&["verify", "--suite", "all", "--max-degree", "3", "--max-nvars", "3", "--samples", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 failed"));
}
