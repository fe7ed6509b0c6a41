//! End-to-end tests of the `staircase` binary: output values, JSON
//! round-trips, shape shorthands, and exit codes.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_staircase"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn count_values() {
    let out = run(&["count", "3,2,1", "6", "svt", "formula"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "134865");

    let out = run(&["count", "", "5", "sst", "formula"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1");

    let out = run(&["count", "2,1", "3", "ssvt-p", "enumerate"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "27");
}

#[test]
fn shape_shorthands() {
    let long = run(&["count", "3,2,1", "6", "svt", "formula"]);
    let short = run(&["count", "delta:4", "6", "svt", "formula"]);
    assert_eq!(stdout(&long), stdout(&short));

    let out = run(&["count", "sdelta:4", "4", "ssvt-p", "formula"]);
    assert_eq!(stdout(&out), "729");
}

#[test]
fn json_round_trip() {
    let out = run(&["--json", "count", "4,3,2,1", "6", "svt", "formula"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["shape"], "4,3,2,1");
    assert_eq!(v["n"], 6);
    assert_eq!(v["kind"], "svt");
    // counts travel as decimal strings so arbitrary precision survives
    assert_eq!(v["count"], "2479329");

    let out = run(&["--json", "ratio", "3", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["ratio"], "16/5");
}

#[test]
fn ratio_values() {
    let out = run(&["ratio", "4", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "9");

    let out = run(&["ratio", "3", "4"]);
    assert_eq!(stdout(&out), "16/5");

    let out = run(&["--verbose", "ratio", "3", "4"]);
    let text = stdout(&out);
    assert!(text.contains("alpha = 0"));
    assert!(text.contains("beta = -4"));
}

#[test]
fn poly_dump() {
    let out = run(&["poly", "1", "2", "g"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "1 * x1^1\n1 * x2^1\n1 * x1^1 * x2^1 * beta^1"
    );
}

#[test]
fn eyd_listing() {
    let out = run(&["eyd", "2,1", "3"]);
    assert_eq!(stdout(&out), "8");

    let out = run(&["--json", "eyd", "2,1", "3", "--shifted", "--show-eyd"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["count"], 4);
    assert_eq!(v["diagrams"].as_array().unwrap().len(), 4);
    let first = v["diagrams"][0].as_str().unwrap();
    assert!(first.chars().all(|c| "ob. \n".contains(c)));
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--max-k", "3", "--max-n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_json_report() {
    let out = run(&["--json", "verify", "--max-k", "2", "--max-n", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    // report is sorted by check name
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn injected_fault_is_reported() {
    let out = run(&["verify", "--max-k", "2", "--max-n", "3", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL hook_ratio_double_factorial"));
}

#[test]
fn exit_codes() {
    // unparseable shape
    let out = run(&["count", "x,y", "3", "sst", "formula"]);
    assert_eq!(out.status.code(), Some(2));

    // not weakly decreasing
    let out = run(&["count", "1,2", "3", "sst", "formula"]);
    assert_eq!(out.status.code(), Some(2));

    // enumeration larger than the cap
    let out = run(&["--size-cap", "2", "count", "3,2,1", "3", "svt", "enumerate"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));

    // bad clap usage
    let out = run(&["count", "2,1", "3", "nonsense", "formula"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_cap_env_var() {
    let out = bin()
        .env("STAIRCASE_SIZE_CAP", "2")
        .args(["count", "3,2,1", "3", "svt", "enumerate"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));

    // explicit flag overrides the environment
    let out = bin()
        .env("STAIRCASE_SIZE_CAP", "2")
        .args(["--size-cap", "16", "count", "3,2,1", "3", "svt", "enumerate"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "27");
}
