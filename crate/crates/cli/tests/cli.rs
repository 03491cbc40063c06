use std::process::{Command, Output};

use shuffle_cli::VerificationReport;

fn shuffle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shuffle")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

const SIGMA: &str = "9 3 8 10 12 4 7";
const PI: &str = "1 2 6 5 13 11";
const ALPHA: &str = "1 9 2 6 3 5 13 8 10 12 11 4 7";

#[test]
fn phi_json_is_the_pair() {
    let out = shuffle(&["--json", "phi", "--sigma", SIGMA, "--pi", PI, "--alpha", ALPHA]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value, serde_json::json!({ "lambda": [6, 4, 3], "mu": [3, 2, 2], "k": 5 }));
    let text = stdout(&out);
    assert!(text.find("lambda").unwrap() < text.find("mu").unwrap());
    assert!(text.find("mu").unwrap() < text.find("\"k\"").unwrap());
}

#[test]
fn psi_trace_reproduces_the_insertion_table() {
    let out = shuffle(&["--trace", "psi", "--sigma", SIGMA, "--pi", PI, "--k", "5", "--lambda", "6 4 3", "--mu", "3,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(3, 2, 4, 5, 1, [6], 7, 0)"), "{text}");
    assert!(text.contains("(3, 2, [4], 5, 6, 1, ...)"), "{text}");
    assert!(text.contains("{6, 4, 3, 3, 2, 2}"), "{text}");
    assert!(text.contains("9 [2] [6] 3 [5] [13] 8 10 12 [11] 4 7"), "{text}");
    assert!(text.contains(&format!("alpha: {ALPHA}")), "{text}");

    let out = shuffle(&["--json", "psi", "--sigma", SIGMA, "--pi", PI, "--k", "5", "--lambda", "6 4 3", "--mu", "3 2 2"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["positions"], serde_json::json!([1, 2, 2, 3, 3, 6]));
}

#[test]
fn short_mu_is_padded_with_zeros() {
    // sigma = 1, pi = 3 2, k = 1: lambda has one part, mu one part
    let out = shuffle(&["--json", "psi", "--sigma", "1", "--pi", "3 2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn phi_trace_shows_removal_rows() {
    let out = shuffle(&["--trace", "phi", "--sigma", SIGMA, "--pi", PI, "--alpha", ALPHA]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with(|c: char| c.is_ascii_digit())).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows[0].starts_with("6 | 9 3 8 10 12 4 7 "), "{}", rows[0]);
    assert!(rows[6].starts_with("0 | [1] 9 [2]"), "{}", rows[6]);
}

#[test]
fn labeling_and_mis_text() {
    let out = shuffle(&["labeling", "--perm", "10 1 9 8 2 7 4 3 6", "--letter", "5"]);
    let text = stdout(&out);
    assert!(text.starts_with("₅10 ₆1 ₄9 ₃8 ₇2 ₂7 ₈4 ₁3 ₀6 ₉\n"), "{text}");
    assert!(text.contains("RL spaces: 0, 2, 3, 5, 7, 8"));
    assert!(text.contains("LR spaces: 1, 4, 6, 9"));

    let out = shuffle(&["--json", "mis", "--perm", "5 1 6 2 4", "--letter", "3"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["increments"], serde_json::json!([2, 3, 1, 4, 0, 5]));
}

#[test]
fn stats_and_shuffles() {
    let out = shuffle(&["--json", "stats", "--perm", "6 3 1 4"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["descent_set"], serde_json::json!([1, 2]));
    assert_eq!(value["maj"], 3);

    let out = shuffle(&["--json", "shuffles", "--sigma", "6 3", "--pi", "1 4"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 6);

    let out = shuffle(&["shuffles", "--sigma", "6 3", "--pi", "1 4", "--k", "1"]);
    assert_eq!(stdout(&out).lines().count(), 3);

    let out = shuffle(&["shuffles", "--sigma", "6 3", "--pi", "1 4", "--gf"]);
    assert!(stdout(&out).contains("k = 2: q^3 + q^4 + q^5"));
}

#[test]
fn exit_codes() {
    assert_eq!(shuffle(&["verify", "stanley", "--sigma", "6 3", "--pi", "1 4"]).status.code(), Some(0));
    assert_eq!(shuffle(&["verify", "insertion", "--perm", "5 1 6 2 4", "--letter", "3"]).status.code(), Some(0));
    assert_eq!(shuffle(&["verify", "macmahon", "--n", "4"]).status.code(), Some(0));
    // malformed or inconsistent input
    assert_eq!(shuffle(&["stats", "--perm", "1 1"]).status.code(), Some(2));
    assert_eq!(shuffle(&["stats", "--perm", "x"]).status.code(), Some(2));
    assert_eq!(shuffle(&["verify", "stanley", "--sigma", "1 2", "--pi", "2 3"]).status.code(), Some(2));
    assert_eq!(shuffle(&["verify", "macmahon", "--n", "9"]).status.code(), Some(2));
    assert_eq!(shuffle(&["verify", "macmahon"]).status.code(), Some(2));
    assert_eq!(shuffle(&["phi", "--sigma", "1 2", "--pi", "3", "--alpha", "2 1 3"]).status.code(), Some(2));
    assert_eq!(shuffle(&["psi", "--sigma", "1 2", "--pi", "3", "--k", "1", "--mu", "5"]).status.code(), Some(2));
    assert_eq!(shuffle(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn suite_json_round_trips_byte_for_byte() {
    let out = shuffle(&["--json", "verify", "suite", "--max-len", "4", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let reports: Vec<VerificationReport> = serde_json::from_str(&text).unwrap();
    assert!(!reports.is_empty());
    assert_eq!(serde_json::to_string_pretty(&reports).unwrap() + "\n", text);
}

#[test]
fn suite_is_deterministic_apart_from_timing() {
    let run = || {
        let out = shuffle(&["--json", "verify", "suite", "--max-len", "4", "--seed", "11"]);
        let mut reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
        for r in &mut reports {
            r.elapsed_micros = 0;
        }
        reports
    };
    assert_eq!(run(), run());
}

#[test]
fn suite_cap_is_enforced() {
    assert_eq!(shuffle(&["verify", "suite", "--max-len", "5", "--cap", "4"]).status.code(), Some(2));
}
