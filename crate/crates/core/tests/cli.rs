use std::process::{Command, Output};

use serde_json::Value;

fn dj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dj"))
        .args(args)
        .output()
        .expect("spawn dj")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, String, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = dj(&full);
    let body = stdout(&out);
    let v: Value = serde_json::from_str(&body).unwrap_or_else(|e| panic!("{e}: {body}"));
    (v, body, out.status.code().unwrap())
}

#[test]
fn matrices_text_and_json() {
    let out = dj(&["matrices"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("F_C_I:\n  1 0 0 0\n  0 1 0 0\n  0 0 1 0\n  0 0 0 1\n"));

    let (v, _, code) = json(&["matrices"]);
    assert_eq!(code, 0);
    for label in ["C_I", "C_II", "B_I", "B_II"] {
        let m = v["results"][label].as_array().unwrap();
        assert_eq!(m.len(), 4);
        assert!(m
            .iter()
            .all(|row| row.as_array().unwrap().iter().all(|e| e.is_u64())));
    }
}

#[test]
fn json_documents_have_the_documented_keys_and_round_trip() {
    let cases: [&[&str]; 5] = [
        &["matrices"],
        &["derive", "--grid-step", "0.05"],
        &["verify"],
        &["classical"],
        &["impossible", "--samples", "2000"],
    ];
    for args in cases {
        let (v, body, _) = json(args);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["command", "inputs", "pass", "results"], "{args:?}");
        assert_eq!(v["command"], args[0]);
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(again, body, "{args:?}");
    }
}

#[test]
fn derive_analytic_and_grid() {
    let out = dj(&["derive"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(0.5, -0.5, 0.5, -0.5)"));
    assert!(text.contains("(0.5, -0.5, -0.5, 0.5)"));

    let (v, _, code) = json(&["derive", "--grid-step", "0.05"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["grid"]["agreement"], true);
    assert_eq!(v["results"]["distinct_solutions"], 2);
}

#[test]
fn derive_rejects_out_of_range_step() {
    let out = dj(&["derive", "--grid-step", "0.6"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("0 < step <= 0.5"), "{err}");
    assert_eq!(
        dj(&["derive", "--grid-step", "-0.1"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_default_and_pi() {
    for args in [&["verify"][..], &["verify", "--theta", "3.14159265"][..]] {
        let (v, _, code) = json(args);
        assert_eq!(code, 0);
        let runs = v["results"]["runs"].as_array().unwrap();
        let verdicts: Vec<&str> = runs
            .iter()
            .map(|r| r["verdict"].as_str().unwrap())
            .collect();
        assert_eq!(verdicts, ["Constant", "Constant", "Balanced", "Balanced"]);
        assert!(runs.iter().all(|r| r["oracle_calls"] == 1));
    }
    let text = stdout(&dj(&["verify"]));
    assert!(text.contains("C_I: projection 1 -> Constant"));
    assert!(text.contains("B_II: projection 0 -> Balanced"));
}

#[test]
fn verify_accepts_negative_theta_and_rejects_nan() {
    assert_eq!(dj(&["verify", "--theta", "-2.5"]).status.code(), Some(0));
    assert_eq!(dj(&["verify", "--theta", "nan"]).status.code(), Some(2));
    assert_eq!(dj(&["verify", "--theta", "inf"]).status.code(), Some(2));
}

#[test]
fn classical_is_deterministic_and_complete() {
    let a = dj(&["classical"]);
    let b = dj(&["classical"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("lower bound: 2"));

    let (v, _, _) = json(&["classical"]);
    let strategies = v["results"]["one_query_strategies"].as_array().unwrap();
    assert_eq!(strategies.len(), 16);
    assert!(strategies
        .iter()
        .all(|s| !s["misclassified"].as_array().unwrap().is_empty()));
    assert_eq!(v["results"]["witness_correct"], 4);
}

#[test]
fn impossible_samples_and_seed() {
    let (v, _, code) = json(&["impossible", "--samples", "1", "--seed", "0"]);
    assert_eq!(code, 0);
    assert!(
        v["results"]["sweep"]["min_joint_violation"]
            .as_f64()
            .unwrap()
            >= 0.1
    );

    assert_eq!(dj(&["impossible", "--samples", "0"]).status.code(), Some(2));

    let a = dj(&["impossible", "--samples", "500", "--seed", "9"]);
    let b = dj(&["impossible", "--samples", "500", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dj(&[]).status.code(), Some(2));
    assert_eq!(dj(&["matrices", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(dj(&["bogus"]).status.code(), Some(2));
}
