use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fixpoint"))
        .args(args)
        .env_remove("FIXPOINT_THREADS")
        .output()
        .expect("spawn fixpoint")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn rational(v: &Value) -> (String, String) {
    (v["num"].as_str().unwrap().to_owned(), v["den"].as_str().unwrap().to_owned())
}

#[test]
fn mult_all_algorithms_agree() {
    let v = json(&["mult", "--lambda", "4,1", "--r", "1", "--alg", "all"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config"]["lambda"], "4,1");
    assert_eq!(v["result"]["agree"], true);
    let results = v["result"]["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    assert!(results.iter().all(|r| r["value"] == "1"));
}

#[test]
fn mult_small_cases() {
    let v = json(&["mult", "--lambda", "3", "--r", "2", "--alg", "oracle"]);
    assert_eq!(v["result"]["results"][0]["value"], "2");
    let v = json(&["mult", "--lambda", "2,2", "--r", "1"]);
    assert_eq!(v["result"]["results"][0]["value"], "0");
}

#[test]
fn fixed_commutator_mean_is_exact() {
    let v = json(&["moments", "commutator-fixed", "--n", "8", "--x", "8", "--r-max", "2"]);
    let first = &v["result"]["entries"][0];
    assert_eq!(rational(&first["moment"]), ("8".into(), "7".into()));
    // 2^4 grammar names the same class as 2,2,2,2
    let a = json(&["moments", "commutator-fixed", "--n", "8", "--x", "2^4"]);
    let b = json(&["moments", "commutator-fixed", "--n", "8", "--x", "2, 2,2,2"]);
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn random_commutator_moments_dominate_bell() {
    let v = json(&["moments", "commutator-random", "--n", "10", "--r-max", "3"]);
    for e in v["result"]["entries"].as_array().unwrap() {
        let (num, den) = rational(&e["difference"]);
        assert!(!num.starts_with('-'), "negative gap {num}/{den}");
    }
}

#[test]
fn walk_mean_near_two() {
    let v = json(&["moments", "walk", "--n", "1000", "--i", "2", "--c", "0", "--r-max", "2", "--precision", "53"]);
    assert_eq!(v["config"]["k"], 3454);
    let mean: f64 = v["result"]["entries"][0]["moment"].as_str().unwrap().parse().unwrap();
    assert!((mean - 2.0).abs() < 0.05, "mean {mean}");
}

#[test]
fn simulate_is_deterministic_across_threads() {
    let args = ["simulate", "--model", "walk", "--n", "20", "--i", "3", "--k", "40", "--samples", "2e5", "--seed", "7"];
    let one = run(&[&["--threads", "1"], &args[..]].concat());
    let four = run(&[&["--threads", "4"], &args[..]].concat());
    assert!(one.status.success());
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["config"]["threads"] = Value::Null;
        v
    };
    assert_eq!(strip(&one), strip(&four));
    let other = json(&[&args[..11], &["--seed", "8"]].concat());
    assert_ne!(strip(&one)["result"], other["result"]);
}

#[test]
fn csv_output_has_header_and_rows() {
    let out = run(&["--format", "csv", "dist", "uniform", "--n", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "fixed_points,probability,decimal");
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("0,3/8,"));
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        &["mult", "--lambda", "2,x", "--r", "1"][..],
        &["mult", "--lambda", "2,2", "--r", "3", "--alg", "ding"],
        &["moments", "commutator-fixed", "--n", "8", "--x", "3,3"],
        &["moments", "walk", "--n", "10", "--i", "2", "--k", "5", "--c", "0"],
        &["--precision", "64", "moments", "walk", "--n", "10", "--i", "2", "--k", "5"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty() || !String::from_utf8_lossy(&out.stderr).is_empty());
    }
}

#[test]
fn verify_identities_passes() {
    let out = run(&["verify", "identities"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.iter().any(|l| l["gate"] == "dimension_identity" && l["passed"] == true));
    assert_eq!(lines.last().unwrap()["passed"], true);
}
