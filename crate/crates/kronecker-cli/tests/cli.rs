use std::process::{Command, Output};

use serde_json::Value;

fn kron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kron")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kron(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf8")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--emit", "json"]);
    serde_json::from_str(&stdout(&a)).expect("valid json")
}

#[test]
fn coeff_examples() {
    assert_eq!(stdout(&["coeff", "6,2", "7,4", "2,2,1"]), "11\n");
    assert_eq!(stdout(&["coeff", "6,1", "4,3", "1,1,1"]), "1\n");
    assert_eq!(stdout(&["coeff", "0", "0", "0"]), "1\n");
    assert_eq!(stdout(&["coeff", "[4]", "[5]", "[2,2,1]"]), "1\n");
}

#[test]
fn coeff_json_and_tsv() {
    let v = json(&["coeff", "6,1", "4,3", "2,1"]);
    assert_eq!(v["value"], "4");
    assert_eq!(v["source"], "tableaux");
    assert_eq!(v["lambda"], serde_json::json!([6, 1]));
    let tsv = stdout(&["coeff", "6,1", "4,3", "2,1", "--emit", "tsv"]);
    assert_eq!(tsv, "lambda\tnu\tmu\tvalue\tsource\n[6,1]\t[4,3]\t[2,1]\t4\ttableaux\n");
}

#[test]
fn exit_codes() {
    assert_eq!(kron(&["coeff", "2,3", "1", "1"]).status.code(), Some(2));
    assert_eq!(kron(&["coeff", "x", "1", "1"]).status.code(), Some(2));
    assert_eq!(kron(&["coeff", "1,1", "1,1", "2"]).status.code(), Some(3));
    assert_eq!(kron(&["tableaux", "[1,1", "1", "1"]).status.code(), Some(2));
}

#[test]
fn fallback_labels_the_oracle() {
    let v = json(&["coeff", "1,1", "1,1", "2", "--fallback-oracle"]);
    assert_eq!(v["source"], "oracle");
    assert_eq!(v["value"], "2");
}

#[test]
fn tableaux_listing() {
    let v = json(&["tableaux", "(4,2)", "(5,3,1)", "(2,1)"]);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 3);
    assert_eq!(classes.iter().filter(|c| c["lattice"] == true).count(), 2);
    assert_eq!(v["sstd"], "3");
    assert_eq!(v["latt"], "2");
    assert_eq!(v["copieri"], true);
    assert_eq!(v["maximal_depth"], true);
    for c in classes {
        assert_eq!(c["semistandard"], true);
        assert_eq!(c["word_steps"].as_array().unwrap().len(), 3);
        assert_eq!(c["word_frames"].as_array().unwrap().len(), 3);
        assert!(c["size"].as_u64().unwrap() >= 1);
    }

    let text = stdout(&["tableaux", "7", "6", "6"]);
    assert!(text.starts_with("3 classes"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with('t')).count(), 3);

    // below the skew bound there is nothing to list
    let v = json(&["tableaux", "6,2", "7,4", "2"]);
    assert_eq!(v["classes"], serde_json::json!([]));
    assert_eq!(v["sstd"], "0");
}

#[test]
fn tableaux_all_includes_non_semistandard() {
    let some = json(&["tableaux", "0", "2,2", "2,2"]);
    let all = json(&["tableaux", "0", "2,2", "2,2", "--all"]);
    let n = |v: &Value| v["classes"].as_array().unwrap().len();
    assert_eq!((n(&some), n(&all)), (1, 2));
    assert!(all["classes"].as_array().unwrap().iter().any(|c| c["semistandard"] == false));
}

#[test]
fn classify_and_lr() {
    let v = json(&["classify", "6,2", "7,4", "2,2,1"]);
    assert_eq!(v["copieri"], true);
    assert_eq!(v["minmax"], 2);
    let v = json(&["classify", "2,1", "2,1", "2,1"]);
    assert_eq!(v["copieri"], false);
    assert_eq!(stdout(&["lr", "4,2", "5,3,1", "2,1"]), "2\n");
    assert_eq!(kron(&["lr", "5", "4", "1"]).status.code(), Some(1));
}

#[test]
fn oracle_reports_onset_and_cap() {
    let v = json(&["oracle", "6,1", "4,3", "2,1"]);
    assert_eq!(v, serde_json::json!({ "value": "4", "onset_n": 14, "capped": false }));
    let v = json(&["oracle", "6,1", "4,3", "2,1", "--n-cap", "13"]);
    assert_eq!(v["capped"], true);
    assert_eq!(stdout(&["oracle", "6,1", "4,3", "2,1", "--report-onset"]), "4 from n = 14\n");
}

#[test]
fn output_is_byte_stable() {
    let args = ["tableaux", "6,1", "4,3", "2,1", "--all", "--emit", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn verify_small_bounds() {
    let out = kron(&["verify", "--max-size", "0", "--thm33-r", "2", "--emit", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 9);
    assert!(reports.iter().all(|r| r["passed"] == true && r["failures"] == serde_json::json!([])));
}
