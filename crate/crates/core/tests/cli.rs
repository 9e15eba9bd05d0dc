use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graded-descent")).args(args).env_remove("GRADED_DESCENT_SEED").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn tame_classify_q5_e4() {
    let v = json(&["tame-classify", "--q", "5", "--e", "4", "--r", "1"]);
    assert_eq!(v["results"]["h1_check"], "pass");
    let classes = v["results"]["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 4);
    assert_eq!(classes[3]["generator"], "s^-3*T");
    assert_eq!(v["command"], "tame-classify");
    assert!(v["field_presentation_choices"]["GF(5)"].is_string());
}

#[test]
fn derivation_table_mod_2() {
    let v = json(&["derivation-table", "--p", "2", "--mprime", "2", "--imax", "8"]);
    let table = v["results"]["table"].as_array().unwrap();
    assert_eq!(table.len(), 9 * 4);
    let entry = |i: i64, j: i64| table.iter().find(|e| e["i"] == i && e["j"] == j).unwrap()["coefficient"].clone();
    assert_eq!(entry(6, 2), "1");
    assert_eq!(entry(6, 1), "0");
    assert_eq!(entry(7, 3), "1");
}

#[test]
fn trivial_test_verdicts() {
    let v = json(&["russell-trivial-test", "--field", "GF(2)(u)", "--n", "1", "--tau", "1 + u*F"]);
    assert_eq!(v["results"]["verdict"], "nontrivial");
    let v = json(&["russell-trivial-test", "--field", "GF(2)(u)", "--n", "1", "--tau", "u + F"]);
    assert_eq!(v["results"]["verdict"], "trivial");
    assert_eq!(v["results"]["witness"], "1/u");
}

#[test]
fn iso_test_labels() {
    let v = json(&["russell-iso-test", "--field", "GF(2)(u)", "--tau", "1 + F", "--tau2", "1 + u*F", "--bound", "1"]);
    assert_eq!(v["results"]["exact"]["verdict"], "no witness within bound");
    let v = json(&["russell-iso-test", "--field", "GF(2)(u)", "--tau", "u + F", "--tau2", "1 + F"]);
    assert_eq!(v["results"]["exact"]["verdict"], "proved isomorphic");
}

#[test]
fn trivialize_and_pic_report() {
    let v = json(&["russell-trivialize", "--field", "GF(2)", "--stride", "2", "--f", "T1 + t^-2*T1^2"]);
    assert_eq!(v["results"]["trivialization"]["triv"], "y + t^-1*x");
    let v = json(&["pic-report", "--f", "T1 + t^-2*T1^2", "--samples", "10"]);
    assert_eq!(v["results"]["dt_criterion"]["generator_order"], 2);
    assert_eq!(v["results"]["pth_root_criterion"]["pic_trivial"], false);
}

#[test]
fn exit_code_contract() {
    assert_eq!(run(&["tame-classify", "--q", "5"]).status.code(), Some(1));
    assert_eq!(run(&["russell-build", "--f", "T1 +"]).status.code(), Some(1));
    assert_eq!(run(&["russell-build", "--stride", "x", "--f", "T1"]).status.code(), Some(1));
    // RootUnavailable: u has no square root in GF(2)(u)
    let out = run(&["russell-trivialize", "--field", "GF(2)(u)", "--f", "T1 + u*t^-2*T1^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("root"));
    assert_eq!(run(&["russell-trivialize", "--field", "GF(2)(u)", "--f", "T1 + u*t^-2*T1^2", "--coeff-extension", "1"]).status.code(), Some(0));
    assert_eq!(run(&["russell-build", "--f", "t*T1^2"]).status.code(), Some(2));
    assert_eq!(run(&["tame-classify", "--q", "6", "--e", "1"]).status.code(), Some(2));
    assert_eq!(run(&["russell-build", "--p", "3", "--f", "T1"]).status.code(), Some(2));
}

#[test]
fn seed_from_environment() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_graded-descent"))
        .args(["--json", "selfcheck"])
        .env("GRADED_DESCENT_SEED", "99")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&with_env.stdout).unwrap();
    assert_eq!(v["inputs"]["seed"], 99);
    let flag = json(&["selfcheck", "--seed", "99"]);
    assert_eq!(flag, v);
}

#[test]
fn text_output() {
    let out = run(&["selfcheck"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS ")).count() > 20);
    assert!(!text.contains("FAIL "));
}
