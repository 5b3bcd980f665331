use std::io::Cursor;

use fdb::cli::run_with;
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["fdb"];
    argv.extend_from_slice(args);
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str], stdin: &str) -> Value {
    let (code, out, err) = run(args, stdin);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

fn temp_file(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("fdb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn coproduct_of_a3() {
    let v = json(&["coproduct", "--n", "3"], "");
    let terms = v.as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert!(terms.iter().any(|t| t["coeff"] == "3"
        && t["left"] == serde_json::json!([["a", 2, 1]])
        && t["right"] == serde_json::json!([["a", 2, 1]])));
}

#[test]
fn compose_files_and_stdin() {
    let f = temp_file("f.json", r#"{"order":4,"coeffs":["1","2"]}"#);
    let v = json(&["compose", &f, &f], "");
    assert_eq!(v["coeffs"], serde_json::json!(["1", "4", "12", "24"]));
    let v = json(&["compose", "-", &f], r#"{"order":4,"coeffs":["1"]}"#);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "2", "0", "0"]));
    let v = json(&["revert", "-"], r#"{"order":4,"coeffs":["1","2"]}"#);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "-2", "12", "-120"]));
}

#[test]
fn cardinality_reports_sum_and_error() {
    let v = json(&["cardinality", "--upto", "15"], "");
    assert_eq!(v["partial_sum"], "1457799485551/261534873600");
    let err = v["error"].as_f64().unwrap();
    assert!(err > 9e-4 && err < 1e-3);
}

#[test]
fn malformed_input_names_the_field() {
    let (code, _, err) = run(&["revert", "-"], r#"{"order":3,"coeffs":["1","oops"]}"#);
    assert_eq!(code, 1);
    assert!(err.contains("coeffs[1]"), "{err}");
    let (code, _, err) = run(&["nseries-revert", "-"], r#"{"N":2,"M":3,"coeffs":[{"component":3,"index":[1,1],"value":"1"}]}"#);
    assert_eq!(code, 1);
    assert!(err.contains("coeffs[0].component"), "{err}");
    let (code, _, err) = run(&["revert", "-"], r#"{"order":3,"coeffs":["2"]}"#);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(run(&["coproduct"], "").0, 2);
    assert_eq!(run(&["frobnicate"], "").0, 2);
    assert_eq!(run(&["gamma", "--n", "3", "--route", "sideways"], "").0, 2);
    assert_eq!(run(&["coproduct", "--n", "1"], "").0, 1);
    assert_eq!(run(&["gamma", "--n", "11"], "").0, 1);
    assert_eq!(run(&["--help"], "").0, 0);
}

#[test]
fn pretty_output() {
    let (code, out, _) = run(&["--format", "pretty", "delta-coproduct", "--n", "4", "--route", "closed"], "");
    assert_eq!(code, 0);
    assert!(out.contains("7 δ_1^2 ⊗ δ_2 + 4 δ_2 ⊗ δ_2"), "{out}");
    let (_, out, _) = run(&["gamma", "--n", "3", "--route", "recursive", "--format", "pretty"], "");
    assert_eq!(out.trim(), "24 u^(3) + 36 u^(1,2) + 12 u^(2,1) + 24 u^(1,1,1)");
    let (_, out, _) = run(&["bracket", "--n", "2", "--m", "3", "--format", "pretty"], "");
    assert_eq!(out.trim(), "720 a_6'");
    let (_, out, _) = run(&["stirling", "--n", "5", "--k", "2", "--format", "pretty"], "");
    assert_eq!(out.trim(), "S(5,2) = 15");
}

#[test]
fn small_queries() {
    assert_eq!(json(&["partitions", "--n", "3"], "").as_array().unwrap().len(), 5);
    let v = json(&["primitives", "--degree", "2"], "");
    assert_eq!(v["dimension"], 1);
    assert_eq!(json(&["primitives", "--degree", "3"], "")["dimension"], 0);
    let v = json(&["bell", "--n", "4", "--k", "2"], "");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let v = json(&["delta-to-a", "--n", "2"], "");
    assert_eq!(v.as_array().unwrap().len(), 2);
    let v = json(&["antipode", "--n", "3"], "");
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn nseries_commands() {
    let f = r#"{"N":2,"M":3,"coeffs":[{"component":1,"index":[2,0],"value":"2"}]}"#;
    let g = json(&["nseries-revert", "-"], f);
    let g_path = temp_file("g.json", &g.to_string());
    let id = json(&["nseries-compose", "-", &g_path], f);
    assert_eq!(id["coeffs"], serde_json::json!([]));
    assert_eq!(id["N"], 2);
}

#[test]
fn check_suites() {
    for (suite, upto) in [("hopf", "6"), ("gamma", "5"), ("nseries", "3")] {
        let v = json(&["check", "--suite", suite, "--upto", upto], "");
        assert_eq!(v["counterexample"], Value::Null, "{suite}");
        assert!(v["checks"].as_u64().unwrap() > 0);
    }
}

#[test]
fn output_is_byte_stable() {
    let a = run(&["delta-coproduct", "--n", "5"], "").1;
    let b = run(&["delta-coproduct", "--n", "5"], "").1;
    assert_eq!(a, b);
}
