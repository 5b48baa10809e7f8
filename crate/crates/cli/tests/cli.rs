use std::process::{Command, Output};

use serde_json::Value;

fn voakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_voakit")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn verify_jacobi_passes() {
    let out = voakit(&["verify", "--check", "jacobi"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("[PASS] jacobi"));
}

#[test]
fn verify_conformal_equality_json() {
    let out = voakit(&["verify", "--check", "conformal-equality", "--n", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["version"], 1);
    assert_eq!(v["checks"][0]["status"], "pass");
    assert_eq!(v["summary"]["pass"], 1);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn conformal_equality_skips_off_the_embedding_level() {
    let out = voakit(&["verify", "--check", "conformal-equality", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["checks"][0]["status"], "skip");
}

#[test]
fn classify_f4_category_o() {
    let out = voakit(&["classify", "--algebra", "F4", "--n", "1", "--category", "O", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["count"], 4);
    assert_eq!(v["weights"].as_array().unwrap().len(), 4);
    assert_eq!(v["level"], "-5/2");
}

#[test]
fn classify_output_is_byte_deterministic() {
    let args = ["classify", "--algebra", "B4", "--n", "1", "--category", "O", "--format", "json"];
    let a = voakit(&args);
    let b = voakit(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_of(&a)["count"], 16);
}

#[test]
fn classify_dominant_b4() {
    let out = voakit(&["classify", "--algebra", "B4", "--n", "1", "--category", "dominant", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["count"], 2);
    assert_eq!(v["weights"][1]["fund"], serde_json::json!(["0", "0", "0", "1"]));
}

#[test]
fn admissible_reports_simple_coroots() {
    let out = voakit(&["admissible", "--weight", "-3/2,0,0,0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["admissible"], true);
    assert_eq!(v["simple_coroots"].as_array().unwrap().len(), 5);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("voakit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = voakit(&["verify", "--check", "branching", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["checks"][0]["check_name"], "branching");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--bogus"][..],
        &["verify"],
        &["verify", "--check", "nope"],
        &["classify", "--algebra", "G2"],
        &["admissible", "--weight", "1,2"],
    ] {
        let out = voakit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
