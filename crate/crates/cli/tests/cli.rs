use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn modsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modsing")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn catalog_file(dir: &Path, name: &str) -> String {
    let out = modsing(&["catalog", "build", name]);
    assert!(out.status.success());
    write(dir, &format!("{name}.json"), &String::from_utf8(out.stdout).unwrap())
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_sec3_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = catalog_file(dir.path(), "example-sec3");
    let out = modsing(&["analyze", &path, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "isolated");
    assert_eq!(v["group_order"], 6);
    assert_eq!(v["h_order"], 3);
    assert_eq!(v["origin"]["generator_degrees"], serde_json::json!([2, 4, 6]));
    assert_eq!(v["fixators"][0]["fixator_order"], 3);
    assert_eq!(v["reduction"]["quotient_order"], 2);
    assert_eq!(v["reduction"]["p_divides_quotient"], false);
}

#[test]
fn analyze_trivial_group_is_smooth() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "trivial.json", r#"{"field": {"p": 3}, "dim": 2, "generators": []}"#);
    let out = modsing(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "smooth");
}

#[test]
fn analyze_plane_extension_is_smooth() {
    let dir = tempfile::tempdir().unwrap();
    let path = catalog_file(dir.path(), "ext-case3-sl2-3");
    let out = modsing(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "smooth");
    assert_eq!(v["case"]["kind"], "invariant_plane_transvective");
    assert_eq!(v["case"]["pipeline"]["completed"], true);
}

#[test]
fn analyze_text_mode_and_inconclusive_exit() {
    let dir = tempfile::tempdir().unwrap();
    let path = catalog_file(dir.path(), "example-sec3");
    let out = modsing(&["analyze", &path, "--text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: isolated"), "{text}");
    // a cap of 1 cannot settle the degree-2 question at the origin
    let out = modsing(&["analyze", &path, "--degree-cap", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["verdict"], "inconclusive");
}

#[test]
fn input_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"field": {"p": 6}, "dim": 2, "generators": []}"#);
    assert_eq!(modsing(&["analyze", &bad]).status.code(), Some(1));
    assert_eq!(modsing(&["analyze", "/nonexistent.json"]).status.code(), Some(1));
    let garbage = write(dir.path(), "garbage.json", "not json");
    assert_eq!(modsing(&["analyze", &garbage]).status.code(), Some(1));
    assert_eq!(modsing(&["catalog", "build", "nope"]).status.code(), Some(1));
    assert!(!modsing(&["analyze", &garbage, "--json", "--text"]).status.success());
}

#[test]
fn invariant_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let t = write(dir.path(), "t.json", r#"{"field": {"p": 3}, "dim": 2, "generators": [[[1, 1], [0, 1]]]}"#);
    let v = json(&modsing(&["invariants", &t, "--max-degree", "4"]));
    assert_eq!(v["dimensions"], serde_json::json!([1, 1, 1, 2, 2]));
    let triv = write(dir.path(), "triv.json", r#"{"field": {"p": 3}, "dim": 2, "generators": []}"#);
    let v = json(&modsing(&["invariants", &triv, "--max-degree", "2"]));
    assert_eq!(v["dimensions"], serde_json::json!([1, 2, 3]));
    let sec3 = catalog_file(dir.path(), "example-sec3");
    let v = json(&modsing(&["invariants", &sec3, "--max-degree", "6"]));
    assert_eq!(v["generator_degrees"], serde_json::json!([2, 4, 6]));
}

#[test]
fn verify_paper_cases() {
    for case in ["ting1", "ting2", "ting3", "sec3", "splitting", "induced"] {
        let out = modsing(&["verify-paper", "--case", case]);
        assert_eq!(out.status.code(), Some(0), "{case}");
        let checks = json(&out);
        assert!(!checks.as_array().unwrap().is_empty());
    }
    let out = modsing(&["verify-paper", "--case", "all", "--text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(!modsing(&["verify-paper", "--case", "ting9"]).status.success());
}

#[test]
fn catalog_list_names_every_group() {
    let out = modsing(&["catalog", "list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("sl2-4\t") && l.ends_with("order 60")));
    assert!(text.lines().count() >= 30);
}

#[test]
fn analyze_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = catalog_file(dir.path(), "ext-case2-dual-sl2-3");
    let a = modsing(&["analyze", &path]).stdout;
    let b = modsing(&["analyze", &path]).stdout;
    assert_eq!(a, b);
}
