//! End-to-end runs of the compiled binary: exit codes, output shapes, and
//! byte determinism of the export formats.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anngraph"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr should be UTF-8")
}

#[test]
fn report_agrees_on_four_points() {
    let out = run(&["report", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("clique_number"));
    assert!(!text.contains("MISMATCH"), "{text}");
}

#[test]
fn report_emits_json_when_asked() {
    let out = run(&["report", "--n", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let entries = v["entries"].as_array().expect("entries array");
    assert!(entries.iter().any(|e| e["name"] == "chromatic_number"));
}

#[test]
fn report_covers_the_infinite_model() {
    let out = run(&["report", "--infinite"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("aleph_0"));
}

#[test]
fn report_rejects_sizes_outside_the_caps() {
    let out = run(&["report", "--n", "30"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("error"));
}

#[test]
fn report_requires_a_size_or_infinite() {
    let out = run(&["report"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn color_verifies_the_five_point_coloring() {
    let out = run(&["color", "--n", "5", "--verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("colored 30 vertices with 10 colors"),
        "{text}"
    );
    assert!(text.contains("proper: true, palette: 10, chain classes: true"));
}

#[test]
fn color_writes_a_loadable_coloring_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("colors.json");
    let out = run(&["color", "--n", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let dot = run(&[
        "export",
        "--n",
        "4",
        "--format",
        "dot",
        "--coloring",
        path.to_str().unwrap(),
    ]);
    assert_eq!(dot.status.code(), Some(0), "{}", stderr(&dot));
    assert!(stdout(&dot).contains("fillcolor"));
}

#[test]
fn export_json_is_byte_stable() {
    let first = run(&["export", "--n", "4", "--format", "json"]);
    let second = run(&["export", "--n", "4", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid JSON");
    assert_eq!(v["n"], 4);
    assert_eq!(v["vertices"].as_array().map(Vec::len), Some(14));
}

#[test]
fn export_dot_names_the_kind() {
    let out = run(&["export", "--n", "3", "--kind", "gamma", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("graph gamma_n3 {"));
}

#[test]
fn export_rejects_sizes_above_its_cap() {
    let out = run(&["export", "--n", "11", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_rejects_coloring_with_json_format() {
    let out = run(&[
        "export",
        "--n",
        "3",
        "--format",
        "json",
        "--coloring",
        "x.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("dot"));
}

#[test]
fn verify_runs_a_range_of_sizes() {
    let out = run(&["verify", "--n", "2..4", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS vertex_count n=2"));
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.contains("checks passed"));
}

#[test]
fn verify_emits_json_records() {
    let out = run(&["verify", "--n", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert!(v["checks"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn iso_roundtrips_a_seeded_shuffle() {
    let out = run(&["iso", "--n", "3", "--m", "2", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("restriction recovers the class map: yes"));
    assert!(text.contains("isomorphism found"));
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("config.json");
    std::fs::write(&path, r#"{"default_m": 2, "domination_cap": 3}"#).unwrap();
    let out = run(&["verify", "--n", "3", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("m=2"));
}

#[test]
fn config_file_with_unknown_fields_is_rejected() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("config.json");
    std::fs::write(&path, r#"{"default_m": 2, "typo": 1}"#).unwrap();
    let out = run(&["verify", "--n", "3", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bad config"));
}
