//! End-to-end tests of the binary: exit codes, JSON schema, determinism,
//! and the corpus runner.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hh1"))
}

fn workspace_file(rel: &str) -> PathBuf {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.pop();
    p.pop();
    p.push(rel);
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn hh1")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn analyze_kx3_json_schema() {
    let file = workspace_file("algebras/kx3.alg");
    let out = run(&["analyze", file.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["algebra"]["dim"], 3);
    assert_eq!(v["algebra"]["field"], "Q");
    assert_eq!(v["algebra"]["graded"], true);
    assert_eq!(v["hh1"]["dim"], 2);
    assert_eq!(v["hh1"]["rad_dim"], 2);
    assert_eq!(v["lie"]["solvable"], true);
    assert_eq!(v["lie"]["strongly_solvable"], true);
    assert_eq!(v["lie"]["derived_dims"], serde_json::json!([2, 1, 0]));
    assert_eq!(v["sigma"]["0"], serde_json::json!([]));
    assert_eq!(v["sigma"]["1"], serde_json::json!(["x||x"]));
    assert!(v["criteria"].as_array().unwrap().len() >= 8);
    assert_eq!(v["oracle"]["agree"], true);
    assert_eq!(v["oracle"]["dim"], 2);
}

#[test]
fn analyze_output_is_deterministic() {
    let file = workspace_file("algebras/kxy_comm_gf2.alg");
    let a = run(&["analyze", file.to_str().unwrap(), "--format", "json"]);
    let b = run(&["analyze", file.to_str().unwrap(), "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn oracle_flag_does_not_change_verdicts() {
    let file = workspace_file("algebras/qci22.alg");
    let on = run(&[
        "analyze",
        file.to_str().unwrap(),
        "--format",
        "json",
        "--oracle",
        "on",
    ]);
    let off = run(&[
        "analyze",
        file.to_str().unwrap(),
        "--format",
        "json",
        "--oracle",
        "off",
    ]);
    let mut von: serde_json::Value = serde_json::from_str(&stdout(&on)).unwrap();
    let voff: serde_json::Value = serde_json::from_str(&stdout(&off)).unwrap();
    assert!(von.get("oracle").is_some());
    assert!(voff.get("oracle").is_none());
    von.as_object_mut().unwrap().remove("oracle");
    assert_eq!(von, voff);
}

#[test]
fn missing_file_exits_3() {
    let out = run(&["hh1", "/definitely/not/here.alg"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_error_exits_3_with_position() {
    let dir = std::env::temp_dir().join("hh1-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.alg");
    std::fs::write(
        &file,
        "field Q\nvertex e1 e2\narrow x e1 e2\narrow a e1 e2\nrel x*a\n",
    )
    .unwrap();
    let out = run(&["hh1", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains("line 5"), "stderr: {err}");
}

#[test]
fn basis_and_sigma_commands() {
    let file = workspace_file("algebras/kx3_gf3.alg");
    let out = run(&["basis", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("B_2 (1): x*x"));
    let out = run(&["sigma", file.to_str().unwrap(), "--i", "0"]);
    assert!(stdout(&out).contains("x||e"));
}

#[test]
fn bracket_table_command() {
    let file = workspace_file("algebras/kx3.alg");
    let out = run(&["bracket-table", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[v1, v2] = v2"), "got: {text}");
}

#[test]
fn truncate_flag() {
    let dir = std::env::temp_dir().join("hh1-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("kx5.alg");
    std::fs::write(&file, "field Q\nvertex e\narrow x e e\nrel x^5\n").unwrap();
    let out = run(&["basis", file.to_str().unwrap(), "--truncate", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dimension 3"), "got: {text}");
}

#[test]
fn corpus_run_single_and_sweep() {
    let out = run(&[
        "corpus", "run", "--family", "D1A1k", "--k", "2", "--char", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("solvable=true"), "got: {text}");

    let out = run(&[
        "corpus", "run", "--family", "qci", "--ni", "2,2", "--q", "2", "--char", "5", "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["entries"][0]["lie"]["strongly_solvable"], true);
}

#[test]
fn loop_cycle_example_has_proper_radical_part_in_char_2() {
    let file = workspace_file("algebras/loop_cycle_gf2.alg");
    let out = run(&["analyze", file.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["hh1"]["rad_equals_full"], false);
    assert_eq!(v["lie"]["solvable"], true);
}
