use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cherednik2"))
}

fn write_params(dir: &TempDir, body: &str) -> PathBuf {
    let path = dir.path().join("params.json");
    std::fs::write(&path, body).unwrap();
    path
}

fn table_params(dir: &TempDir) -> PathBuf {
    write_params(dir, r#"{"r": 3, "c0": "1", "d": ["5", "0", "-5"]}"#)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn labels_lists_every_label() {
    let dir = TempDir::new().unwrap();
    let p = table_params(&dir);
    let o = run(&["labels", "--params", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for l in ["row:0", "col:2", "pair:0,1", "pair:1,2"] {
        assert!(out.contains(l), "missing {l} in {out}");
    }
}

#[test]
fn hom_check_with_brute_force() {
    let dir = TempDir::new().unwrap();
    let p = table_params(&dir);
    let o = run(&["--json", "hom", "check", "--params", p.to_str().unwrap(), "--from", "pair:1,2", "--to", "pair:0,1", "--brute"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params_digest"], "r=3;c0=1;d=5,0,-5");
    assert!(v["command"].as_str().unwrap().contains("hom check"));
    assert_eq!(v["result"]["brute_force_dimension"], 2);
    assert_eq!(v["result"]["report"]["exists"], true);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let p = table_params(&dir);
    let p = p.to_str().unwrap();
    let ok = run(&["verify", "--params", p, "--label", "row:0", "--elem", "x1^10*x2^10@T", "--oracle"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = run(&["verify", "--params", p, "--label", "row:0", "--elem", "x1@T", "--oracle"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let p = write_params(&dir, r#"{"r": 3, "c0": "1", "d": ["5", "0", "-4"]}"#);
    let o = run(&["labels", "--params", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["hom", "check", "--params", "/nonexistent/params.json", "--from", "row:0", "--to", "row:1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn repro_example35_passes() {
    let o = run(&["repro", "example35"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn diagram_writes_dot() {
    let dir = TempDir::new().unwrap();
    let p = table_params(&dir);
    let dot = dir.path().join("g.dot");
    let o = run(&["diagram", "--params", p.to_str().unwrap(), "--dot", dot.to_str().unwrap(), "--reduce"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph morphisms {"));
    assert_eq!(text.matches(" -> ").count(), 10);
}

#[test]
fn act_applies_group_element() {
    let dir = TempDir::new().unwrap();
    let p = table_params(&dir);
    let o = run(&["act", "--params", p.to_str().unwrap(), "--label", "pair:0,1", "--elem", "x1^2@T1", "--op", "w:0,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x2^2"), "{}", stdout(&o));
}
