use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopf-frob"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// Emits the built-in corpus into a fresh directory.
fn corpus() -> (TempDir, PathBuf) {
    let dir = TempDir::new().unwrap();
    let path = dir.path().to_path_buf();
    let out = run(&["corpus", "--emit", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    (dir, path)
}

fn file(dir: &Path, name: &str) -> String {
    dir.join(format!("{name}.json")).to_str().unwrap().to_string()
}

#[test]
fn corpus_lists_the_builtin_groups() {
    let out = run(&["corpus"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for name in ["C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4"] {
        assert!(text.contains(name), "{name} missing from {text}");
    }
    let (_dir, path) = corpus();
    assert_eq!(fs::read_dir(&path).unwrap().count(), 16);
}

#[test]
fn lemma1_on_s3() {
    let (_dir, path) = corpus();
    let out = run(&["lemma1", &file(&path, "S3")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("MATCH").count(), 3, "{text}");
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn decompose_json_reports_degrees() {
    let (_dir, path) = corpus();
    let out = run(&["decompose", "--json", &file(&path, "Q8")]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let degrees: Vec<u64> = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["degree"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
}

#[test]
fn rational_q8_does_not_split() {
    let (_dir, path) = corpus();
    let out = run(&["--conductor", "1", "replay", &file(&path, "Q8"), "--block", "4"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn frobenius_certificates() {
    let (_dir, path) = corpus();
    let out = run(&["frobenius", &file(&path, "A4"), "--ring", "Z", "--ring", "Zp:2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("12/3 = 4"));
    let out = run(&["frobenius", "--json", &file(&path, "S3-dual")]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["overall"], Value::Bool(true));
}

#[test]
fn form_check_with_a_scaled_basis() {
    let (dir, path) = corpus();
    let basis = dir.path().join("scaled.txt");
    fs::write(&basis, "1 0\n0 1/3\n").unwrap();
    let c2 = file(&path, "C2");
    let b = basis.to_str().unwrap();
    assert_eq!(code(&run(&["form-check", &c2, "--basis", b, "--ring", "Z"])), 1);
    assert_eq!(code(&run(&["form-check", &c2, "--basis", b, "--ring", "Zp:3"])), 1);
    assert_eq!(code(&run(&["form-check", &c2, "--basis", b, "--ring", "Zp:2"])), 0);
    assert_eq!(code(&run(&["form-check", &c2, "--ring", "Z"])), 0);
}

#[test]
fn form_check_accepts_cyclotomic_entries() {
    let (dir, path) = corpus();
    let basis = dir.path().join("zeta.txt");
    // columns 1 and zeta_3 * g: unimodular over Z[zeta_3]
    fs::write(&basis, "1 0 0\n0 [0, 1]@3 0\n0 0 1\n").unwrap();
    let out = run(&["form-check", &file(&path, "C3"), "--basis", basis.to_str().unwrap(), "--ring", "OK:3"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn replay_s3_two_dimensional_block() {
    let (_dir, path) = corpus();
    let out = run(&["replay", "--json", &file(&path, "S3"), "--block", "2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["quotient"], "3");
    assert_eq!(v["identity_lhs"], serde_json::json!([["3", "0"], ["0", "3"]]));
}

#[test]
fn axioms_detect_a_broken_file() {
    let (dir, path) = corpus();
    let good = file(&path, "S3");
    assert_eq!(code(&run(&["axioms", &good])), 0);
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&good).unwrap()).unwrap();
    v["mul"][0][3] = Value::String("2".into());
    let broken = dir.path().join("broken.json");
    fs::write(&broken, v.to_string()).unwrap();
    let out = run(&["axioms", broken.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"), "{}", stdout(&out));
}

#[test]
fn integral_of_c2() {
    let (_dir, path) = corpus();
    let out = run(&["integral", "--json", &file(&path, "C2")]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["integral"], serde_json::json!(["1", "1"]));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["axioms", "/nonexistent/file.json"])), 2);
    let (dir, path) = corpus();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2\n3\n").unwrap();
    assert_eq!(code(&run(&["form-check", &file(&path, "C2"), "--basis", bad.to_str().unwrap()])), 2);
    let singular = dir.path().join("singular.txt");
    fs::write(&singular, "1 1\n1 1\n").unwrap();
    assert_eq!(code(&run(&["form-check", &file(&path, "C2"), "--basis", singular.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["frobenius", &file(&path, "C2"), "--ring", "Zp:4"])), 2);
    assert_eq!(code(&run(&["replay", &file(&path, "C2"), "--block", "7"])), 2);
}
