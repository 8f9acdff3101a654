//! The command-line interface: outputs, exit codes, files and the cache.

use std::path::Path;
use std::process::{Command, Output};

fn mrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mrep")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(file: &str) -> String {
    format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn gldim_of_the_duplicated_a2() {
    let o = mrep(&["gldim", "--quiver", &data("a2.q"), "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn thm1_suite_passes() {
    let o = mrep(&["verify", "thm1", "--quiver", &data("a2.q"), "--m", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["result"]["summary"]["achievable"], serde_json::json!([2, 3, 4]));
}

#[test]
fn representation_infinite_catalog_is_a_budget_signal() {
    let o = mrep(&["indecs", "--quiver", &data("kron.q"), "--m", "1", "--budget", "200"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn input_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.q");
    std::fs::write(&bad, "vertex 1\narrow a: 1 -> 9\n").unwrap();
    let o = mrep(&["gldim", "--quiver", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 15"));
    assert_eq!(mrep(&["gldim"]).status.code(), Some(2));
    assert_eq!(mrep(&["verify", "nope", "--quiver", "a2"]).status.code(), Some(2));
    assert_eq!(mrep(&["construct", "thm32", "--d", "9", "--quiver", "a2"]).status.code(), Some(2));
    assert_eq!(mrep(&["construct", "lem47", "--d", "5", "--quiver", "a2"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tau-orbits", "--quiver", "a3", "--json"][..],
        &["verify", "lem31_random", "--quiver", "a3", "--seed", "4", "--samples", "20", "--json"][..],
        &["construct", "E", "--i", "1", "--quiver", "kronecker", "--prime", "3", "--json"][..],
    ] {
        assert_eq!(stdout(&mrep(args)), stdout(&mrep(args)), "{args:?}");
    }
}

#[test]
fn construct_then_gldim_end() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("m.json");
    let f = file.to_str().unwrap();
    let o = mrep(&["construct", "thm32", "--d", "4", "--quiver", "a2", "--out", f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&mrep(&["gldim-end", "--gencog", f, "--quiver", "a2"])), "4\n");
    // the file is tied to the algebra
    assert_eq!(mrep(&["gldim-end", "--gencog", f, "--quiver", "a2", "--prime", "101"]).status.code(), Some(2));

    let o = mrep(&["construct", "E", "--i", "2", "--quiver", "kronecker", "--prime", "3", "--out", f]);
    assert_eq!(o.status.code(), Some(0));
    let o = mrep(&["gldim-end", "--gencog", f, "--quiver", "kronecker", "--prime", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["lower"], "4");
    assert_eq!(v["result"]["upper_on_window"], 4);
}

#[test]
fn lem48_construction_reports_infinity() {
    let o = mrep(&["construct", "lem48", "--quiver", "kronecker", "--prime", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gl.dim End = ∞"));
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("ar.dot");
    let o = mrep(&["ar-quiver", "--quiver", "a2", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("style=dashed"));
}

fn cache_files(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut v: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

#[test]
fn catalog_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["indecs", "--quiver", "a3", "--json", "--cache", cache];
    let fresh = mrep(&args);
    let files = cache_files(dir.path());
    assert_eq!(files.len(), 1);
    let cached = mrep(&args);
    assert_eq!(stdout(&fresh), stdout(&cached));
    assert!(cached.stderr.is_empty());

    // a different prime is a different fingerprint
    mrep(&["indecs", "--quiver", "a3", "--prime", "101", "--cache", cache]);
    assert_eq!(cache_files(dir.path()).len(), 2);

    // a truncated entry is reported and rebuilt
    let text = std::fs::read(&files[0]).unwrap();
    std::fs::write(&files[0], &text[..text.len() / 2]).unwrap();
    let again = mrep(&args);
    assert_eq!(again.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&again.stderr).contains("warning"));
    assert_eq!(stdout(&again), stdout(&fresh));
    assert_eq!(std::fs::read(&files[0]).unwrap(), text);
}
