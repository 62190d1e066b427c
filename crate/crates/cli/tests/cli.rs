use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cobar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cobar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn build_sphere_and_nerve() {
    let dir = tempfile::tempdir().unwrap();
    let s2 = path(dir.path(), "s2.json");
    let o = cobar(&["build", "sphere", "2", "-o", &s2, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["counts"], serde_json::json!([0, 1]));

    let o = cobar(&["build", "nerve", "z3", "--trunc", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let space = json(&o);
    let counts: Vec<usize> = (1..=3).map(|n| space["simplices"][n.to_string()].as_array().unwrap().len()).collect();
    assert_eq!(counts, vec![2, 4, 8]);
}

#[test]
fn build_json_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.json");
    std::fs::write(&bad, r#"{"simplices": {"1": ["a"]}, "faces": {"a": ["x", "*"]}}"#).unwrap();
    let o = cobar(&["build", "json", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid simplicial set"));

    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(cobar(&["build", "json", &bad]).status.code(), Some(2));
    assert_eq!(cobar(&["pi1", &path(dir.path(), "missing.json")]).status.code(), Some(2));
}

#[test]
fn build_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.json");
    let b = path(dir.path(), "b.json");
    assert!(cobar(&["build", "nerve", "s3", "--trunc", "2", "-o", &a]).status.success());
    assert!(cobar(&["build", "json", &a, "-o", &b]).status.success());
    assert_eq!(std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
}

#[test]
fn pi1_examples() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = path(dir.path(), "z2.json");
    assert!(cobar(&["build", "nerve", "z2", "--trunc", "2", "-o", &z2]).status.success());
    let o = cobar(&["pi1", &z2]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("finite(2)") && text.contains("group of order 2"), "{text}");

    let s2 = path(dir.path(), "s2.json");
    assert!(cobar(&["build", "sphere", "2", "-o", &s2]).status.success());
    let text = stdout(&cobar(&["pi1", &s2]));
    assert!(text.contains("finite(1)") && text.contains("trivial group"), "{text}");

    let s1 = path(dir.path(), "s1.json");
    assert!(cobar(&["build", "sphere", "1", "-o", &s1]).status.success());
    let o = cobar(&["pi1", &s1, "--max-elements", "8"]);
    let text = stdout(&o);
    assert!(
        text.contains("free on 1 generator") && text.contains("no inverses found") && text.contains("Kan"),
        "{text}"
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(cobar(&["pi1", &s1, "--max-elements", "8", "--strict"]).status.code(), Some(3));
}

#[test]
fn loop_homology_examples() {
    let o = cobar(&["loop-homology", "sphere2", "-N", "5", "-L", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["dims"], serde_json::json!([1, 1, 1, 1, 1, 1]));

    let dir = tempfile::tempdir().unwrap();
    let s3 = path(dir.path(), "s3.json");
    assert!(cobar(&["build", "sphere", "3", "-o", &s3]).status.success());
    let o = cobar(&["loop-homology", &s3, "-N", "6", "-L", "7", "--format", "json"]);
    assert_eq!(json(&o)["dims"], serde_json::json!([1, 0, 1, 0, 1, 0, 1]));
    assert_eq!(o.status.code(), Some(0));

    let o = cobar(&["loop-homology", "point", "-N", "2", "--format", "json"]);
    assert_eq!(json(&o)["dims"], serde_json::json!([1, 0, 0]));
}

#[test]
fn compare_examples() {
    let dir = tempfile::tempdir().unwrap();
    let s2 = path(dir.path(), "s2.json");
    let collapse = path(dir.path(), "collapse.json");
    assert!(cobar(&["build", "sphere", "2", "-o", &s2]).status.success());
    assert!(cobar(&["build", "collapse", &s2, "-o", &collapse]).status.success());
    let o = cobar(&["compare", &collapse, "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["quasi_isomorphism"]["overall"], "fail");
    assert_eq!(r["omega_quasi_isomorphism"]["overall"], "fail");

    let map = path(dir.path(), "z2z4.json");
    assert!(cobar(&["build", "nerve-map", "z2", "z4", "--hom", "0,2", "--trunc", "6", "-o", &map]).status.success());
    let o = cobar(&["compare", &map, "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["quasi_isomorphism"]["overall"], "pass");
    assert_eq!(r["omega_quasi_isomorphism"]["overall"], "fail");

    let bad_hom = cobar(&["build", "nerve-map", "z2", "z3", "--hom", "0,1"]);
    assert_eq!(bad_hom.status.code(), Some(2));
}

#[test]
fn nogo_examples() {
    let o = cobar(&["nogo", "sphere2", "--group", "z2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["witness"]["verdict"], "impossible");

    let o = cobar(&["nogo", "point", "--group", "trivial"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("possible"));

    let dir = tempfile::tempdir().unwrap();
    let z2 = path(dir.path(), "z2.json");
    assert!(cobar(&["build", "nerve", "z2", "-o", &z2]).status.success());
    let o = cobar(&["nogo", &z2, "--group", "z2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not cocommutative"));
}

#[test]
fn chains_and_coalgebra_files() {
    let dir = tempfile::tempdir().unwrap();
    let c = path(dir.path(), "cp2.json");
    let o = cobar(&["chains", "cp2", "-o", &c, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["cocommutative"], true);
    let o = cobar(&["loop-homology", &c, "-N", "3", "--format", "json"]);
    assert_eq!(json(&o)["dims"], serde_json::json!([1, 1, 0, 0]));
}

#[test]
fn lie_and_corpus() {
    let o = cobar(&["lie", "2", "2", "--max-degree", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["dims_by_length"].as_array().unwrap().len(), 10);
    assert_eq!(json(&o)["dims_by_length"][4], 6);
    assert_eq!(cobar(&["lie", "0"]).status.code(), Some(2));
    assert!(stdout(&cobar(&["corpus"])).contains("torus"));
}

#[test]
fn output_is_deterministic() {
    let a = cobar(&["loop-homology", "torus", "-N", "3", "-L", "5", "--format", "json"]);
    let b = cobar(&["loop-homology", "torus", "-N", "3", "-L", "5", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(cobar(&["loop-homology", "no-such-thing"]).status.code(), Some(2));
    assert_eq!(cobar(&["loop-homology", "point", "-N", "0"]).status.code(), Some(2));
    assert_eq!(cobar(&["nogo", "point", "--group", "z0"]).status.code(), Some(2));
}
