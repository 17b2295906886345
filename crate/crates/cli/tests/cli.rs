use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn fpforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpforge")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn write(dir: &TempDir, name: &str, value: &Value) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn triangle(dir: &TempDir) -> PathBuf {
    write(dir, "triangle.json", &json!({"vertices": [0, 1, 2], "facets": [[0, 1, 2]]}))
}

fn entry(id: &str, torsion: &[u64]) -> Value {
    let h1 = if torsion.is_empty() { json!({"rank": 0}) } else { json!({"rank": 0, "torsion": torsion}) };
    json!({
        "id": id,
        "kind": {"declared": {"note": "test fixture"}},
        "homology": [{"ring": "Z", "degrees": [{"rank": 0}, h1], "complete": true}],
        "simply_connected": torsion.is_empty(),
        "quotient_is_finite": true,
        "degree": if torsion.is_empty() { json!("infinite") } else { json!(torsion[0]) },
    })
}

fn recurrent_spec(dir: &TempDir) -> PathBuf {
    write(
        dir,
        "sigma.json",
        &json!({
            "registry": [entry("L5", &[5]), entry("U", &[])],
            "base_id": "L5",
            "exceptions": [],
            "positive_tail": {"recurrent": ["L5"]},
            "negative_tail": {"constant": "U"},
        }),
    )
}

#[test]
fn double_of_triangle() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("double.json");
    let report = stdout_json(&fpforge(&["double", "--complex", s(&triangle(&dir)), "--out", s(&out)]));
    assert_eq!(report["f_vector"], json!([6, 12, 8]));
    assert_eq!(report["is_flag"], json!(true));
    let written: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let again = stdout_json(&fpforge(&["homology", "--complex", s(&out)]));
    assert_eq!(again["f_vector"], json!([6, 12, 8]));
    assert!(written["facets"].as_array().unwrap().len() == 8);
}

#[test]
fn double_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let t = triangle(&dir);
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    stdout_json(&fpforge(&["double", "--complex", s(&t), "--out", s(&a)]));
    stdout_json(&fpforge(&["double", "--complex", s(&t), "--out", s(&b)]));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn homology_of_a_circle() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.json", &json!({"vertices": [0, 1, 2], "facets": [[0, 1], [1, 2], [0, 2]]}));
    let report = stdout_json(&fpforge(&["homology", "--complex", s(&c), "--ring", "F3"]));
    assert_eq!(report["homology"][0]["ring"], json!("F3"));
    assert_eq!(report["homology"][0]["degrees"][1]["rank"], json!(1));
}

#[test]
fn decide_recurrent_torsion() {
    let dir = TempDir::new().unwrap();
    let spec = recurrent_spec(&dir);
    let no = stdout_json(&fpforge(&["decide", "--sigma", s(&spec), "--ring", "F5", "--k", "2"]));
    assert_eq!(no["verdict"], json!("NO"));
    assert_eq!(no["witness"]["entry"], json!("L5"));
    assert_eq!(no["witness"]["degree"], json!(1));
    let yes = stdout_json(&fpforge(&["decide", "--sigma", s(&spec), "--ring", "F7", "--k", "2"]));
    assert_eq!(yes["verdict"], json!("YES"));
    let q = stdout_json(&fpforge(&["decide", "--sigma", s(&spec), "--ring", "Q", "--k", "FP"]));
    assert_eq!(q["verdict"], json!("YES"));
    let fp = stdout_json(&fpforge(&["decide", "--sigma", s(&spec), "--finitely-presented"]));
    assert_eq!(fp["verdict"], json!("NO"));
}

#[test]
fn present_triangle() {
    let dir = TempDir::new().unwrap();
    let t = triangle(&dir);
    let report = stdout_json(&fpforge(&["present", "--complex", s(&t)]));
    assert_eq!(report["generators"], json!(3));
    assert_eq!(report["relators"], json!(2));
    assert_eq!(report["abelianization"]["free_rank"], json!(2));
    let text = dir.path().join("p.txt");
    let js = dir.path().join("p.json");
    stdout_json(&fpforge(&["present", "--complex", s(&t), "--out", s(&text)]));
    stdout_json(&fpforge(&["present", "--complex", s(&t), "--out", s(&js)]));
    assert!(fs::read_to_string(&text).unwrap().contains("rel "));
    let parsed: Value = serde_json::from_str(&fs::read_to_string(&js).unwrap()).unwrap();
    assert!(parsed.is_object());
}

#[test]
fn cover_of_square() {
    let dir = TempDir::new().unwrap();
    write(&dir, "square.json", &json!({"vertices": [0, 1, 2, 3], "facets": [[0, 1], [1, 2], [2, 3], [0, 3]]}));
    let cover = write(
        &dir,
        "cover.json",
        &json!({"base": "square.json", "degree": 2, "voltages": [{"edge": [3, 0], "images": [2, 1]}]}),
    );
    let report = stdout_json(&fpforge(&["cover", "--cover", s(&cover), "--double"]));
    assert_eq!(report["total_f_vector"], json!([8, 8]));
    assert_eq!(report["covering_verified"], json!(true));
    assert_eq!(report["connected"], json!(true));
    assert_eq!(report["double"]["degree"], json!(2));
    assert_eq!(report["double"]["covering_verified"], json!(true));
}

#[test]
fn spectrum_of_pentagon() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.json", &json!({"edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]}));
    let report = stdout_json(&fpforge(&["spectrum", "--graph", s(&g), "--lmax", "10"]));
    assert_eq!(report["spectrum"], json!([5]));
    assert_eq!(report["certified"], json!(true));
}

#[test]
fn related_and_constants() {
    let r = stdout_json(&fpforge(&["related", "--h", "10", "--h2", "15", "--ceiling", "30", "--k", "2"]));
    assert_eq!(r["related"], json!(true));
    let c = stdout_json(&fpforge(&["sigma", "constants", "--d", "2", "--m", "3", "--r", "3,8,4,20"]));
    assert_eq!(c["constants"], json!([10, 11, 25]));
    let b = stdout_json(&fpforge(&["sigma", "kernel-bound", "--m", "7", "--d", "1"]));
    assert_eq!(b["bound"], json!(7.0));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(fpforge(&["double", "--complex", s(&missing)]).status.code(), Some(2));
    assert_eq!(fpforge(&["no-such-command"]).status.code(), Some(2));
    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{not json").unwrap();
    assert_eq!(fpforge(&["double", "--complex", s(&garbage)]).status.code(), Some(2));
    let disconnected = write(&dir, "g.json", &json!({"edges": [[0, 1]], "vertices": [5]}));
    assert_eq!(fpforge(&["spectrum", "--graph", s(&disconnected)]).status.code(), Some(1));
    assert_eq!(fpforge(&["related", "--h", "10", "--h2", "15", "--ceiling", "5", "--k", "2"]).status.code(), Some(2));
}

#[test]
fn failed_write_leaves_no_partial_file() {
    let dir = TempDir::new().unwrap();
    let t = triangle(&dir);
    let out = dir.path().join("absent").join("double.json");
    assert_eq!(fpforge(&["double", "--complex", s(&t), "--out", s(&out)]).status.code(), Some(2));
    assert!(!out.exists());
}
