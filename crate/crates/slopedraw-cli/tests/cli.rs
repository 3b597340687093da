use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_slopedraw"))
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../slopedraw/data").join(rel)
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn table_matches_bundled_expectation() {
    let out = bin().args(["--table", "fmax", "--max", "42"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(out.stdout, std::fs::read(data("fmax_42.txt")).unwrap());
}

#[test]
fn auto_writes_json_and_reports_pass() {
    let dir = scratch("auto");
    let input = dir.join("petersen.g6");
    std::fs::write(&input, "IheA@GUAo\n").unwrap();
    let out = bin().arg("--mode").arg("auto").arg(&input).output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("petersen: pass"));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 10);
    assert_eq!(v["edges"].as_array().unwrap().len(), 15);
}

#[test]
fn basic_svg_has_four_line_styles_and_json_verifies() {
    let dir = scratch("basic");
    let input = dir.join("k4.txt");
    std::fs::write(&input, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let (svg, json) = (dir.join("out.svg"), dir.join("out.json"));
    let out = bin().args(["--mode", "basic", "--svg"]).arg(&svg).arg("--json").arg(&json).arg(&input).output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&svg).unwrap();
    let styles: BTreeSet<&str> =
        text.lines().filter(|l| l.starts_with("<line")).map(|l| l.split("stroke=").nth(1).unwrap()).collect();
    assert_eq!(styles.len(), 4);

    let out = bin().args(["--mode", "verify"]).arg(&json).output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("out: pass"));
}

#[test]
fn tampered_json_fails_verification() {
    let dir = scratch("tamper");
    let json = dir.join("k4.json");
    let input = dir.join("k4.txt");
    std::fs::write(&input, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    assert!(bin().arg("--json").arg(&json).arg(&input).output().unwrap().status.success());
    let mut v: serde_json::Value = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    v["vertices"][0]["x"] = serde_json::json!({"0": "1/3"});
    std::fs::write(&json, v.to_string()).unwrap();
    let out = bin().args(["--mode", "verify"]).arg(&json).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("FAIL"));
}

#[test]
fn basic_fallback_has_its_own_status() {
    // A 3-connected triangle-free graph on ten vertices with no basic construction.
    let corpus = std::fs::read_to_string(data("corpus/cubic_10.g6")).unwrap();
    let dir = scratch("fallback");
    let input = dir.join("ten.g6");
    std::fs::write(&input, corpus).unwrap();
    let out = bin().args(["--mode", "basic", "-q"]).arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    let out = bin().args(["--mode", "auto", "-q"]).arg(&input).output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn corpus_directory_and_output_directory() {
    let dir = scratch("corpus");
    let out = bin().args(["--corpus"]).arg(data("corpus")).arg("--json").arg(dir.join("json")).arg("-q").output().unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("621 graphs: 621 passed"));
    assert_eq!(std::fs::read_dir(dir.join("json")).unwrap().count(), 621);
}

#[test]
fn random_graphs_are_seeded() {
    let run = |seed: &str| bin().args(["--random-cubic", "16", "--count", "3", "--seed", seed, "--svg"]).output().unwrap();
    assert_eq!(run("9").status.code(), Some(2), "--svg needs a path");
    let dir = scratch("random");
    let svg = |seed: &str| {
        let out = bin()
            .args(["--random-cubic", "16", "--count", "3", "--seed", seed, "--svg"])
            .arg(dir.join(seed))
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", stderr(&out));
        std::fs::read(dir.join(seed).join("random16_0002.svg")).unwrap()
    };
    assert_eq!(svg("9"), svg("9"));
    assert_ne!(svg("9"), svg("10"));
    let out = bin()
        .args(["--random-cubic", "16", "--count", "3", "--seed", "9", "--json"])
        .arg(dir.join("r"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(std::fs::read_dir(dir.join("r")).unwrap().count(), 3);
}

#[test]
fn unreadable_input() {
    let out = bin().arg("/nonexistent/graph.txt").output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    let dir = scratch("bad");
    let input = dir.join("deg4.txt");
    std::fs::write(&input, "5 4\n0 1\n0 2\n0 3\n0 4\n").unwrap();
    let out = bin().arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("degree"));
}
