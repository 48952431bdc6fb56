use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latlevel"))
        .args(args)
        .env_remove("LATLEVEL_MAX_GROUND")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn level_text_for_l1() {
    let o = run(&["level", "--input", data("L1").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("h = (1, 5, 4)"), "{s}");
    assert!(s.contains("LEVEL: yes"));
}

#[test]
fn level_json_for_l2() {
    let v = json(&["level", "--json", "--input", data("L2").to_str().unwrap()]);
    assert_eq!(v["h"], serde_json::json!([1, 4, 6, 2, 0]));
    assert_eq!(v["is_level"], false);
    assert_eq!(
        v["s_facets"],
        serde_json::json!([[1, 2], [1, 3, 4], [2, 3, 4]])
    );
}

#[test]
fn validate_reports_n5_witness() {
    let o = run(&["validate", "--input", data("N5").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("meet_distributive: false"));
    assert!(s.contains("witness: 1"));
    let v = json(&[
        "validate",
        "--json",
        "--input",
        data("N5").to_str().unwrap(),
    ]);
    assert_eq!(v["witness"], "1");
    assert_eq!(v["valid"], true);
}

#[test]
fn h_machinery_refuses_n5_unless_forced() {
    let n5 = data("N5");
    let o = run(&["hvector", "--input", n5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["hvector", "--force", "--input", n5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("WARNING"));
}

#[test]
fn dual_ideal_json_for_l1() {
    let v = json(&[
        "dual-ideal",
        "--json",
        "--input",
        data("L1").to_str().unwrap(),
    ]);
    let gens = v.as_array().unwrap();
    assert_eq!(gens.len(), 12);
    assert!(gens.contains(&serde_json::json!({"family": "iii", "x": [2], "y": [1, 3]})));
}

#[test]
fn oracle_check_passes_on_corpus() {
    for name in ["L1", "L2", "B3-minus-13", "N5"] {
        let v = json(&[
            "oracle-check",
            "--json",
            "--input",
            data(name).to_str().unwrap(),
        ]);
        for c in v["checks"].as_array().unwrap() {
            assert_eq!(c["pass"], true, "{name}: {c}");
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["level"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let l1 = data("L1");
    let o = run(&[
        "level",
        "--max-ground",
        "100000",
        "--input",
        l1.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "level",
        "--max-ground",
        "3",
        "--input",
        l1.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\"elements\": [\"a\", \"b\"], \"covers\": [[\"a\",\"b\"],[\"b\",\"a\"]]}",
    )
    .unwrap();
    let o = run(&["validate", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let not_json = dir.path().join("x.json");
    std::fs::write(&not_json, "not json").unwrap();
    assert_eq!(
        run(&["level", "--input", not_json.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn corpus_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["B3", "JP(5)"] {
        let o = run(&["corpus", if name == "B3" { "Bn(3)" } else { name }]);
        assert!(o.status.success());
        let path = dir.path().join("in.json");
        std::fs::write(&path, &o.stdout).unwrap();
        let v = json(&["oracle-check", "--json", "--input", path.to_str().unwrap()]);
        assert!(v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["pass"] == true));
    }
    assert_eq!(run(&["corpus", "nope"]).status.code(), Some(2));
}

#[test]
fn scan_three_excludes_1330() {
    let v = json(&["scan", "--json", "--n", "3"]);
    let hs = v["h_vectors"].as_array().unwrap();
    assert_eq!(hs.len(), 4);
    assert!(!hs.contains(&serde_json::json!([1, 3, 3, 0])));
}

#[test]
fn text_and_json_agree_and_repeat() {
    let l2 = data("L2");
    let a = stdout(&run(&["hvector", "--input", l2.to_str().unwrap()]));
    let b = stdout(&run(&["hvector", "--input", l2.to_str().unwrap()]));
    assert_eq!(a, b);
    assert!(a.contains("h = (1, 4, 6, 2)"));
    let v = json(&["hvector", "--json", "--input", l2.to_str().unwrap()]);
    assert_eq!(v["h"], serde_json::json!([1, 4, 6, 2, 0]));
    assert_eq!(v["n"], 4);
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dual-ideal"));
}
