use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_innmonoid"))
        .args(args)
        .current_dir(data_dir())
        .output()
        .expect("binary runs")
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    (
        serde_json::from_str(&stdout(&o)).expect("valid json"),
        o.status.code().unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("innmonoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn conj_clifford() {
    let (v, code) = json(&["conj", "clifford8"]);
    assert_eq!(code, 0);
    let classes: Vec<&str> = v["result"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert!(classes.contains(&"{c}"));
    assert!(classes.contains(&"{s1, s2, s3}"));
    assert_eq!(v["result"]["idempotents"], "{e, f}");
    assert_eq!(v["result"]["centralizers"]["s1"], "{e, s1, f, c}");
    assert_eq!(v["result"]["centralizers"]["s2"], "{e, s2, f}");
    let witnesses = v["result"]["witnesses"].as_array().unwrap();
    assert!(witnesses
        .iter()
        .any(|w| w.as_str().unwrap().starts_with("s1 ~ s2 via")));
}

#[test]
fn inn_left_zero_has_six_elements() {
    let (v, code) = json(&["inn", "leftzero:2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["size"], 6);
    assert_eq!(v["result"]["elements"].as_array().unwrap().len(), 6);
    assert!(v["result"]["elements"]
        .as_array()
        .unwrap()
        .contains(&Value::from("{}")));
}

#[test]
fn inn_limit_and_export() {
    let o = run(&["inn", "sym:3", "--limit", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let out = temp_file("inn_i2.txt", "");
    let o = run(&["inn", "I:2", "--export-cayley", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let table = std::fs::read_to_string(&out).unwrap();
    let v = json(&["validate", out.to_str().unwrap()]).0;
    assert_eq!(v["result"]["order"], 7);
    assert!(table.starts_with("7\n"));
}

#[test]
fn validate_table_files() {
    let (v, code) = json(&["validate", "clifford8.txt"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["identity"], "f");
    assert_eq!(v["result"]["order"], 8);

    let bad = temp_file("bad.txt", "2\n0 0\n1\n");
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let nonassoc = temp_file("nonassoc.txt", "2\n1 1\n1 0\n");
    assert_eq!(
        run(&["validate", nonassoc.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn green_relations() {
    let (v, _) = json(&["green", "leftzero:2"]);
    assert_eq!(v["result"]["L"], "0 1");
    assert_eq!(v["result"]["R"], "0 | 1");
    let (v, _) = json(&["green", "clifford8"]);
    assert_eq!(v["result"]["D"], "e r1 r2 s1 s2 s3 | f c");
}

#[test]
fn structure_commands_pass() {
    for args in [
        vec!["tx", "verify", "-n", "2"],
        vec!["tx", "verify", "-n", "3", "--full"],
        vec!["gset", "verify", "z2_on_four.gset"],
        vec!["rees", "verify", "z2_rees.txt"],
        vec!["verify", "all", "--max-order", "3"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(stdout(&o).ends_with("status: pass\n"));
    }
}

#[test]
fn gset_inn_counts() {
    let (v, code) = json(&["gset", "inn", "z2_on_four.gset"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["endomorphisms"], 16);
    assert_eq!(v["result"]["orbits"], "0 1 | 2 | 3");
}

#[test]
fn tx_classify_lists_generators() {
    let (v, code) = json(&["tx", "classify", "-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["order"], 4);
    let gens = v["result"]["generators"].as_array().unwrap();
    let pairs: u64 = gens.iter().map(|g| g["pairs"].as_u64().unwrap()).sum();
    assert_eq!(pairs, 16);
}

#[test]
fn property_failure_exits_with_one() {
    // Three two-point orbits of the Klein group with distinct stabilizers;
    // normal forms are not unique there.
    let text = "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n7\n0 1 2 3 4 5 6\n1 0 2 3 5 4 6\n0 1 3 2 5 4 6\n1 0 3 2 4 5 6\n";
    let path = temp_file("klein.gset", text);
    let o = run(&["gset", "verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("status: fail\n"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["tx", "verify", "-n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["conj", "leftzero:0"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "all", "--max-order", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["conj", "no-such-file"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [["conj", "strict4"], ["inn", "clifford8"]] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout);
    }
    let (a, _) = json(&["validate", "clifford8.txt"]);
    let (b, _) = json(&["validate", "clifford8"]);
    assert_ne!(a["input_digest"], b["input_digest"]);
    assert!(a["input_digest"].as_str().unwrap().starts_with("sha256:"));
}
