use std::path::Path;
use std::process::{Command, Output};

use higher_tangent::generators::nerve_group_vs;
use higher_tangent::simplicial::format::{complex_to_json, simplicial_to_json};
use higher_tangent::simplicial::{dk_realize, ChainComplex};
use serde_json::Value;

fn htan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_htan")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_hand_family() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "family.json",
        r#"{"formatVersion": 1, "k": 2, "fiberDim": 1,
            "members": [[[[1], ["1"]]], [[[1], ["3"]]]]}"#,
    );
    let out = htan(&["solve", "--k", "2", "--input", &file, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let components = &v["w"]["components"];
    assert_eq!(components, &serde_json::json!([[[1], ["2"]], [[2], ["1"]]]));
    assert_eq!(v["bruteforceAgrees"], Value::Bool(true));
    assert_eq!(htan(&["solve", "--k", "3", "--input", &file]).status.code(), Some(2));
}

#[test]
fn validate_names_the_corrupted_degeneracy() {
    let dir = tempfile::tempdir().unwrap();
    let mut s = nerve_group_vs(1, 3);
    s.set_degen(1, 1, higher_tangent::exactla::Mat::from_ints(&[[2], [0]])).unwrap();
    let file = write(dir.path(), "bad.json", &simplicial_to_json(&s));
    let out = htan(&["validate", "--input", &file]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("d_1 s_1 = id fails"), "{}", stdout(&out));

    let good = write(dir.path(), "good.json", &simplicial_to_json(&nerve_group_vs(1, 3)));
    assert_eq!(htan(&["validate", "--input", &good]).status.code(), Some(0));
}

#[test]
fn hom_limit_of_realized_complex() {
    let dir = tempfile::tempdir().unwrap();
    let s = dk_realize(&ChainComplex::zero_differential(vec![0, 1, 1]), 5).unwrap();
    let file = write(dir.path(), "s.json", &simplicial_to_json(&s));
    let out = htan(&["hom-limit", "--max-level", "5", "--input", &file, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 1]));
    assert_eq!(v["stable"], Value::Bool(true));
}

#[test]
fn realize_then_normalize_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let d1 = higher_tangent::exactla::Mat::from_ints(&[[1, -1]]);
    let c = ChainComplex::new(vec![1, 2], vec![d1]).unwrap();
    let cfile = write(dir.path(), "c.json", &complex_to_json(&c));
    let realized = htan(&["dk-realize", "--input", &cfile, "--max-level", "3"]);
    assert_eq!(realized.status.code(), Some(0));
    let sfile = write(dir.path(), "s.json", &stdout(&realized));
    let normalized = htan(&["dk-normalize", "--input", &sfile]);
    assert_eq!(normalized.status.code(), Some(0));
    let back = higher_tangent::simplicial::format::complex_from_json(&stdout(&normalized)).unwrap();
    assert_eq!(back.trimmed(), c);
}

#[test]
fn parse_errors_carry_context_and_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "s.json",
        r#"{"formatVersion": 1, "maxLevel": 1, "dims": [1, 1],
            "faces": [[], [[["1"]], [["1", "0"]]]], "degens": [[[["1"]]]]}"#,
    );
    let out = htan(&["validate", "--input", &file]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("faces[1][1]"), "{err}");

    let file = write(dir.path(), "broken.json", "{\n  \"formatVersion\": 1,\n  \"dims\": [1,\n");
    let err = String::from_utf8(htan(&["dk-realize", "--input", &file]).stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
    assert_eq!(htan(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn example_output_is_a_simplicial_document() {
    let out = htan(&["example", "--example", "ntower", "--dim", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let s = higher_tangent::simplicial::format::simplicial_from_json(&stdout(&out)).unwrap();
    assert!(higher_tangent::simplicial::validate(&s).is_empty());
    let listed = htan(&["example", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&listed)).unwrap();
    assert!(v["presets"].as_array().unwrap().len() >= 6);
}

#[test]
fn selftest_is_reproducible() {
    let a = htan(&["selftest", "--seed", "11", "--format", "json"]);
    let b = htan(&["selftest", "--seed", "11", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
