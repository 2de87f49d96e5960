use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_noether")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn shifts(v: &Value) -> Vec<u64> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn surface_noether_resolution() {
    let surface = data("surface.ideal");
    let v = json(&["noether", "--field", "q", "--weights", "3,4,2,2", "--dim", "2", surface.to_str().unwrap()]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "noether");
    assert_eq!(v["inputs_digest"].as_str().unwrap().len(), 64);
    assert_eq!(shifts(&v["shifts0"]), vec![0, 3, 4, 6, 7, 9]);
    assert_eq!(shifts(&v["shifts1"]), vec![8, 11]);
    assert_eq!(v["b1"][0]["monomial"], serde_json::json!([0, 1, 0, 0]));
    assert_eq!(v["b1"][0]["delta"], 2);
    assert_eq!(v["complex_verified"], true);
    // exact rationals survive as strings
    assert_eq!(v["psi1_variables"], serde_json::json!(["x3", "x4"]));
    assert_eq!(v["psi1"][0][0][0], serde_json::json!(["1/2", [3, 1]]));
    let hs = &v["hilbert_series"];
    assert_eq!(hs["denominator_factors"], serde_json::json!([[0, 2], [0, 2]]));
    assert_eq!(hs["numerator"].as_array().unwrap().len(), 8);
}

#[test]
fn char2_implicitization() {
    let v = json(&["implicitize", "--field", "f2", "--weights", "3,4,2,2", data("surface.param").to_str().unwrap()]);
    let gb: Vec<&Value> = v["groebner_basis"].as_array().unwrap().iter().collect();
    assert_eq!(gb.len(), 2);
    assert_eq!(v["field"], "f2");
}

#[test]
fn p4_curve_implicitization() {
    let v = json(&["implicitize", data("p4_curve.param").to_str().unwrap()]);
    assert_eq!(v["initial_ideal"].as_array().unwrap().len(), 10);
}

#[test]
fn semigroup_macaulayfication() {
    let v = json(&["semigroup", "macaulayfy", data("example.mat").to_str().unwrap()]);
    assert_eq!(v["command"], "semigroup macaulayfy");
    assert_eq!(v["macaulayfication"], serde_json::json!([[1, 9], [3, 17], [4, 6], [5, 5], [10, 0], [0, 10]]));
    let v = json(&["semigroup", "verify", data("example.mat").to_str().unwrap()]);
    assert_eq!(v["closure"], true);
    assert_eq!(v["cohen_macaulay"], true);
    assert_eq!(v["dimension"], true);
    assert_eq!(v["gaps"], serde_json::json!([[3, 17]]));
    let v = json(&["semigroup", "cm", data("example.mat").to_str().unwrap()]);
    assert_eq!(v["s0_size"], 11);
    assert_eq!(v["D"], 10);
    assert_eq!(v["cohen_macaulay"], false);
}

#[test]
fn curve_projection() {
    let v = json(&["curve", "--seq", "1,3,5,7", "--project", "2"]);
    let p = &v["projection"];
    assert_eq!(p["regularity"], 4);
    assert_eq!(p["s1"], serde_json::json!([[10, 18], [11, 24]]));
    assert_eq!(shifts(&p["shifts0"]), vec![0, 1, 1, 2, 2, 2, 3, 3, 4]);
    assert_eq!(p["all_agree"], true);
    let m = json(&["reg", data("projection.mat").to_str().unwrap()]);
    assert_eq!(m["regularity"], 4);
}

#[test]
fn curve_projection_reports_formula_disagreement() {
    // the case formula is off by one here; the command still succeeds
    let v = json(&["curve", "--seq", "1,2,3,4", "--project", "3"]);
    let p = &v["projection"];
    assert_eq!(p["regularity"], 2);
    assert_eq!(p["regularity_formula"], 1);
    assert_eq!(p["all_agree"], false);
}

#[test]
fn output_is_deterministic() {
    let surface = data("surface.ideal");
    let args = ["noether", "--weights", "3,4,2,2", "--dim", "2", "--format", "json", surface.to_str().unwrap()];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["curve", "--seq", "2,3,4,5", "--project", "2"]);
    let d = run(&["curve", "--seq", "2,3,4,5", "--project", "2"]);
    assert_eq!(c.stdout, d.stdout);
    let x = json(&["curve", "--seq", "2,3,4,5"]);
    let y = json(&["curve", "--seq", "2,3,4,6"]);
    assert_ne!(x["inputs_digest"], y["inputs_digest"]);
}

#[test]
fn exit_codes() {
    let surface = data("surface.ideal");
    let s = surface.to_str().unwrap();
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["noether", s]).status.code(), Some(1));
    assert_eq!(run(&["gb", "--seq", "1,2", s]).status.code(), Some(1));
    assert_eq!(run(&["gb", "no-such-file.ideal"]).status.code(), Some(2));
    assert_eq!(run(&["gb", "--field", "f4", s]).status.code(), Some(2));
    assert_eq!(run(&["gb", "--weights", "1,2", s]).status.code(), Some(2));
    assert_eq!(run(&["curve", "--seq", "2,4"]).status.code(), Some(2));
    assert_eq!(run(&["curve", "--seq", "1,3,7,8", "--project", "2"]).status.code(), Some(2));
    let emb = data("embedded_point.ideal");
    let out = run(&["noether", "--dim", "2", "--tau-max", "5", "--format", "json", emb.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "computation");
    assert_eq!(v["inputs_digest"].as_str().unwrap().len(), 64);
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
