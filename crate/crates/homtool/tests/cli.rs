use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn homtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homtool")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = homtool(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("homtool-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn hom_examples() {
    assert_eq!(json(&["hom", "--instance", "p3", "--target", "h1"])["result"], "5");
    assert_eq!(json(&["hom", "--instance", "p3", "--target", "h1", "--mod", "2"])["result"], 1);
    assert_eq!(json(&["hom", "--instance", "k2", "--target", "null"])["result"], "0");
    assert_eq!(json(&["hom", "--instance", "p3", "--target", "k2", "--pin", "0=1"])["result"], "1");
    let text = String::from_utf8(homtool(&["hom", "--instance", "p3", "--target", "h1"]).stdout).unwrap();
    assert_eq!(text, "5\n");
}

#[test]
fn reduce_examples() {
    let r = json(&["reduce", "--target", "fig1H"]);
    assert_eq!(r["result"]["reducedForm"], serde_json::json!({"n": 2, "edges": [[0, 1], [1, 1]]}));
    let k4 = temp_file("k4.txt", "4 10\n0 0\n1 1\n2 2\n3 3\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let r = json(&["reduce", "--target", k4.to_str().unwrap()]);
    assert_eq!(r["result"]["reducedForm"]["n"], 0);
    let c = json(&["reduce", "--confluence", "--max-vertices", "5"]);
    assert_eq!(c["failed"], 0);
    assert_eq!(c["cases"][0]["checked"], 53);
}

#[test]
fn classify_examples() {
    assert_eq!(json(&["classify", "--target", "p4"])["result"]["verdict"], "POLYNOMIAL_TIME");
    assert_eq!(json(&["classify", "--target", "k2"])["result"]["verdict"], "POLYNOMIAL_TIME");
    let s = json(&["classify", "--target", "spider123"]);
    assert_eq!(s["result"]["verdict"], "PARITY_P_COMPLETE");
    assert_eq!(s["result"]["anchors"]["k"], 2);
    let out = homtool(&["classify", "--target", "k3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn distinguish_and_pin() {
    let d = json(&["distinguish", "--target", "spider123", "--orbit-x", "1", "--orbit-y", "3"]);
    assert_eq!(d["result"]["distinguisher"], serde_json::json!({"n": 3, "edges": [[0, 1], [1, 2]], "root": 0}));
    assert_eq!(d["passed"], 1);
    let v = json(&["distinguish", "--target", "k1", "--versus", "h1"]);
    assert!(v["result"]["distinguisher"].is_object());
    let p = json(&["pin", "--target", "spider123", "--instance", "p3", "--orbit-x", "0", "--x", "1"]);
    assert_eq!(p["failed"], 0);
    assert!(!p["result"]["sumX"].as_array().unwrap().is_empty());
    let q = json(&[
        "pin", "--target", "spider123", "--instance", "p4", "--orbit-x", "2", "--orbit-y", "6", "--x", "0", "--y", "3",
    ]);
    assert_eq!(q["failed"], 0);
}

#[test]
fn lovasz_and_enumerate() {
    // Instances start null, K1, ...: the K1 entry is |V(h)| mod p.
    let l = json(&["lovasz", "--target", "fig1H", "--max-vertices", "2"]);
    assert_eq!(l["result"]["residues"][1], 0);
    let l = json(&["lovasz", "--target", "k3", "--prime", "2", "--max-vertices", "2"]);
    assert_eq!(l["result"]["residues"][1], 1);
    let e = json(&["enumerate", "--max-vertices", "4"]);
    assert_eq!(e["result"]["counts"][4]["count"], 11);
    let t = json(&["enumerate", "--trees", "--max-vertices", "7"]);
    assert_eq!(t["result"]["counts"][7]["count"], 11);
}

#[test]
fn files_and_errors() {
    let g = temp_file("p3.json", r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#);
    assert_eq!(json(&["hom", "--instance", g.to_str().unwrap(), "--target", "k2"])["result"], "2");
    let bad = temp_file("bad.txt", "3 2\n0 1\n");
    let out = homtool(&["hom", "--instance", bad.to_str().unwrap(), "--target", "k2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("header declares 2 edges"));
    assert_eq!(homtool(&["hom", "--target", "k2"]).status.code(), Some(2));
    assert_eq!(homtool(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(homtool(&["hom", "--instance", "p3", "--target", "k2", "--mod", "0"]).status.code(), Some(2));
}

#[test]
fn caps_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_homtool"))
        .args(["enumerate", "--max-vertices", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_homtool"))
        .args(["enumerate", "--max-vertices", "7", "--json"])
        .env("HOMTOOL_CAPS", "enumerate=7")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["counts"][7]["count"], 1044);
    let bad = Command::new(env!("CARGO_BIN_EXE_homtool")).args(["enumerate"]).env("HOMTOOL_CAPS", "x=1").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_and_reports_exit_code() {
    let args = ["verify", "involution", "gadget-algebra", "--max-vertices", "5", "--trials", "5", "--seed", "11", "--json"];
    let a = homtool(&args);
    let b = homtool(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 11);
    assert_eq!(v["failed"], 0);
    let other = homtool(&["verify", "gadget-algebra", "--trials", "5", "--seed", "12", "--json"]);
    assert!(other.status.success());
    for s in ["pinning", "indset-reduction"] {
        let out = homtool(&["verify", s, "--max-vertices", "3", "--trials", "5"]);
        assert!(out.status.success(), "{s}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
