use std::fs;
use std::process::{Command, Output};

use superder_core::catalog::corrupted_sl2;

fn superder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superder")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_writes_algebra_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a10.json");
    let o = superder(&["construct", "A:1,0", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["dim"], 8);
    let labels: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a10.json.labels.json")).unwrap()).unwrap();
    assert_eq!(labels["labels"].as_object().unwrap().len(), 8);

    let path = out.to_str().unwrap();
    let j = superder(&["jacobi", path]);
    assert_eq!((j.status.code(), stdout(&j).as_str()), (Some(0), "ok\n"));

    let d = superder(&["derive", path, "--delta", "1/2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&d)).unwrap();
    assert_eq!(v["nullity"], 1);
    assert_eq!(v["analysis"]["scalar_line"], true);
    assert_eq!(v["basis"][0].as_array().unwrap().len(), 64);
}

#[test]
fn roots_and_scan_accept_spec_strings() {
    let r: serde_json::Value = serde_json::from_str(&stdout(&superder(&["roots", "B:1,1"]))).unwrap();
    assert_eq!(r["cartan_dim"], 2);
    assert_eq!(r["root_axioms"], "ok");
    let s: serde_json::Value = serde_json::from_str(&stdout(&superder(&["scan", "B:0,1"]))).unwrap();
    assert_eq!(s["critical"].as_array().unwrap().len(), 2);
    assert_eq!(s["unresolved_factors"].as_array().unwrap().len(), 0);
}

#[test]
fn exit_codes_classify_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, corrupted_sl2().algebra.to_json()).unwrap();
    assert_eq!(superder(&["jacobi", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(superder(&["construct", "A:1,1"]).status.code(), Some(1));
    assert_eq!(superder(&["construct", "X:1"]).status.code(), Some(2));
    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{not json").unwrap();
    assert_eq!(superder(&["derive", garbage.to_str().unwrap(), "--delta", "1"]).status.code(), Some(2));
    assert_eq!(superder(&["derive", "A:1,0"]).status.code(), Some(2));
}

#[test]
fn report_honours_max_dim_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_superder"))
        .args(["report", "--format", "csv"])
        .env("SUPERDER_MAX_DIM", "8")
        .output()
        .unwrap();
    assert!(o.status.success());
    let families: std::collections::BTreeSet<String> = csv::Reader::from_reader(o.stdout.as_slice())
        .records()
        .map(|r| r.unwrap()[0].to_string())
        .collect();
    assert_eq!(families, ["A(1,0)", "B(0,1)", "C(2)"].map(String::from).into_iter().collect());
}
