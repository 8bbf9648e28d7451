use std::process::{Command, Output};

use serde_json::Value;

fn anfield(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anfield")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = anfield(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn classify_k1_names_the_a2_categories() {
    let v = json(&["classify", "--k", "1"]);
    let text = v.to_string();
    for name in ["Rep(Z/2Z)", "sVec", "Sem", "SemBar"] {
        assert!(text.contains(&format!("\"{name}\"")), "{name} missing");
    }
}

#[test]
fn classify_k4_autoequivalences() {
    let v = json(&["classify", "--k", "4"]);
    assert_eq!(v["autoequivalences"]["tensor"], "Z/2Z");
    assert_eq!(v["autoequivalences"]["braided"], "{e}");
}

#[test]
fn data_k2_ell1() {
    let v = json(&["data", "--k", "2", "--ell", "1"]);
    assert_eq!(v["conductor"], 16);
    let s = v["S"].as_array().unwrap();
    assert_eq!(s.len(), 3);
    assert!(s.iter().all(|row| row.as_array().unwrap().len() == 3));
    assert_eq!(v["is_modular"], true);
}

#[test]
fn data_k1_ell7_is_rep_z2() {
    assert_eq!(json(&["data", "--k", "1", "--ell", "7"])["conductor"], 1);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["classify", "--k", "0"][..],
        &["data", "--k", "4", "--ell", "2"],
        &["verify", "nonsense"],
        &["sixj", "--k", "3"],
        &["theta", "--k", "2", "--m", "2"],
        &["data", "--k", "2", "--ell", "1", "--format", "yaml"],
    ] {
        assert_eq!(anfield(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn gcd_violation_is_explained() {
    let out = anfield(&["data", "--k", "4", "--ell", "2"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("gcd"), "{err}");
}

#[test]
fn verify_suites_pass() {
    for args in [["verify", "pentagon", "--k-max", "4"], ["verify", "tables", "--k-max", "10"]] {
        let out = anfield(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        &["data", "--k", "3", "--ell", "2", "--pivotal", "-"][..],
        &["sixj", "--k", "3", "--m", "1"],
        &["classify", "--k", "5"],
        &["jw", "--n", "3"],
    ] {
        let (a, b) = (anfield(args), anfield(args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn jw_prints_coefficient_diagram_pairs() {
    let v = json(&["jw", "--n", "2"]);
    assert!(v.to_string().contains("[[0,1],[2,3]]"), "{v}");
}

#[test]
fn csv_and_text_formats() {
    let out = anfield(&["sixj", "--k", "2", "--m", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.lines().count() > 1);
    let out = anfield(&["theta", "--k", "2", "--m", "1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
}
