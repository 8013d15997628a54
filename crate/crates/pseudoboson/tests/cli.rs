//! Exit-code and report-surface tests for the binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pseudoboson"))
}

#[test]
fn family_passes_at_reference_point() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let status = bin()
        .args([
            "family",
            "--epsilon",
            "0.3",
            "--eta-re",
            "0.1",
            "--nmax",
            "12",
        ])
        .arg("--output")
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
    assert!(
        report["biorthonormality"]["max_deviation_n12"]
            .as_f64()
            .unwrap()
            <= 1e-8
    );
    assert!(report["riesz"]["d"].as_array().unwrap().len() == 13);
    assert!(report["tolerances"]["biorth"].as_f64().unwrap() > 0.0);
}

#[test]
fn family_rejects_inadmissible_parameters() {
    let out = bin()
        .args(["family", "--epsilon", "0.1", "--eta-re", "0.2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("epsilon^2 > 4|eta|^2"),
        "diagnostic should name the violated guard, got: {stderr}"
    );
}

#[test]
fn oracle_rejects_bad_block() {
    let out = bin()
        .args([
            "oracle",
            "--epsilon",
            "0.3",
            "--eta-re",
            "0.1",
            "--dim",
            "10",
            "--block",
            "20",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_passes_at_eta_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oracle.json");
    let status = bin()
        .args(["oracle", "--epsilon", "1", "--dim", "60", "--block", "20"])
        .arg("--output")
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report["conjugation"]["res_a"].as_f64().unwrap() <= 1e-9);
    assert!(report["conjugation"]["res_b"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn scan_emits_window_consistent_csv() {
    let out = bin()
        .args([
            "scan",
            "--alpha",
            "3",
            "--eta-min",
            "-0.4",
            "--eta-max",
            "0.4",
            "--eta-steps",
            "81",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 82);
    assert!(lines[0].starts_with("alpha,eta,epsilon,ratioA,ratioB"));
    // eta = 0 row is excluded
    assert_eq!(text.lines().filter(|l| l.ends_with(",excluded")).count(), 1);
    // window boundary ~ 0.21520: eta = +-0.21 admissible, +-0.22 not
    for line in &lines[1..] {
        let cols: Vec<&str> = line.split(',').collect();
        let eta: f64 = cols[1].parse().unwrap();
        let admissible = cols[7] == "true";
        if eta.abs() < 0.215 && eta != 0.0 {
            assert!(admissible, "eta = {eta} should be admissible: {line}");
        }
        if eta.abs() > 0.216 {
            assert!(!admissible, "eta = {eta} should be inadmissible: {line}");
        }
        assert_eq!(cols[9], "true", "inconsistent classification: {line}");
    }
}

#[test]
fn scan_rejects_bad_grid() {
    let out = bin().args(["scan", "--alpha", "1.5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_scale_env_is_honored() {
    // an absurdly small scale forces tolerance failures -> exit 1
    let out = bin()
        .args([
            "family",
            "--epsilon",
            "0.3",
            "--eta-re",
            "0.1",
            "--nmax",
            "10",
        ])
        .env("PSEUDOBOSON_TOL_SCALE", "1e-12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
