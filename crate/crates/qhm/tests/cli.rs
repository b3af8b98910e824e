use std::process::Command;

use serde_json::Value;

fn qhm(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qhm")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn eval_quantum_gamma_squared() {
    let (code, out, _) = qhm(&["eval", "--genus", "3", "--ring", "quantum", "gamma^2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "24\n");
}

#[test]
fn eval_json_schema() {
    let (code, out, _) = qhm(&["eval", "--genus", "3", "--ring", "classical", "psi1*psi4*alpha^3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "eval");
    assert_eq!(v["inputs"]["expression"], "psi1*psi4*alpha^3");
    assert_eq!(v["value"]["num"], -4);
    assert_eq!(v["value"]["den"], 1);
}

#[test]
fn rationals_stay_fractions() {
    let (code, out, _) = qhm(&["series", "--genus", "3", "--order", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let row = rows.iter().find(|r| r["a"] == 6 && r["b"] == 0 && r["c"] == 0).unwrap();
    assert_eq!(row["value"]["num"], -14);
    assert_eq!(row["value"]["den"], 45);
}

#[test]
fn series_csv() {
    let (code, out, _) = qhm(&["series", "--genus", "2", "--order", "6", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("a,b,c,value-numerator,value-denominator"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 84);
    assert!(rows.contains(&"0,0,1,-4,1"));
    let keys: Vec<Vec<u32>> = rows.iter().map(|r| r.split(',').take(3).map(|x| x.parse().unwrap()).collect()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn output_is_deterministic() {
    let a = qhm(&["series", "--genus", "3", "--order", "5", "--format", "csv"]);
    let b = qhm(&["series", "--genus", "3", "--order", "5", "--format", "csv"]);
    assert_eq!(a, b);
}

#[test]
fn normal_forms() {
    assert_eq!(qhm(&["nf", "--ring", "quantum", "gamma^3"]).1, "0\n");
    assert_eq!(qhm(&["nf", "--ring", "quantum", "beta^2*gamma^2"]).1, "64*gamma^2\n");
    assert_eq!(qhm(&["nf", "--genus", "2", "alpha^4"]).1, "-16*beta + 128\n");
}

#[test]
fn gw_commands() {
    assert_eq!(qhm(&["gw", "--degree", "1", "alpha", "beta", "beta*gamma"]).1, "-96\n");
    assert_eq!(qhm(&["gw", "--degree", "1", "alpha", "alpha", "gamma^2"]).1, "0\n");
    assert_eq!(qhm(&["gw", "--degree", "1", "--words", "gamma", "gamma", "gamma"]).1, "0\n");
    assert_eq!(qhm(&["gw3", "1", "alpha^3", "gamma"]).1, "24\n");
}

#[test]
fn exit_codes() {
    assert_eq!(qhm(&["frobnicate"]).0, 1);
    assert_eq!(qhm(&["eval", "--bogus", "alpha"]).0, 1);
    assert_eq!(qhm(&["eval", "alpha +"]).0, 1);
    assert_eq!(qhm(&["eval", "--genus", "4", "alpha"]).0, 1);
    assert_eq!(qhm(&["eval", "--genus", "2", "--ring", "quantum", "gamma"]).0, 2);
    assert_eq!(qhm(&["--help"]).0, 0);
}

#[test]
fn json_errors_on_stderr() {
    let (code, out, err) = qhm(&["eval", "--genus", "2", "--ring", "classical", "gamma", "--format", "json"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["kind"], "computation");
    assert!(v["error"]["message"].as_str().unwrap().contains("supply a presentation file"));

    let (code, _, err) = qhm(&["eval", "--format", "json", "--nope"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["kind"], "usage");
}

#[test]
fn iso_report() {
    let (code, out, _) = qhm(&["iso", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["constants"]["A3"]["num"], -12);
    assert_eq!(v["constants"]["B3"]["num"], 24);
    assert_eq!(v["report"]["residuals"].as_array().unwrap().len(), 0);
    let table = v["table"].as_array().unwrap();
    let line = table.iter().find(|r| r["quantum"] == "beta*gamma").unwrap();
    assert_eq!(line["classical"], "beta*gamma - 12*alpha*beta - 20*gamma + 24*alpha");
    let text = qhm(&["iso"]).1;
    assert!(text.contains("discrepancy: A3 solved -12 but statement gives 16"));
}

#[test]
fn verify_reports_every_criterion() {
    let (code, out, _) = qhm(&["verify"]);
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert_eq!(lines.len(), 11);
    let all_pass = lines.iter().all(|l| l.starts_with("PASS"));
    assert_eq!(code, if all_pass { 0 } else { 3 });
}
