use std::io::Write;
use std::process::Command;

use qhm::file_format::{export, load_file, FileError};
use qhm_core::presentations::{GenusData, RingKind};

fn qhm(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qhm")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn write_temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn exported_builtin_loads_identically() {
    let data = GenusData::builtin(3, RingKind::Quantum).unwrap();
    let (code, text) = qhm(&["export-presentation", "--genus", "3", "--ring", "quantum"]);
    assert_eq!(code, 0);
    assert_eq!(text, export(&data));
    let f = write_temp(&text);
    let back = load_file(f.path()).unwrap();
    assert_eq!(back.genus, 3);
    assert_eq!(back.kind, RingKind::Quantum);
    assert_eq!(back.presentation, data.presentation);
    assert_eq!(back.normalization, data.normalization);
}

#[test]
fn file_drives_evaluation() {
    let (_, text) = qhm(&["export-presentation", "--genus", "3", "--ring", "classical"]);
    let f = write_temp(&text);
    let path = f.path().to_str().unwrap();
    assert_eq!(qhm(&["eval", "--presentation", path, "alpha^6"]), (0, "224\n".into()));
    assert_eq!(qhm(&["eval", "--presentation", path, "psi1*psi4*gamma"]), (0, "-4\n".into()));
    assert_eq!(qhm(&["eval", "--presentation", path, "--ring", "quantum", "gamma^2"]).0, 1);
}

#[test]
fn floer_file_with_genus_two() {
    let (_, text) = qhm(&["export-presentation", "--genus", "2", "--ring", "floer"]);
    let f = write_temp(&text);
    let path = f.path().to_str().unwrap();
    assert_eq!(qhm(&["eval", "--presentation", path, "alpha*beta"]), (0, "4\n".into()));
}

#[test]
fn bad_files() {
    let dup =
        write_temp("genus 2\nkind floer\ngenerator alpha degree=2 parity=even\ngenerator alpha degree=2 parity=even\n");
    assert!(matches!(load_file(dup.path()), Err(FileError::Parse { line: 4, .. })));
    assert_eq!(qhm(&["eval", "--presentation", dup.path().to_str().unwrap(), "alpha"]).0, 1);

    let mut text = String::from("genus 2\nkind classical\n");
    for (n, d) in [("alpha", 2), ("beta", 4), ("gamma", 6)] {
        text.push_str(&format!("generator {} degree={} parity=even\n", n, d));
    }
    for i in 1..=4 {
        text.push_str(&format!("generator psi{} degree=3 parity=odd\n", i));
    }
    text.push_str("define gamma = -2*psi1*psi3 - 2*psi2*psi3\nrelation alpha\nrelation beta\nrelation gamma^2\n");
    let bad = write_temp(&text);
    assert!(matches!(load_file(bad.path()), Err(FileError::Invalid(_))));
    assert_eq!(qhm(&["eval", "--presentation", bad.path().to_str().unwrap(), "gamma"]).0, 2);

    assert!(matches!(load_file(std::path::Path::new("/nonexistent/file")), Err(FileError::Io { .. })));
}
