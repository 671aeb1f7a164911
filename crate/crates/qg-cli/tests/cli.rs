//! End-to-end tests of the `qg` binary: golden outputs and exit codes.

use std::process::{Command, Output};

fn qg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qg"))
        .args(args)
        .output()
        .expect("spawn qg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn normalize_golden() {
    let o = qg(&["normalize", "--algebra", "slq2", "d*a"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 + q^-1*b*c");
}

#[test]
fn haar_golden() {
    let o = qg(&["haar", "--algebra", "suq2", "--spin-cutoff", "1", "a*a^*"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1/(1+q^2)");
}

#[test]
fn check_hopf_golden_exit_zero() {
    let o = qg(&["check-hopf", "--algebra", "sl_t1_2", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn antipode_output() {
    let o = qg(&["antipode", "--algebra", "slq2", "b"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-q^-1*b");
}

#[test]
fn star_output() {
    let o = qg(&["star", "--algebra", "suq2", "a"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "d");
}

#[test]
fn json_output_matches_text() {
    let o = qg(&["normalize", "--algebra", "slq2", "--format", "json", "d*a"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "1 + q^-1*b*c");
}

#[test]
fn check_failure_exits_one() {
    let o = qg(&["lorentz", "--q", "1", "--x", "zero"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lorentz_flip_passes_classically() {
    let o = qg(&["lorentz", "--q", "1", "--x", "flip"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_error_exits_two() {
    let o = qg(&["no-such-subcommand"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn element_parse_error_exits_two() {
    let o = qg(&["normalize", "--algebra", "slq2", "a*("]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sphere_check_special_c() {
    let o = qg(&["sphere", "--c", "c(2)"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn presentation_file_round_trip() {
    let dir = std::env::temp_dir();
    let path = dir.join("qg-cli-roundtrip.qg");
    let text = qg_core::parse::serialize_presentation(
        &qg_core::hopf::builtin(qg_core::hopf::Builtin::Suq2).unwrap(),
    );
    std::fs::write(&path, &text).unwrap();
    let o = qg(&["parse", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8_lossy(&o.stdout), text);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn normalize_output_reparses_to_same_value() {
    let o = qg(&["normalize", "--algebra", "slq2", "a*b*a - q*d"]);
    assert!(o.status.success());
    let printed = stdout(&o);
    let o2 = qg(&["normalize", "--algebra", "slq2", "--", &printed]);
    assert!(o2.status.success());
    assert_eq!(stdout(&o2), printed);
}
