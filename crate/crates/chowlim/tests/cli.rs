use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn chowlim(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chowlim"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn payload(args: &[&str], stdin: &str) -> Value {
    let out = chowlim(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    report["payload"].clone()
}

fn numbers(v: &Value) -> Vec<u64> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

const Z5: &str = r#"{"type": "perm", "degree": 5, "generators": [[2, 3, 4, 5, 1]]}"#;
const S3: &str = r#"{"type": "perm", "degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]}"#;
const S4: &str = r#"{"type": "perm", "degree": 4, "generators": [[2, 1, 3, 4], [2, 3, 4, 1]]}"#;

#[test]
fn cyclic_limit_is_polynomial() {
    let p = payload(&["--json", "limit", "--prime", "5", "--max-degree", "10"], Z5);
    assert_eq!(numbers(&p["dims"]), [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]);
    assert_eq!(numbers(&p["generator_degrees"]), [2]);
    assert_eq!(p["reduced"], true);
    assert_eq!(p["steenrod_closed"], true);
}

#[test]
fn s3_at_three_has_period_four() {
    let p = payload(&["--json", "limit", "--prime", "3", "--max-degree", "16"], S3);
    let expected: Vec<u64> = (0..=16).map(|d| u64::from(d % 4 == 0)).collect();
    assert_eq!(numbers(&p["dims"]), expected);
}

#[test]
fn payload_is_deterministic() {
    let args = ["--json", "limit", "--prime", "2", "--max-degree", "12"];
    let a = chowlim(&args, S4);
    let b = chowlim(&args, S4);
    let strip = |o: &Output| serde_json::to_string(&serde_json::from_slice::<Value>(&o.stdout).unwrap()["payload"]).unwrap();
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn text_output_by_default() {
    let out = chowlim(&["limit", "--prime", "5", "--max-degree", "4"], Z5);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dims: 1 0 1 0 1\n"), "{text}");
}

#[test]
fn stable_s4_matches_limit() {
    let p = payload(&["--json", "stable", "--prime", "2", "--max-degree", "12"], S4);
    assert_eq!(p["agrees"], true);
    assert_eq!(p["dims"], p["limit_dims"]);
}

#[test]
fn toral_gl2_f7() {
    let p = payload(&["--json", "toral", "--prime", "3"], r#"{"type": "classical", "family": "GL", "n": 2, "q": 7}"#);
    assert_eq!(p["all_toral"], true);
    assert_eq!(p["group_order"], 2016);
    assert_eq!(p["classes"].as_array().unwrap().len(), 5);
}

#[test]
fn wreath_with_trivial_inner() {
    let trivial = r#"{"type": "perm", "degree": 1, "generators": []}"#;
    let p = payload(&["--json", "wreath", "--prime", "3", "--max-degree", "8"], trivial);
    assert_eq!(numbers(&p["dims"]), [1, 0, 1, 0, 1, 0, 1, 0, 1]);
}

#[test]
fn swap_invariants() {
    let p = payload(
        &["--json", "invariants", "--prime", "3", "--max-degree", "8"],
        r#"{"n": 2, "generators": [[0, 1, 1, 0]]}"#,
    );
    assert_eq!(numbers(&p["dims"]), [1, 0, 1, 0, 2, 0, 2, 0, 3]);
    assert_eq!(numbers(&p["generator_degrees"]), [2, 4]);
}

#[test]
fn double_cosets_in_s3() {
    let p = payload(&["--json", "double-cosets", "--k", "[[2,1,3]]", "--h", "[[2,1,3]]"], S3);
    assert_eq!(p["count"], 2);
    assert_eq!(numbers(&p["sizes"]).iter().sum::<u64>(), 6);
}

#[test]
fn quick_verify_passes() {
    let out = chowlim(&["verify", "--max-degree", "8"], "");
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(chowlim(&["limit", "--prime", "2"], "{not json").status.code(), Some(2));
    assert_eq!(chowlim(&["verify", "--suite", "nope"], "").status.code(), Some(2));
    assert_eq!(chowlim(&["--cap", "10", "limit", "--prime", "2"], S4).status.code(), Some(3));
    assert_eq!(
        chowlim(&["toral", "--prime", "3"], S3).status.code(),
        Some(2),
        "toral needs a classical group"
    );
}
