use std::process::{Command, Output};

use serde_json::Value;
use zbraid::format;

fn zbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zbraid")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn precedes_prints_false_and_a_witness() {
    let o = zbraid(&["precedes", "--germ", "zn", "--dim", "2", "-1 0; 0 1", "1 0; 0 -1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("false"));
    let w: Vec<i64> = lines.next().unwrap().trim_start_matches("witness:").split_whitespace().map(|t| t.parse().unwrap()).collect();
    // x > 0, x a < 0, x c > 0 for a = diag(-1, 1), c = diag(1, -1)
    assert!(w[0] > 0 || (w[0] == 0 && w[1] > 0));
    assert!(w[0] > 0, "x a < 0 needs x_1 > 0: {w:?}");
}

#[test]
fn nf_of_w0_squared_is_a_pure_delta_power() {
    let o = zbraid(&["nf", "--germ", "zn", "--dim", "2", "-1 0; 0 -1 | -1 0; 0 -1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "D^2 |");
}

#[test]
fn eq_exit_codes() {
    let same = zbraid(&["eq", "--germ", "braid", "--strands", "3", "s1 | s2 | s1", "s2 | s1 | s2"]);
    assert_eq!(same.status.code(), Some(0));
    let differ = zbraid(&["eq", "--dim", "2", "s1", "s2"]);
    assert_eq!(differ.status.code(), Some(1));
    let broken = zbraid(&["eq", "--dim", "2", "s1", "1 0; 0 q"]);
    assert_eq!(broken.status.code(), Some(2));
    let err = String::from_utf8(broken.stderr).unwrap();
    assert!(err.contains("`q`"), "{err}");
}

#[test]
fn malformed_matrix_names_the_token() {
    let o = zbraid(&["nf", "1 2; 0 1x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("`1x`"));
    let o = zbraid(&["nf", "--dim", "2", "2 0; 0 1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn group_operations_agree() {
    // x * x^-1 is trivial
    let x = "2 1; 1 1 | -1 0; 0 1";
    let inv = stdout(&zbraid(&["inv", "--json", x]));
    let v: Value = serde_json::from_str(&inv).unwrap();
    assert!(v["k"].is_i64());
    let prod = zbraid(&["mul", x, "-1 0; 0 1^-1 | 2 1; 1 1^-1"]);
    assert_eq!(stdout(&prod).trim(), "D^0 |");
    assert_eq!(zbraid(&["eq", x, "2 1; 1 1 | s1"]).status.code(), Some(0));
}

#[test]
fn lattice_verbs() {
    let j = zbraid(&["join", "-1 0; 0 1", "1 0; 0 -1"]);
    assert_eq!(stdout(&j).trim(), "-1 0; 0 -1");
    let m = zbraid(&["meet", "-1 0; 0 1", "1 0; 0 -1"]);
    assert_eq!(stdout(&m).trim(), "1 0; 0 1");
    let b = zbraid(&["join", "--germ", "braid", "--strands", "3", "s1", "s2"]);
    assert_eq!(stdout(&b).trim(), "3 2 1");
}

#[test]
fn decompose_json_round_trips() {
    let o = zbraid(&["decompose", "--json", "2 1 0; 1 1 0; 0 0 -1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let w = format::sword_from_json(&v, 3).unwrap();
    assert_eq!(w.product(), format::parse_matrix("2 1 0; 1 1 0; 0 0 -1", Some(3)).unwrap());
    let text = stdout(&zbraid(&["decompose", "2 1 0; 1 1 0; 0 0 -1"]));
    assert_eq!(format::parse_sword(text.trim(), 3).unwrap(), w);
}

#[test]
fn rewrite_type_reaches_d1() {
    let o = zbraid(&["rewrite-type", "--dim", "4", "--json", "--trace", "1 3 2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["end"], serde_json::json!([3, 2, 1, 3, 2, 3]));
    assert_eq!(v["derivation"].as_array().unwrap().len() as u64, v["steps"].as_u64().unwrap());
}

#[test]
fn connect_trace_replays() {
    let w1 = "g1:1 0; 1 1 | g1:1 0; 1 1";
    let w2 = stdout(&zbraid(&["decompose", "1 0; 2 1"]));
    let o = zbraid(&["connect", "--json", "--trace", w1, w2.trim()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let steps = format::derivation_from_json(&v["derivation"], 2).unwrap();
    let start = format::parse_sword(w1, 2).unwrap();
    let end = zbraid_core::presentation::replay_s(&start, &steps).unwrap();
    assert_eq!(end, format::parse_sword(w2.trim(), 2).unwrap());
}

#[test]
fn germ_laws_check_passes() {
    let o = zbraid(&["check", "--suite", "germ-laws", "--germ", "zn", "--dim", "3", "--trials", "1000", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn check_is_deterministic() {
    let args = ["check", "--suite", "germ-laws", "--germ", "zn", "--dim", "2", "--trials", "200", "--seed", "7"];
    let a = zbraid(&args);
    let b = zbraid(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("PASS germ-laws"));
    assert_eq!(zbraid(&["check", "--suite", "nonsense"]).status.code(), Some(2));
}
