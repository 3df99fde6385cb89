//! End-to-end tests of the command-line interface: exit codes, envelope
//! shape, refusal and violation paths, determinism.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn lefrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn descriptor_file(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file
}

const VERY_GENERAL_SURFACE: &str = r#"{"factors":[{"type":"I","f":1,"d":1,"g":2,"m":1}]}"#;
const TYPE_IV_CURVE: &str = r#"{"factors":[{"type":"IV","f":1,"d":1,"g":1,"m":1}]}"#;
const BAD_TYPE_III: &str = r#"{"factors":[{"type":"III","f":1,"d":2,"g":2,"m":1}]}"#;

#[test]
fn weyl_reports_dimension_profile_and_agreement() {
    let out = lefrep(&["weyl", "--kind", "sp", "--n", "2", "--lambda", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["command"], "weyl");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["dim"], 5);
    assert_eq!(v["result"]["oracle_agree"], true);
    assert_eq!(v["result"]["hodge_profile"]["2"], 1);
    assert_eq!(v["result"]["hodge_profile"]["0"], 3);
    assert_eq!(v["result"]["hodge_profile"]["-2"], 1);
}

#[test]
fn weyl_vanishing_case() {
    let out = lefrep(&["weyl", "--kind", "sp", "--n", "2", "--lambda", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["result"]["dim"], 0);
    assert_eq!(v["result"]["vanishes"], true);
    assert_eq!(v["result"]["oracle_agree"], true);
}

#[test]
fn weyl_rejects_orthogonal_rank_one() {
    let out = lefrep(&["weyl", "--kind", "o", "--n", "1", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn weyl_resource_guard_exit_code() {
    let out = lefrep(&["weyl", "--kind", "sp", "--n", "3", "--lambda", "4,2,1,1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn weyl_threads_give_identical_output() {
    let one = lefrep(&["weyl", "--kind", "o", "--n", "2", "--lambda", "2,1"]);
    let four = lefrep(&[
        "weyl", "--kind", "o", "--n", "2", "--lambda", "2,1", "--threads", "4",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn coniveau_very_general_surface() {
    let file = descriptor_file(VERY_GENERAL_SURFACE);
    let path = file.path().to_str().unwrap();
    let out = lefrep(&["coniveau", "--descriptor", path, "--m", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["table"]["0"], 6);
    assert_eq!(v["result"]["table"]["1"], 1);

    // byte-identical on repeat
    let again = lefrep(&["coniveau", "--descriptor", path, "--m", "1", "--k", "2"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn coniveau_refuses_type_iv() {
    let file = descriptor_file(TYPE_IV_CURVE);
    let path = file.path().to_str().unwrap();
    let out = lefrep(&["coniveau", "--descriptor", path, "--m", "1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(5));
    let v = json_stdout(&out);
    assert_eq!(v["status"], "refused");
    assert_eq!(v["result"]["rule"], "albert.type_iv.coniveau_unsupported");
}

#[test]
fn coniveau_reports_violations() {
    let file = descriptor_file(BAD_TYPE_III);
    let path = file.path().to_str().unwrap();
    let out = lefrep(&["coniveau", "--descriptor", path, "--m", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(4));
    let v = json_stdout(&out);
    assert_eq!(v["status"], "violation");
    assert_eq!(v["result"][0]["rule"], "albert.type_iii.strict_divisibility");
}

#[test]
fn coniveau_rejects_malformed_files() {
    let file = descriptor_file(r#"{"factors":[{"type":"V","f":1,"d":1,"g":1,"m":1}]}"#);
    let path = file.path().to_str().unwrap();
    let out = lefrep(&["coniveau", "--descriptor", path, "--m", "1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lefrep(&["coniveau", "--descriptor", "/nonexistent.json", "--m", "1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_paths() {
    let file = descriptor_file(VERY_GENERAL_SURFACE);
    let out = lefrep(&["validate", "--descriptor", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_stdout(&out)["result"]["valid"], true);

    let file = descriptor_file(BAD_TYPE_III);
    let out = lefrep(&["validate", "--descriptor", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let v = json_stdout(&out);
    assert_eq!(v["status"], "violation");
    assert_eq!(v["result"]["valid"], false);
}

#[test]
fn symvanish_defaults_to_threshold() {
    let out = lefrep(&["symvanish", "--g", "2", "--i", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["inputs"]["N"], 2);
    assert_eq!(v["result"]["vanishes"], true);
    // explicit N below the threshold can fail to vanish
    let out = lefrep(&["symvanish", "--g", "2", "--i", "2", "--N", "1"]);
    let v = json_stdout(&out);
    assert_eq!(v["result"]["vanishes"], false);
    // out-of-range weight index
    let out = lefrep(&["symvanish", "--g", "2", "--i", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn molien_kummer_surface() {
    let out = lefrep(&["molien", "--g", "2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["result"]["polynomial"], "1 + t^2");
    assert_eq!(v["result"]["odd_coefficients_vanish"], true);
    // guard path
    let out = lefrep(&["molien", "--g", "2", "--n", "12"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn projectors_report() {
    let out = lefrep(&["projectors", "--g", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["result"]["all_ok"], true);
    let ranks = v["result"]["ranks"].as_array().unwrap();
    let p20 = ranks
        .iter()
        .find(|r| r["k"] == 2 && r["r"] == 0)
        .expect("rank entry");
    assert_eq!(p20["rank"], 5);
    // guard path
    let out = lefrep(&["projectors", "--g", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn beauville_exponent_pairs() {
    let out = lefrep(&["beauville", "--g", "2", "--i", "2", "--j", "0"]);
    let v = json_stdout(&out);
    assert_eq!(v["result"]["pullback_exponent"], 2);
    assert_eq!(v["result"]["pushforward_exponent_zero_cycles"], 2);
    let out = lefrep(&["beauville", "--g", "2", "--i", "2", "--j", "1"]);
    let v = json_stdout(&out);
    assert_eq!(v["result"]["pullback_exponent"], 0);
    assert_eq!(v["result"]["pushforward_exponent_zero_cycles"], 4);
}

#[test]
fn tsv_renderings() {
    let out = lefrep(&["weyl", "--kind", "sp", "--n", "2", "--lambda", "1,1", "--tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("p_minus_q\tdim"));
    assert!(text.lines().any(|l| l == "0\t3"));

    let file = descriptor_file(VERY_GENERAL_SURFACE);
    let path = file.path().to_str().unwrap();
    let out = lefrep(&[
        "coniveau", "--descriptor", path, "--m", "1", "--k", "3", "--tsv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), "coniveau\tdim\n0\t4\n1\t4");
}

#[test]
fn unknown_arguments_exit_with_usage_error() {
    let out = lefrep(&["weyl", "--kind", "q", "--n", "2", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lefrep(&["weyl", "--kind", "sp", "--n", "2", "--lambda", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lefrep(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
