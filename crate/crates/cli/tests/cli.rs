use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verlinde")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(args)
        .env(key, val)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn payload(args: &[&str]) -> Value {
    json(args)["payload"].clone()
}

fn exit_code(args: &[&str]) -> i32 {
    let out = run(args);
    let err = String::from_utf8_lossy(&out.stderr);
    if !out.status.success() {
        assert_eq!(err.trim_end().lines().count(), 1, "one diagnostic line expected: {err}");
    }
    out.status.code().unwrap()
}

/// Numeric tokens in reading order.
fn numbers(text: &str) -> Vec<f64> {
    text.split(|c: char| !(c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E')))
        .filter_map(|t| t.parse::<f64>().ok())
        .collect()
}

#[test]
fn envelope_fields() {
    let v = json(&["fuse", "--group", "A2", "--level", "3", "--lhs", "1,0", "--rhs", "0,1"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "group", "level", "payload", "tool_version"]);
    assert_eq!(v["command"], "fuse");
    assert_eq!(v["group"], "A2");
    assert_eq!(v["level"], 3);
}

#[test]
fn fuse_examples() {
    let p = payload(&["fuse", "--group", "A1", "--level", "1", "--lhs", "1", "--rhs", "1"]);
    assert_eq!(p["terms"], serde_json::json!([{ "weight": [0], "coeff": 1 }]));
    let p = payload(&["fuse", "--group", "A1", "--level", "0", "--lhs", "0", "--rhs", "0"]);
    assert_eq!(p["terms"], serde_json::json!([{ "weight": [0], "coeff": 1 }]));
    // (1,0) x (0,1) = (0,0) + (1,1) at level 3
    let p = payload(&["fuse", "--group", "A2", "--level", "3", "--lhs", "1,0", "--rhs", "0,1"]);
    assert_eq!(p["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn spins_are_doubled() {
    let a = payload(&["fuse", "--group", "A1", "--level", "4", "--lhs", "1/2", "--rhs", "3/2", "--spin"]);
    let b = payload(&["fuse", "--group", "A1", "--level", "4", "--lhs", "1", "--rhs", "3"]);
    assert_eq!(a, b);
    assert_eq!(exit_code(&["fuse", "--group", "A2", "--level", "4", "--lhs", "1/2", "--rhs", "1", "--spin"]), 2);
    assert_eq!(exit_code(&["fuse", "--group", "A1", "--level", "4", "--lhs", "1/3", "--rhs", "1", "--spin"]), 2);
}

#[test]
fn levels_of_so3() {
    let p = payload(&["levels", "--group", "A1/Z2"]);
    assert_eq!(p, serde_json::json!({ "basic": 2, "multiplicative": 4, "fundamental": 2 }));
    let p = payload(&["levels", "--group", "A2/Z3"]);
    assert_eq!(p, serde_json::json!({ "basic": 1, "multiplicative": 3, "fundamental": null }));
}

#[test]
fn tensor_payload() {
    let p = payload(&["tensor", "--group", "A1", "--lhs", "1", "--rhs", "1"]);
    assert_eq!(p["lhs"], serde_json::json!([1]));
    assert_eq!(p["components"], serde_json::json!([{ "weight": [0], "mult": 1 }, { "weight": [2], "mult": 1 }]));
}

#[test]
fn smatrix_payload() {
    let p = payload(&["smatrix", "--group", "A1", "--level", "2"]);
    assert_eq!(p["c"], "3/2");
    assert_eq!(p["basis"].as_array().unwrap().len(), 3);
    assert_eq!(p["T_phase"].as_array().unwrap().len(), 3);
    let s00 = p["S_re"][0][0].as_f64().unwrap();
    assert!((s00 - 0.5).abs() < 1e-12);
}

#[test]
fn table_payload() {
    let p = payload(&["table", "--group", "A1", "--level", "2"]);
    assert_eq!(p["group"], "A1");
    assert_eq!(p["basis"], serde_json::json!([[0], [1], [2]]));
    assert!(p["N"].as_array().unwrap().contains(&serde_json::json!([1, 1, 2, 1])));
}

#[test]
fn classify_and_orbits() {
    let p = payload(&["classify", "--group", "A1/Z2", "--level", "4", "--char", "0"]);
    let items = p.as_array().unwrap();
    // H_0 + H_4, then H_2^+ and H_2^-
    assert_eq!(items.len(), 3);
    assert_eq!(items[0]["orbit"], serde_json::json!([[0], [4]]));
    assert_eq!(items[0]["virasoro"], serde_json::json!([[[0], 1], [[4], 1]]));
    assert_eq!(items[1]["stabilizer_order"], 2);
    assert_eq!((items[1]["rho"].clone(), items[2]["rho"].clone()), (0.into(), 1.into()));

    let p = payload(&["orbits", "--group", "A2/Z3", "--level", "3", "--char", "0"]);
    let orbits = p[0]["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 2);
    assert_eq!(orbits[1]["members"], serde_json::json!([[1, 1]]));
    assert_eq!(orbits[1]["stabilizer_order"], 3);
    let all = payload(&["orbits", "--group", "A2/Z3", "--level", "3"]);
    assert_eq!(all.as_array().unwrap().len(), 3);
}

#[test]
fn invariant_commutes() {
    let p = payload(&["invariant", "--group", "A1/Z2", "--level", "4"]);
    assert_eq!(p["commutes_S"], true);
    assert_eq!(p["commutes_T"], true);
    assert_eq!(p["M"][2][2], 2);
    assert_eq!(p["M"][0][4], 1);
}

#[test]
fn brane_product_matches_fusion() {
    let a = payload(&["brane", "--group", "A2", "--level", "3", "--lhs", "1,0", "--rhs", "1,1"]);
    let b = payload(&["fuse", "--group", "A2", "--level", "3", "--lhs", "1,0", "--rhs", "1,1"]);
    assert_eq!(a, b);
}

#[test]
fn repro_passes() {
    let p = payload(&["repro"]);
    let lines = p.as_array().unwrap();
    assert_eq!(lines.len(), 20);
    assert!(lines.iter().all(|l| l["passed"] == true));
}

#[test]
fn exit_codes() {
    // malformed
    assert_eq!(exit_code(&["fuse", "--group", "Q1", "--level", "1", "--lhs", "1", "--rhs", "1"]), 2);
    assert_eq!(exit_code(&["fuse", "--group", "A2", "--level", "1", "--lhs", "1", "--rhs", "1"]), 2);
    assert_eq!(exit_code(&["fuse", "--group", "A1", "--level", "1", "--lhs", "2", "--rhs", "1"]), 2);
    assert_eq!(exit_code(&["fuse", "--group", "A1", "--level", "-1", "--lhs", "0", "--rhs", "0"]), 2);
    assert_eq!(exit_code(&["levels", "--group", "A2/Z2"]), 2);
    assert_eq!(exit_code(&["weights", "--group", "A1"]), 2);
    // unsupported
    assert_eq!(exit_code(&["classify", "--group", "A1/Z2", "--level", "3", "--char", "0"]), 3);
    assert_eq!(exit_code(&["invariant", "--group", "A1/Z2", "--level", "2"]), 3);
    assert_eq!(exit_code(&["levels", "--group", "D8/Z2,-"]), 3);
    assert_eq!(exit_code(&["classify", "--group", "A2/Z3", "--level", "1", "--char", "0"]), 3);
    // resource
    assert_eq!(exit_code(&["tensor", "--group", "E8", "--lhs", "5,5,5,5,5,5,5,5", "--rhs", "5,5,5,5,5,5,5,5"]), 4);
    let out = run_env(&["table", "--group", "A2", "--level", "3"], "VERLINDE_MAX_BASIS", "3");
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[resource-cap]"));
    let out = run_env(&["table", "--group", "A2", "--level", "3"], "VERLINDE_MAX_BASIS", "lots");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--group", "B2", "--level", "3"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    let c = run_env(&args, "RAYON_NUM_THREADS", "1").stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
    let args = ["smatrix", "--group", "G2", "--level", "2"];
    assert_eq!(run(&args).stdout, run_env(&args, "RAYON_NUM_THREADS", "1").stdout);
}

#[test]
fn table_and_json_carry_the_same_numbers() {
    let cases: [&[&str]; 8] = [
        &["fuse", "--group", "A2", "--level", "3", "--lhs", "1,1", "--rhs", "1,1"],
        &["table", "--group", "A1", "--level", "3"],
        &["smatrix", "--group", "A2", "--level", "2"],
        &["orbits", "--group", "A1/Z2", "--level", "4"],
        &["classify", "--group", "A2/Z3", "--level", "6", "--char", "1"],
        &["invariant", "--group", "A2/Z3", "--level", "3"],
        &["levels", "--group", "A1/Z2"],
        &["tensor", "--group", "G2", "--lhs", "1,0", "--rhs", "0,1"],
    ];
    for args in cases {
        let raw = String::from_utf8(run(args).stdout).unwrap();
        // compare against the printed text; parsing floats back is not exact
        let start = raw.find("\"payload\":").unwrap();
        let end = raw.rfind(",\"tool_version\"").unwrap();
        let p = &raw[start + "\"payload\":".len()..end];
        let mut t = args.to_vec();
        t.extend(["--format", "table"]);
        let out = run(&t);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        let body = text.split_once('\n').map(|(_, b)| b).unwrap_or("");
        assert_eq!(numbers(body), numbers(p), "{args:?}");
    }
}
