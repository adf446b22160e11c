//! Binary-level tests of the command-line surface.

use std::process::{Command, Output};

fn iboson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iboson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = iboson(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_plane_box() {
    let text = stdout(&["enumerate", "--plane", "2,2,1"]);
    assert!(text.contains("count: 5"));
    let text = stdout(&["enumerate", "--plane", "0,0,0"]);
    assert!(text.contains("count: 1"));
}

#[test]
fn enumerate_strict_box() {
    let text = stdout(&["enumerate", "--strict", "1,1"]);
    assert!(text.contains("count: 2"));
}

#[test]
fn enumerate_json_round_trips() {
    let text = stdout(&["enumerate", "--plane", "2,2,2", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let items = v["items"].as_array().unwrap();
    assert_eq!(items.len() as u64, v["count"].as_u64().unwrap());
    // each item parses back into a valid strict plane partition
    let expected = iboson_core::enumerate_boxed_strict(2, 2, 2);
    assert_eq!(items.len(), expected.len());
    for (item, want) in items.iter().zip(&expected) {
        let rows: Vec<Vec<u32>> = serde_json::from_value(item.clone()).unwrap();
        let pi = iboson_core::PlanePartition::new(rows);
        assert_eq!(&pi, want);
    }
}

#[test]
fn enumerate_refuses_oversized() {
    let out = iboson(&["enumerate", "--plane", "9,9,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("safety bound"));
}

#[test]
fn schurq_examples() {
    let text = stdout(&["schurq", "--mu", "1", "--vars", "2"]);
    assert!(text.contains("2*x2 + 2*x1") || text.contains("2*x1 + 2*x2"));
    assert!(text.contains("routes agree"));
    let text = stdout(&["schurq", "--mu", "", "--vars", "1"]);
    assert_eq!(text.lines().next().unwrap(), "1");
    let text = stdout(&["schurq", "--mu", "2,1", "--vars", "1"]);
    assert_eq!(text.lines().next().unwrap(), "0");
}

#[test]
fn schurq_bad_partition_is_usage_error() {
    let out = iboson(&["schurq", "--mu", "1,2", "--vars", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scalar_product_unit_box() {
    let text = stdout(&["scalar-product", "--dims", "1,1,1,1"]);
    assert!(text.contains("routes agree"));
    assert!(text.contains("4*x1*y1*z1*v1"));
}

#[test]
fn series_strict_buc_margins() {
    let text = stdout(&["series", "strict-buc", "--order", "4", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let terms = v["series"]["terms"].as_array().unwrap();
    let coeff = |p: u64, q: u64| -> String {
        terms
            .iter()
            .find(|t| {
                t["exps"]["p"].as_u64().unwrap_or(0) == p
                    && t["exps"]["q"].as_u64().unwrap_or(0) == q
            })
            .map(|t| t["a"].as_str().unwrap().to_string())
            .unwrap_or_else(|| "0".into())
    };
    assert_eq!(coeff(0, 0), "1");
    assert_eq!(coeff(1, 0), "2");
    assert_eq!(coeff(2, 0), "6");
    assert_eq!(coeff(3, 0), "16");
    assert_eq!(coeff(4, 0), "38");
}

#[test]
fn slice_reports_figure_statistics() {
    let text = stdout(&[
        "slice",
        "--json",
        "[[5,4,3,2,1],[4,2,2,1],[3,1,1],[1]]",
        "--output",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["weight"], 30);
    assert_eq!(v["path_regions"], 11);
    assert_eq!(v["path_formula"], 11);
    assert_eq!(v["slices"][3]["parts"], serde_json::json!([5, 2, 1]));
}

#[test]
fn verify_single_check_and_alias() {
    let text = stdout(&["verify", "lemma-2-3", "--box", "3,3,4"]);
    assert!(text.contains("PASS path-statistic"));
    let text = stdout(&["verify", "path-statistic", "--box", "2,2,3"]);
    assert!(text.contains("PASS"));
}

#[test]
fn verify_unknown_check_is_usage_error() {
    let out = iboson(&["verify", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_mutation_control_fails_with_witness() {
    let out = iboson(&[
        "verify",
        "scalar-product",
        "--dims",
        "1,1,1,1",
        "--order",
        "4",
        "--mutate",
        "--output",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["pass"], false);
    let witness = v["checks"][0]["witness"].as_str().unwrap();
    assert!(witness.contains("lhs=") && witness.contains("rhs="));
}

#[test]
fn verify_json_report_round_trips() {
    let text = stdout(&[
        "verify",
        "example-matrix",
        "--output",
        "json",
        "--threads",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], "iboson-report/1");
    assert_eq!(v["pass"], true);
    assert_eq!(v["threads"], 2);
    // parse(render(x)) = x through the typed report
    let report: iboson_cli::report::Report = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_value(&report).unwrap();
    assert_eq!(again, v);
}

#[test]
fn env_var_sets_thread_count() {
    let out = Command::new(env!("CARGO_BIN_EXE_iboson"))
        .args(["verify", "example-matrix", "--output", "json"])
        .env("IBOSON_THREADS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["threads"], 3);
}
