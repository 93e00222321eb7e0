//! End-to-end tests of the `legmunu` binary: output schema, exit-code
//! contract, and consistency between commands.

use std::process::{Command, Output};

fn legmunu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legmunu"))
        .args(args)
        .output()
        .expect("failed to spawn legmunu")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is not valid JSON")
}

fn field_f64(v: &serde_json::Value, key: &str) -> f64 {
    v[key]
        .as_str()
        .unwrap_or_else(|| panic!("missing field {key} in {v}"))
        .parse()
        .unwrap()
}

#[test]
fn eval_elementary_anchor() {
    let out = legmunu(&["eval", "Qnn", "--nu", "0", "--z", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["selector"], "Qnn");
    assert_eq!(v["method"], "closed");
    assert!((field_f64(&v, "re") - 0.549_306_144_334_054_8).abs() <= 1e-12);
    assert!(field_f64(&v, "im").abs() <= 1e-15);
    assert!(field_f64(&v, "abs_err") <= 1e-12);
}

#[test]
fn eval_special_value_arithmetic() {
    // P_1^{-1}(3) = sqrt(9-1)/(2 Gamma(2)) = sqrt(2).
    let out = legmunu(&["eval", "Pnmn", "--nu", "1", "--z", "3"]);
    let v = stdout_json(&out);
    assert!((field_f64(&v, "re") - std::f64::consts::SQRT_2).abs() <= 1e-12);
}

#[test]
fn eval_methods_agree_for_ferrers_q_neg_nu() {
    let closed = stdout_json(&legmunu(&[
        "eval", "FQnmn", "--nu", "0.5", "--x", "0.5", "--method", "closed",
    ]));
    let integral = stdout_json(&legmunu(&[
        "eval", "FQnmn", "--nu", "0.5", "--x", "0.5", "--method", "integral",
    ]));
    assert_eq!(closed["method"], "closed");
    assert_eq!(integral["method"], "integral");
    let d = (field_f64(&closed, "re") - field_f64(&integral, "re")).abs();
    assert!(d <= 1e-8, "closed vs integral differ by {d:.3e}");
}

#[test]
fn eval_falls_back_to_integral_inside_guard_disk() {
    let out = legmunu(&["eval", "Qnn", "--nu", "0.5", "--z", "1.01"]);
    let v = stdout_json(&out);
    assert_eq!(v["method"], "integral");
    assert_eq!(v["fallback"], true);
}

#[test]
fn complex_literals_round_trip() {
    let out = legmunu(&["eval", "Qnn", "--nu", "0.3+0.2i", "--z", "2.5-0.7i"]);
    let v = stdout_json(&out);
    // The echoed canonical literals parse back to the same numbers when fed
    // through the CLI again.
    let nu = v["nu"].as_str().unwrap().to_string();
    let z = v["point"].as_str().unwrap().to_string();
    let again = stdout_json(&legmunu(&["eval", "Qnn", "--nu", &nu, "--z", &z]));
    assert_eq!(v["re"], again["re"]);
    assert_eq!(v["im"], again["im"]);
    assert_eq!(again["nu"].as_str().unwrap(), nu);
    assert_eq!(again["point"].as_str().unwrap(), z);
}

#[test]
fn table_constant_function_rows() {
    let out = legmunu(&[
        "table", "FPnn", "--nu", "0", "--start", "-0.8", "--stop", "0.8", "--steps", "4",
    ]);
    let v = stdout_json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for row in rows {
        assert!((field_f64(row, "re") - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn table_last_row_is_atanh() {
    let out = legmunu(&[
        "table", "FQnmn", "--nu", "0", "--start", "0", "--stop", "0.5", "--steps", "5",
    ]);
    let v = stdout_json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!((field_f64(&rows[5], "re") - 0.549_306_144_334_054_8).abs() <= 1e-10);
}

#[test]
fn table_rows_match_eval() {
    let out = legmunu(&[
        "table", "Qnn", "--nu", "0.5", "--start", "2", "--stop", "4", "--steps", "10",
    ]);
    let v = stdout_json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 11);
    for k in [0usize, 5, 10] {
        let z = 2.0 + 2.0 * k as f64 / 10.0;
        let single = stdout_json(&legmunu(&["eval", "Qnn", "--nu", "0.5", "--z", &z.to_string()]));
        assert_eq!(rows[k]["re"], single["re"], "row {k}");
        assert_eq!(rows[k]["im"], single["im"], "row {k}");
    }
}

#[test]
fn integrate_cap_and_wing() {
    let v = stdout_json(&legmunu(&["integrate", "cap", "--nu", "1"]));
    assert!((field_f64(&v, "quadrature_re") - 1.0).abs() <= 1e-10);
    assert!((field_f64(&v, "gamma_ratio_re") - 1.0).abs() <= 1e-10);
    assert!(field_f64(&v, "abs_diff") <= 1e-10);

    let v = stdout_json(&legmunu(&["integrate", "cap", "--nu", "0.5"]));
    assert!((field_f64(&v, "gamma_ratio_re") - std::f64::consts::FRAC_PI_2).abs() <= 1e-10);

    let v = stdout_json(&legmunu(&["integrate", "wing", "--nu", "0.25"]));
    assert!((field_f64(&v, "quadrature_re") - 3.708_149_354_6).abs() <= 1e-8);
    assert!(field_f64(&v, "abs_diff") <= 1e-8);
}

#[test]
fn verify_reports_parse_back() {
    let out = legmunu(&["verify", "--seed", "42", "--samples", "2"]);
    let v = stdout_json(&out);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 12);
    for r in reports {
        assert!(r["identity_id"].is_string());
        assert!(r["samples_run"].as_u64().unwrap() == 2);
        let _max: f64 = r["max_residual"].as_str().unwrap().parse().unwrap();
        let _mean: f64 = r["mean_residual"].as_str().unwrap().parse().unwrap();
        assert!(r["failures"].is_array());
        assert_eq!(r["passed"], true);
    }
}

#[test]
fn exit_code_contract() {
    // 0: success paths.
    assert_eq!(legmunu(&["eval", "Qnn", "--nu", "0", "--z", "2"]).status.code(), Some(0));
    assert_eq!(legmunu(&["verify", "--samples", "1"]).status.code(), Some(0));
    // 1: verification failure (an unreachable tolerance).
    assert_eq!(
        legmunu(&["verify", "--samples", "1", "--tol", "whipple=1e-300"])
            .status
            .code(),
        Some(1)
    );
    // 2: usage and domain errors.
    let cases: &[&[&str]] = &[
        &["eval", "Qnn", "--nu", "0", "--z", "0.5"],            // on the cut
        &["eval", "Qnn", "--nu", "0"],                          // missing point
        &["eval", "Qnn", "--nu", "0", "--x", "0.5"],            // wrong point flag
        &["eval", "FQnmn", "--nu", "0", "--x", "1.5"],          // outside (-1, 1)
        &["eval", "FQnmn", "--nu", "0", "--z", "2"],            // wrong point flag
        &["eval", "Pnmn", "--nu", "1", "--z", "3", "--method", "integral"], // no such path
        &["eval", "Qnn", "--nu", "bogus", "--z", "2"],          // parse failure
        &["eval", "Qnn", "--nu", "-1.5", "--z", "2"],           // Gamma pole
        &["table", "Qnn", "--nu", "0", "--start", "0.5", "--stop", "4", "--steps", "4"], // grid on cut
        &["table", "Qnn", "--nu", "0", "--start", "2", "--stop", "4", "--steps", "0"], // steps < 1
        &["integrate", "wing", "--nu", "0.6"],                  // outside strip
        &["integrate", "nonsense", "--nu", "0.25"],             // bad subcommand value
        &["verify", "--tol", "nonsense=1e-3", "--samples", "1"], // unknown identity
        &["frobnicate"],                                        // unknown subcommand
    ];
    for args in cases {
        let out = legmunu(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "args {args:?}: stdout {} stderr {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn domain_errors_are_single_line_machine_readable() {
    let out = legmunu(&["eval", "Qnn", "--nu", "0", "--z", "0.5"]);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.trim_end().lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(stderr.trim_end()).unwrap();
    assert_eq!(v["error"]["kind"], "CutError");
    assert!(v["error"]["message"].is_string());
}

#[test]
fn csv_output_has_header_and_rows() {
    let out = legmunu(&[
        "table", "FQnmn", "--nu", "0", "--start", "0", "--stop", "0.5", "--steps", "2", "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines[0], "point,re,im,abs_err");
    assert_eq!(lines.len(), 4);
}
