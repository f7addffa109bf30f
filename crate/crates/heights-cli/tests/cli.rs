//! End-to-end tests of the compiled binary: golden examples, exit codes,
//! output formats, and byte-level determinism.

use std::process::{Command, Output};

fn heights(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heights"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn test_height_single_rational() {
    let out = heights(&["height", "3/2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), format!("{}\n", 3f64.ln()));
}

#[test]
fn test_height_tuple_and_projective() {
    // affine tuple: clearing (2/3, 3/2) by lcm 6 gives max{6, 4, 9} = 9
    let out = heights(&["height", "2/3", "3/2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), format!("{}\n", 9f64.ln()));

    // projective (2 : 4) = (1 : 2)
    let out = heights(&["height", "--projective", "2", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), format!("{}\n", 2f64.ln()));
}

#[test]
fn test_height_bad_token_exits_2() {
    let out = heights(&["height", "3/x"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("3/x"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn test_interp_poly() {
    let out = heights(&[
        "interp-poly",
        "--nodes",
        "0,1,2",
        "--values",
        "0,1/2,2",
        "--degree",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0,0,1/2\n"); // X²/2
}

#[test]
fn test_interp_poly_negative_nodes() {
    let out = heights(&[
        "interp-poly",
        "--nodes",
        "-1,0,1",
        "--values",
        "1/2,0,1/2",
        "--degree",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0,0,1/2\n"); // X²/2 again, through ±1
}

#[test]
fn test_interp_poly_count_mismatch_exits_2() {
    let out = heights(&[
        "interp-poly",
        "--nodes",
        "0,1",
        "--values",
        "0,1",
        "--degree",
        "2",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("count mismatch"));
}

#[test]
fn test_interp_frac_auto() {
    let out = heights(&[
        "interp-frac",
        "--nodes",
        "0,1,2",
        "--values",
        "1,1/2,1/3",
        "--auto",
        "--degree",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 | 1,1\n"); // 1/(X+1)
}

#[test]
fn test_interp_frac_explicit_profile() {
    let out = heights(&[
        "interp-frac",
        "--nodes",
        "0,1,2",
        "--values",
        "1,1/2,1/3",
        "--dp",
        "1",
        "--dq",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 | 1,1\n");
}

#[test]
fn test_interp_frac_flag_conflicts_exit_2() {
    let base = ["interp-frac", "--nodes", "0,1,2", "--values", "1,2,3"];
    for extra in [
        vec!["--dp", "1"],                        // --dq missing
        vec!["--auto"],                           // --degree missing
        vec!["--dp", "1", "--dq", "1", "--auto"], // both modes
    ] {
        let mut args: Vec<&str> = base.to_vec();
        args.extend(extra);
        let out = heights(&args);
        assert_eq!(code(&out), 2, "args {args:?}");
    }
}

#[test]
fn test_interp_frac_no_fit_exits_2() {
    // zero at two points forces numerator degree ≥ 2; nothing of total
    // degree ≤ 1 passes through (0,0), (1,1), (2,0)
    let out = heights(&[
        "interp-frac",
        "--nodes",
        "0,1,2",
        "--values",
        "0,1,0",
        "--auto",
        "--degree",
        "1",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no fraction"));
}

#[test]
fn test_nf_unit() {
    let out = heights(&["nf", "unit", "--m", "2"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["m"], 2);
    assert_eq!(v["unit"], "1 + 1*sqrt(2)");
    assert_eq!(v["norm"], "-1");
    let expected = 0.5 * (1.0 + 2f64.sqrt()).ln();
    assert!((v["height"].as_f64().unwrap() - expected).abs() < 1e-12);
}

#[test]
fn test_nf_unit_rejects_non_squarefree() {
    let out = heights(&["nf", "unit", "--m", "12"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("12"));
}

#[test]
fn test_nf_reduce_unit_power() {
    // 161 + 72√5 = ((1+√5)/2)^12, so reduction lands exactly on 1
    let out = heights(&["nf", "reduce", "--m", "5", "--element", "161,72"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["n"], -12);
    assert_eq!(v["reduced"], "1");
    assert_eq!(v["height_after"], 0.0);
    // h(ε₀¹²) = 12·h(ε₀) = 6·log((1+√5)/2) ≈ 2.887
    let expected = 6.0 * ((1.0 + 5f64.sqrt()) / 2.0).ln();
    assert!((v["height_before"].as_f64().unwrap() - expected).abs() < 1e-9);
    assert!(v["bound"].as_f64().unwrap() > 0.0);
}

#[test]
fn test_verify_padic_json() {
    let out = heights(&["verify", "padic", "--trials", "5", "--seed", "0"]);
    assert_eq!(code(&out), 0);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let arr = reports.as_array().expect("array");
    assert_eq!(arr.len(), 3);
    let names: Vec<&str> = arr.iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        ["dense-subinterval-window", "prime-log-sum", "valuation-sum"]
    );
    for r in arr {
        assert_eq!(r["passed"], true);
        assert_eq!(r["hypotheses_ok"], true);
        assert!(r["inputs_digest"].as_str().unwrap().len() == 16);
    }
}

#[test]
fn test_verify_all_and_determinism() {
    let args = ["verify", "all", "--trials", "2", "--seed", "0"];
    let first = heights(&args);
    assert_eq!(code(&first), 0);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid json");
    // 5 + 6 + 4 + 3 + 4 + 2 + 2 reports across the seven suites
    assert_eq!(reports.as_array().expect("array").len(), 26);

    let second = heights(&args);
    assert_eq!(first.stdout, second.stdout, "identical argv+seed must agree");
}

#[test]
fn test_verify_seed_changes_output() {
    let a = heights(&["verify", "fractions", "--trials", "3", "--seed", "1"]);
    let b = heights(&["verify", "fractions", "--trials", "3", "--seed", "2"]);
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn test_verify_out_file() {
    let dir = std::env::temp_dir().join("heights-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reports.json");
    let out = heights(&[
        "verify",
        "heights",
        "--trials",
        "2",
        "--seed",
        "0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let reports: serde_json::Value = serde_json::from_str(&written).expect("valid json");
    assert_eq!(reports.as_array().expect("array").len(), 5);
    std::fs::remove_file(&path).ok();
}

#[test]
fn test_verify_text_and_csv_formats() {
    let out = heights(&[
        "verify", "heights", "--trials", "2", "--seed", "0", "--format", "text",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));

    let out = heights(&[
        "verify", "heights", "--trials", "2", "--seed", "0", "--format", "csv",
    ]);
    let csv = stdout(&out);
    assert!(csv.starts_with("name,hypotheses_ok,bound,measured,passed,inputs_digest\n"));
    assert_eq!(csv.lines().count(), 6);
}

#[test]
fn test_verify_unknown_suite_exits_2() {
    let out = heights(&["verify", "nonsense", "--trials", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("nonsense"));
}

#[test]
fn test_verify_poly_bounds_degree_max() {
    let out = heights(&[
        "verify",
        "poly-bounds",
        "--trials",
        "3",
        "--seed",
        "0",
        "--degree-max",
        "6",
    ]);
    assert_eq!(code(&out), 0);

    let out = heights(&[
        "verify", "padic", "--trials", "2", "--degree-max", "6",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--degree-max"));
}

#[test]
fn test_verify_corollary_pinned() {
    let out = heights(&[
        "verify", "corollary", "--trials", "2", "--c", "2", "--degree", "3",
    ]);
    assert_eq!(code(&out), 0);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    for r in reports.as_array().expect("array") {
        assert_eq!(r["name"], "slow-growth-corollary");
        assert_eq!(r["passed"], true);
    }

    // a constant too small for the degree is an input error
    let out = heights(&[
        "verify", "corollary", "--trials", "2", "--c", "1", "--degree", "1",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("too small"));

    // --c and --degree travel together
    let out = heights(&["verify", "corollary", "--trials", "2", "--c", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn test_tightness_csv_and_json() {
    let args = [
        "experiment", "tightness", "--dmax", "2", "--trials", "2", "--seed", "1",
    ];
    let out = heights(&args);
    assert_eq!(code(&out), 0);
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "trial,d,hF,bound_basic,bound_main,ratio_basic,ratio_main"
    );
    assert_eq!(lines.count(), 4); // dmax × trials rows

    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let out = heights(&json_args);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = rows.as_array().expect("array");
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert!(row["hF"].as_f64().unwrap() > 0.0);
        assert!(row["ratio_basic"].as_f64().unwrap() >= 1.0);
        assert!(row["ratio_main"].as_f64().unwrap() >= 1.0);
    }

    // identical argv+seed ⇒ identical bytes
    let again = heights(&args);
    assert_eq!(out.status.code(), again.status.code());
    let repeat = heights(&json_args);
    assert_eq!(out.stdout, repeat.stdout);
}

#[test]
fn test_no_args_usage_error() {
    let out = heights(&[]);
    assert_eq!(code(&out), 2);
}
