//! End-to-end tests of the command-line surface: subcommands, file formats,
//! JSON determinism and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn lineal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lineal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn catalog_json_report() {
    let out = lineal(&["catalog", "complete-quadrangle", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["configuration"]["m"], 4);
    assert_eq!(v["chi"], 0);
    assert_eq!(v["flags"]["singularly_saturated"], true);
    assert_eq!(v["configuration"]["n_i"].as_array().unwrap().len(), 6);
}

#[test]
fn catalog_unknown_name_exits_one() {
    let out = lineal(&["catalog", "unknown-configuration"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_rational_file() {
    let f = write_temp(
        r#"{"field": "Q", "lines": [["1","0","0"], ["0","1","0"], ["0","0","1"],
            ["0","1","-1"], ["-1","0","1"], ["1","-1","0"]]}"#,
    );
    let out = lineal(&["config", "analyze", f.path().to_str().unwrap(), "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["configuration"]["m"], 4);
    assert_eq!(v["chi"], 0);
}

#[test]
fn analyze_cyclotomic_file() {
    // two pencil lines and the coordinate frame over the third roots of unity
    let f = write_temp(
        r#"{"field": {"cyclotomic": 3},
            "lines": [["1","0","0"], ["0","1","0"], ["0","0","1"],
                      ["1", ["0","-1"], "0"]]}"#,
    );
    let out = lineal(&["config", "analyze", f.path().to_str().unwrap(), "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["configuration"]["lines"].as_array().unwrap().len(), 4);
}

#[test]
fn analyze_missing_file_exits_one() {
    let out = lineal(&["config", "analyze", "/nonexistent/path.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn extend_classifies_case_a() {
    let f = write_temp(
        r#"{"field": "Q", "lines": [["1","0","0"], ["0","1","0"], ["0","0","1"],
            ["0","1","-1"], ["-1","0","1"], ["1","-1","0"]]}"#,
    );
    let out = lineal(&[
        "config",
        "extend",
        f.path().to_str().unwrap(),
        "--line",
        "1,1,-1",
        "--json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["case"], "a");
    assert_eq!(v["m_delta"], 2);
    assert_eq!(v["chi_preserved"], true);
    assert_eq!(v["extended"]["m"], 6);
}

#[test]
fn compare_same_and_different() {
    let cq = r#"{"field": "Q", "lines": [["1","0","0"], ["0","1","0"], ["0","0","1"],
        ["0","1","-1"], ["-1","0","1"], ["1","-1","0"]]}"#;
    let f1 = write_temp(cq);
    let f2 = write_temp(cq);
    let out = lineal(&[
        "config",
        "compare",
        f1.path().to_str().unwrap(),
        f2.path().to_str().unwrap(),
        "--json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["same_incidence_type"], true);
}

#[test]
fn kummer_equations_from_catalog_name() {
    let out = lineal(&["kummer", "equations", "complete-quadrangle", "--n", "5", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 5);
    assert_eq!(v["equations"].as_array().unwrap().len(), 3);
}

#[test]
fn kummer_certify_reports_dims() {
    let out = lineal(&["kummer", "certify", "complete-quadrangle", "--n", "3", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["contained"], true);
    assert_eq!(v["dims"]["ambient"], 159);
    assert_eq!(v["dims"]["T"], 35);
    assert_eq!(v["dims"]["E"], 35);
    assert!(v["note"].as_str().unwrap().contains("necessary conditions"));
}

#[test]
fn kummer_certify_guardrail_exits_one() {
    let out = lineal(&[
        "kummer",
        "certify",
        "complete-quadrangle",
        "--n",
        "3",
        "--max-unknowns",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn delpezzo_verify_all_degrees() {
    for degree in ["8", "7", "6", "5", "4"] {
        let out = lineal(&["delpezzo", "verify", "--degree", degree, "--json"]);
        let v = stdout_json(&out);
        assert_eq!(v["passed"], true, "degree {degree}");
    }
}

#[test]
fn delpezzo_present_degree_4_numeric_and_symbolic() {
    let out = lineal(&[
        "delpezzo", "present", "--degree", "4", "--lambda", "2", "--mu", "3", "--json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["equations"].as_array().unwrap().len(), 10);
    let out = lineal(&["delpezzo", "present", "--degree", "4", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["equations"].as_array().unwrap().len(), 10);
    // degenerate parameters are usage errors
    let out = lineal(&[
        "delpezzo", "present", "--degree", "4", "--lambda", "1", "--mu", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hk_verify_passes() {
    for n in ["2", "5"] {
        let out = lineal(&["hk", "verify", "--n", n, "--json"]);
        let v = stdout_json(&out);
        assert_eq!(v["passed"], true, "n={n}");
    }
}

#[test]
fn hk_present_shapes() {
    let out = lineal(&["hk", "present", "--n", "3", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["minors"].as_array().unwrap().len(), 4);
    assert_eq!(v["fermat_equations"].as_array().unwrap().len(), 4);
    assert_eq!(v["surface_equations"].as_array().unwrap().len(), 4);
}

#[test]
fn smoothness_json_is_byte_identical_across_runs_and_threads() {
    let args = [
        "hk", "smoothness", "--n", "2", "--prime", "41", "--trials", "100", "--seed", "3",
        "--json",
    ];
    let a = lineal(&args);
    let b = lineal(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "same invocation must be byte-identical");
    let mut threaded = args.to_vec();
    threaded.extend(["--threads", "4"]);
    let c = lineal(&threaded);
    assert_eq!(a.stdout, c.stdout, "thread count must not change the report");
    let v = stdout_json(&a);
    assert_eq!(v["trials"], 100);
    assert!(v["note"].as_str().unwrap().contains("corroborat"));
}

#[test]
fn smoothness_invalid_prime_exits_one() {
    let out = lineal(&[
        "hk", "smoothness", "--n", "3", "--prime", "11", "--trials", "10", "--seed", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
