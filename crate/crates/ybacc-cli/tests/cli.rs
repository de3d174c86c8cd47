//! End-to-end tests of the `ybacc` binary: real process, real argv, real
//! exit codes. Reports are parsed from stdout as JSON.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use ybacc_cli::report::canonical_body;
use ybacc_core::acc::{assemble_check_r, BasisOrdering};
use ybacc_core::catalog::random_params;
use ybacc_core::io::MatrixFile;

fn ybacc(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_ybacc"))
        .args(args)
        .output()
        .expect("binary should run");
    let stdout = String::from_utf8(out.stdout).expect("stdout should be UTF-8");
    (stdout, out.status.code().expect("no signal exit"))
}

fn json(args: &[&str]) -> (Value, i32) {
    let (stdout, code) = ybacc(args);
    let value = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("stdout should be JSON ({e}): {stdout}"));
    (value, code)
}

/// Unique scratch path; removed by the caller.
fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("ybacc-test-{}-{}.json", std::process::id(), name))
}

#[test]
fn list_reports_the_full_catalog() {
    let (doc, code) = json(&["list"]);
    assert_eq!(code, 0);
    let families = doc["families"].as_array().unwrap();
    assert_eq!(families.len(), 15);
    let by_name = |n: &str| {
        families
            .iter()
            .find(|f| f["name"] == n)
            .unwrap_or_else(|| panic!("family {n} listed"))
    };
    // The branch choice of case1 is a root selection, not a free parameter.
    assert_eq!(by_name("case1")["free_parameters"], "3/0");
    assert_eq!(by_name("case3_1_2")["free_parameters"], "3/1");
    assert_eq!(by_name("case5_5_1_2")["free_parameters"], "2/1");
    assert_eq!(by_name("case6_2_2")["free_parameters"], "2/1");
    assert_eq!(by_name("fixture_p")["fixture"], true);
    assert!(by_name("case3_1_2")["spectrum"].as_str().unwrap().contains("omega"));

    let empty = doc["empty_branches"].as_array().unwrap();
    assert_eq!(empty.len(), 8);
    for branch in empty {
        assert!(!branch["reason"].as_str().unwrap().is_empty());
    }
}

#[test]
fn verify_case5_7_on_the_involutory_slice_passes() {
    let (doc, code) = json(&[
        "verify",
        "--family",
        "case5_7",
        "--param",
        "b=1",
        "--param",
        "x2=1",
        "--param",
        "x3=1",
        "--param",
        "epsilon=-1",
    ]);
    assert_eq!(code, 0, "expected a pass: {doc}");
    assert_eq!(doc["pass"], true);
    let spectrum = doc["spectrum"].as_array().unwrap();
    let pairs: Vec<(String, u64)> = spectrum
        .iter()
        .map(|r| (r["value"].as_str().unwrap().to_string(), r["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, vec![("1".to_string(), 5), ("-1".to_string(), 4)]);
}

#[test]
fn verify_case1_passes_with_a_hecke_block() {
    let (doc, code) = json(&[
        "verify",
        "--family",
        "case1",
        "--param",
        "a=-1",
        "--param",
        "x1=1",
        "--param",
        "x3=1",
        "--param",
        "branch=plus",
    ]);
    assert_eq!(code, 0, "expected a pass: {doc}");
    assert_eq!(doc["pass"], true);
    // b = x1 x3 beta with beta the plus root at a = -1.
    let b: f64 = doc["parameters"]["derived"]["b"].as_str().unwrap().parse().unwrap();
    assert!((b - (1.0 - 3f64.sqrt()) / 2.0).abs() < 1e-12);
    let hecke = &doc["hecke"];
    assert!(hecke.is_object(), "hecke block expected: {doc}");
    let lambda2: f64 = hecke["lambda2"].as_str().unwrap().parse().unwrap();
    let loop_parameter: f64 = hecke["loop_parameter"].as_str().unwrap().parse().unwrap();
    assert!((loop_parameter - (lambda2 - 1.0)).abs() < 1e-9);
}

#[test]
fn verify_case1_with_an_off_root_b_fails_with_the_anomaly() {
    let (doc, code) = json(&[
        "verify",
        "--family",
        "case1",
        "--param",
        "a=-1",
        "--param",
        "x1=1",
        "--param",
        "x3=1",
        "--param",
        "branch=plus",
        "--param",
        "b=-0.3697",
    ]);
    assert_eq!(code, 1, "an off-root b is a verification failure: {doc}");
    assert_eq!(doc["pass"], false);
    assert!(doc["residuals"]["anomaly_max"].as_f64().unwrap() > 1e-6);
    assert!(!doc["violated"].as_array().unwrap().is_empty());
    // Both the value used and the root it should have been are reported.
    assert!(doc["parameters"]["derived"]["b_solved"].is_string());
}

#[test]
fn verify_accepts_full_complex_literals() {
    let (doc, code) = json(&[
        "verify",
        "--family",
        "case3_1_1",
        "--param",
        "a=0.5+0.25i",
        "--param",
        "c=1e0-2.5e-1i",
        "--param",
        "x4=2i",
    ]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(doc["parameters"]["continuous"]["a"], "0.5+0.25i");
    assert_eq!(doc["parameters"]["continuous"]["x4"], "2i");
}

#[test]
fn verify_seeded_runs_are_reproducible() {
    let (first, c1) = ybacc(&["verify", "--family", "case5_5_1_2", "--seed", "42"]);
    let (second, c2) = ybacc(&["verify", "--family", "case5_5_1_2", "--seed", "42"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(canonical_body(&first).unwrap(), canonical_body(&second).unwrap());
}

#[test]
fn sweep_case6_2_2_passes_all_hundred() {
    let (doc, code) = json(&["sweep", "--family", "case6_2_2", "--count", "100", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(doc["count"], 100);
    assert_eq!(doc["passes"], 100);
    assert_eq!(doc["pass"], true);
    let rows = doc["instances"].as_array().unwrap();
    assert_eq!(rows.len(), 100);
    // Order-stable regardless of scheduling: indices ascending.
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row["index"].as_u64().unwrap() as usize, i);
    }
}

#[test]
fn sweep_bodies_are_byte_identical_excluding_wall_time() {
    let args = ["sweep", "--family", "case5_4_a", "--count", "25", "--seed", "11"];
    let (first, _) = ybacc(&args);
    let (second, _) = ybacc(&args);
    assert_eq!(canonical_body(&first).unwrap(), canonical_body(&second).unwrap());

    // CSV carries no timing at all, so it is literally byte-identical.
    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let (csv1, _) = ybacc(&csv_args);
    let (csv2, _) = ybacc(&csv_args);
    assert_eq!(csv1, csv2);
    assert_eq!(csv1.lines().count(), 26);
    assert!(csv1.starts_with("index,seed,pass,"));
}

#[test]
fn orbit_of_a_generic_operator_has_eight_elements() {
    let (doc, code) = json(&["orbit", "--seed", "5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["words_applied"], 8);
    assert_eq!(doc["distinct"], 8);
    let words: Vec<&str> =
        doc["elements"].as_array().unwrap().iter().map(|e| e["word"].as_str().unwrap()).collect();
    assert_eq!(words, vec!["", "T", "L", "TL", "Z", "TZ", "LZ", "TLZ"]);
}

#[test]
fn orbit_elements_of_a_catalog_instance_all_verify() {
    let (doc, code) = json(&["orbit", "--family", "case5_4_b", "--seed", "1"]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(doc["pass"], true);
    for el in doc["elements"].as_array().unwrap() {
        assert!(el["anomaly_max"].as_f64().unwrap() <= 1e-9);
        assert!(el["constraint_max"].as_f64().unwrap() <= 1e-9);
    }
}

#[test]
fn hecke_case1_builds_the_level_tables() {
    let (doc, code) = json(&["hecke", "--family", "case1", "--n-max", "5"]);
    assert_eq!(code, 0, "{doc}");
    let block = &doc["multiplicities"];
    assert_eq!(block["sequence"], serde_json::json!([1, 3, 8, 21, 55, 144]));
    assert_eq!(block["recurrence_ok"], true);
    let level = |n: u64| {
        block["levels"]
            .as_array()
            .unwrap()
            .iter()
            .find(|l| l["level"] == n)
            .unwrap_or_else(|| panic!("level {n} present"))
    };
    let mults = |n: u64| -> Vec<u64> {
        level(n)["multiplicities"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["multiplicity"].as_u64().unwrap())
            .collect()
    };
    assert_eq!(mults(4), vec![55, 8, 1]);
    assert_eq!(mults(5), vec![144, 21, 3]);
}

#[test]
fn hecke_rejects_families_off_the_quotient() {
    let (doc, code) = json(&["hecke", "--family", "case5_2_2", "--seed", "0"]);
    assert_eq!(code, 1, "merely-Hecke family cannot build a stable tower: {doc}");
    assert_eq!(doc["pass"], false);
    assert!(doc["multiplicities"].is_null());
    assert!(doc["multiplicity_error"].as_str().unwrap().contains("Temperley-Lieb"));
    // The underlying instance is still a braid solution.
    assert!(doc["residuals"]["anomaly_max"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn constraints_of_the_identity_parameters_are_all_zero() {
    let path = scratch("identity-params");
    let names = [
        "a1", "a2", "a3", "a12", "b12", "c12", "d12", "a13", "b13", "c13", "d13", "a23", "b23",
        "c23", "d23", "x1", "x2", "x3", "x4",
    ];
    let diagonal = ["a1", "a2", "a3", "a12", "d12", "a13", "d13", "a23", "d23"];
    let doc: serde_json::Map<String, Value> = names
        .iter()
        .map(|&n| {
            let re = if diagonal.contains(&n) { 1.0 } else { 0.0 };
            (n.to_string(), serde_json::json!([re, 0.0]))
        })
        .collect();
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();

    let (report, code) = json(&["constraints", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(report["pass"], true);
    let rows = report["residuals"].as_array().unwrap();
    assert_eq!(rows.len(), 109);
    for row in rows {
        assert_eq!(row["residual"].as_f64().unwrap(), 0.0);
    }
    // All-zero rows keep table order, so the first label is A1.
    assert_eq!(rows[0]["label"], "A1");
}

#[test]
fn constraints_on_a_generic_matrix_file_sorts_descending() {
    let path = scratch("generic-matrix");
    let params = random_params(3);
    let m = assemble_check_r(&params, BasisOrdering::Grlex);
    let file = MatrixFile::from_matrix(&m, BasisOrdering::Grlex);
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();

    let (report, code) = json(&["constraints", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1, "a generic point satisfies nothing: {report}");
    assert_eq!(report["pass"], false);
    assert_eq!(report["ordering"], "grlex");
    let rows = report["residuals"].as_array().unwrap();
    let values: Vec<f64> = rows.iter().map(|r| r["residual"].as_f64().unwrap()).collect();
    assert!(values.windows(2).all(|w| w[0] >= w[1]), "sorted by descending magnitude");
    assert!(values[0] > 0.0);
}

#[test]
fn constraints_ordering_flag_is_for_matrix_input_only() {
    let path = scratch("params-with-ordering");
    let names = [
        "a1", "a2", "a3", "a12", "b12", "c12", "d12", "a13", "b13", "c13", "d13", "a23", "b23",
        "c23", "d23", "x1", "x2", "x3", "x4",
    ];
    let doc: serde_json::Map<String, Value> =
        names.iter().map(|&n| (n.to_string(), serde_json::json!([1.0, 0.0]))).collect();
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();

    let (report, code) = json(&["constraints", path.to_str().unwrap(), "--ordering", "lex"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 2);
    assert_eq!(report["error"]["kind"], "usage");
}

#[test]
fn unusable_inputs_exit_two_with_an_error_document() {
    let cases: &[&[&str]] = &[
        &["verify", "--family", "case9", "--seed", "1"],
        &["verify", "--family", "case1", "--param", "a=-1"],
        &["verify", "--family", "case1", "--param", "zz=1", "--seed", "0"],
        &["verify", "--family", "case1", "--param", "a=abc", "--seed", "0"],
        &["verify", "--family", "case1", "--param", "branch", "--seed", "0"],
        &["sweep", "--family", "nonsense"],
        &["hecke", "--family", "case1", "--n-max", "7"],
        &["orbit", "--param", "a=1"],
    ];
    for args in cases {
        let (stdout, code) = ybacc(args);
        assert_eq!(code, 2, "args {args:?} should be rejected: {stdout}");
        let doc: Value = serde_json::from_str(&stdout)
            .unwrap_or_else(|_| panic!("structured document for {args:?}: {stdout}"));
        assert!(doc["error"]["kind"].is_string(), "{doc}");
        assert!(!doc["error"]["message"].as_str().unwrap().is_empty());
    }
}

#[test]
fn domain_violations_are_input_errors() {
    let (doc, code) = json(&[
        "verify",
        "--family",
        "case1",
        "--param",
        "a=1",
        "--param",
        "x1=1",
        "--param",
        "x3=1",
        "--param",
        "branch=plus",
    ]);
    assert_eq!(code, 2, "a = 1 is outside the case1 domain: {doc}");
    assert_eq!(doc["error"]["kind"], "catalog");
}

#[test]
fn help_and_version_exit_zero() {
    let (help, code) = ybacc(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["list", "verify", "sweep", "orbit", "hecke", "constraints"] {
        assert!(help.contains(sub), "help mentions {sub}");
    }
    let (_, code) = ybacc(&["--version"]);
    assert_eq!(code, 0);
}

#[test]
fn csv_outputs_are_flat_and_headed() {
    let (csv, code) = ybacc(&[
        "verify",
        "--family",
        "fixture_p",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,pass,anomaly_max,ybe_max,constraint_max,certificate_residual,rank,tolerance,seed"
    );
    assert!(lines.next().unwrap().starts_with("fixture_p,true,"));

    let (csv, code) = ybacc(&["constraints", "/nonexistent", "--format", "csv"]);
    assert_eq!(code, 2, "errors stay structured regardless of format: {csv}");

    let (csv, code) = ybacc(&["hecke", "--family", "case1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(csv.starts_with("level,partition,multiplicity"));
    assert!(csv.contains("\n5,4+1,21"));

    let (csv, code) = ybacc(&["list", "--format", "csv"]);
    assert_eq!(code, 0);
    // 1 header + 15 catalog entries + 8 empty branches.
    assert_eq!(csv.lines().count(), 24);
}
