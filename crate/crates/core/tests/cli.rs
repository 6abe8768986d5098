//! End-to-end CLI checks: exit codes, output determinism, and the error
//! paths for malformed input.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peiffer"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn verify_passes_on_the_constant_grid() {
    let out = run(&["verify", &fixture("constant_s3_grid.json")]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 fail"));
}

#[test]
fn verify_rejects_garbage_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbage.json");
    std::fs::write(&path, "{\"kind\": \"unknown\"}").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_flags_a_mutated_grid_with_exit_1() {
    // trivialize one vertical face: still a homomorphism, identities break
    let text = std::fs::read_to_string(fixture("external_product_grid.json")).unwrap();
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let gens = value["dv"]["1,1,0"]["gen_images"].as_array().unwrap().clone();
    let identity: Vec<serde_json::Value> = gens
        .iter()
        .map(|g| {
            let n = g.as_array().unwrap().len();
            serde_json::Value::Array((0..n).map(|i| serde_json::Value::from(i)).collect())
        })
        .collect();
    value["dv"]["1,1,0"]["gen_images"] = serde_json::Value::Array(identity);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mutated.json");
    std::fs::write(&path, serde_json::to_string(&value).unwrap()).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("identity"), "stderr: {err}");
}

#[test]
fn moore_prints_the_cell_order() {
    let out = run(&["moore", &fixture("external_product_grid.json"), "--level", "1,1"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("NG(1,1) has order 1"));
}

#[test]
fn decompose_prints_the_factorization() {
    let out = run(&["decompose", &fixture("external_product_grid.json")]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("324 = 1*3*3*36"));
}

#[test]
fn peiffer_table_on_the_constant_grid_is_all_vacuous() {
    let out = run(&["peiffer-table", &fixture("constant_s3_grid.json")]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("24 vacuous"));
}

#[test]
fn json_output_is_stable_across_runs() {
    let args = [
        "peiffer-table",
        &fixture("constant_s3_grid.json"),
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn extract_xmod_reports_hypothesis_violation_on_the_dihedral_grid() {
    let out = run(&["extract", "xmod", &fixture("d4_normal_pair_grid.json")]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("hypothesis"), "stderr: {err}");
}

#[test]
fn extract_xsq_and_mapping_cone_succeed() {
    let out = run(&["extract", "xsq", &fixture("d4_normal_pair_grid.json")]);
    assert!(out.status.success());
    let out = run(&["mapping-cone", &fixture("d4_normal_pair_square.json")]);
    assert!(out.status.success());
    let out = run(&[
        "extract",
        "x2mod-simplicial",
        &fixture("nerve_c3_s3.json"),
    ]);
    assert!(out.status.success());
    let out = run(&[
        "extract",
        "x2mod-row",
        &fixture("external_product_grid.json"),
        "--at",
        "1",
    ]);
    assert!(out.status.success());
}

#[test]
fn boundary_equalities_pass_on_shipped_grids() {
    let out = run(&["boundary-equalities", &fixture("constant_s3_grid.json")]);
    assert!(out.status.success());
}
