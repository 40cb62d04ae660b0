//! End-to-end tests of the command-line surface: every subcommand, exit
//! codes, and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn spinstack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinstack"))
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
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn cohomology_dims() {
    let v = stdout_json(&spinstack(&["cohomology", "--group", "z2", "--degree", "3"]));
    assert_eq!(v["dim"], 1);
    let v = stdout_json(&spinstack(&["cohomology", "--group", "z4", "--degree", "2"]));
    assert_eq!(v["dim"], 1);
    let v = stdout_json(&spinstack(&["cohomology", "--group", "s4", "--degree", "2"]));
    assert_eq!(v["dim"], 2);
}

#[test]
fn cohomology_basis_representatives_are_emitted() {
    let v = stdout_json(&spinstack(&[
        "cohomology", "--group", "z2xz2", "--degree", "2", "--basis",
    ]));
    assert_eq!(v["dim"], 3);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn steenrod_reports_nontrivial_sq1_on_s4() {
    let v = stdout_json(&spinstack(&["steenrod", "--group", "s4", "--k", "1", "--class", "y"]));
    assert_eq!(v["sqIsTrivialClass"], false);
    assert_eq!(v["bocksteinAgrees"], true);
}

#[test]
fn steenrod_sq1_trivial_on_z4() {
    let v = stdout_json(&spinstack(&["steenrod", "--group", "z4", "--k", "1", "--class", "x"]));
    assert_eq!(v["sqIsTrivialClass"], true);
    assert_eq!(v["bocksteinAgrees"], true);
}

#[test]
fn condense_identifies_so_sum() {
    let v = stdout_json(&spinstack(&["condense", "--left", "so:1", "--right", "spin:1"]));
    assert_eq!(v["identified"], "SO(2)_1");
    let modules = v["modules"].as_array().unwrap();
    assert_eq!(modules.len(), 6);
    let sigma_row = modules
        .iter()
        .find(|m| m["generator"] == "1⊠σ")
        .expect("σ module present");
    assert_eq!(sigma_row["local"], false);

    let v = stdout_json(&spinstack(&["condense", "--left", "so:7", "--right", "spin:6"]));
    assert_eq!(v["identified"], "SO(13)_1");
    let v = stdout_json(&spinstack(&["condense", "--left", "so:0", "--right", "spin:16"]));
    assert_eq!(v["identified"], "SO(0)_1");
}

#[test]
fn consistency_subgroups() {
    let v = stdout_json(&spinstack(&["consistency", "--group", "z2", "--kappa", "x^2"]));
    assert_eq!(v["subgroup"]["order"], 8);
    assert_eq!(v["subgroup"]["generator"], 2);
    assert_eq!(v["theoremB"]["pass"], true);

    let v = stdout_json(&spinstack(&["consistency", "--group", "z2", "--kappa", "0"]));
    assert_eq!(v["subgroup"]["order"], 16);
}

#[test]
fn shift_orbit_from_bundle_file() {
    let dir = tempfile::tempdir().unwrap();
    let bundle = dir.path().join("bundle.json");
    std::fs::write(
        &bundle,
        r#"{
            "group": "z2",
            "kappa": {"group": "z2", "degree": 2, "coeff": "f2", "values": [1]},
            "alpha": {"group": "z2", "degree": 2, "coeff": "f2", "values": [0]},
            "beta":  {"group": "z2", "degree": 3, "coeff": "f2", "values": [0]}
        }"#,
    )
    .unwrap();
    let v = stdout_json(&spinstack(&["shift-orbit", "--bundle", bundle.to_str().unwrap()]));
    assert_eq!(v["period"], 2);
    assert_eq!(v["checks"]["betaTwoStepIdentity"], true);
    assert_eq!(v["states"].as_array().unwrap().len(), 3);
}

#[test]
fn invalid_bundle_names_the_failing_layer_and_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bundle = dir.path().join("bad.json");
    std::fs::write(
        &bundle,
        r#"{
            "group": "z2",
            "kappa": {"group": "z2", "degree": 2, "coeff": "f2", "values": [0]},
            "alpha": {"group": "z2", "degree": 2, "coeff": "f2", "values": [1]},
            "beta":  {"group": "z2", "degree": 3, "coeff": "f2", "values": [0]}
        }"#,
    )
    .unwrap();
    let out = spinstack(&["shift-orbit", "--bundle", bundle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Gu-Wen"));
}

#[test]
fn input_errors_exit_2() {
    let out = spinstack(&["cohomology", "--group", "nosuch", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = spinstack(&["condense", "--left", "su:2", "--right", "spin:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_file_loading_rejects_bad_tables_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("group.json");
    std::fs::write(&path, r#"{"name": "x", "order": 2, "table": [[0,1],[1,1]]}"#).unwrap();
    let arg = format!("@{}", path.display());
    let out = spinstack(&["cohomology", "--group", &arg, "--degree", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("permutation"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = spinstack(&["consistency", "--group", "d8", "--kappa", "b2:3"]);
    let b = spinstack(&["consistency", "--group", "d8", "--kappa", "b2:3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path: PathBuf = dir.path().join("report.json");
    let out = spinstack(&[
        "cohomology",
        "--group",
        "z4",
        "--degree",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], 1);
    // No stray temp files remain.
    let leftovers: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.path() != path)
        .collect();
    assert!(leftovers.is_empty());
}

#[test]
fn verify_properties_is_deterministic_and_green() {
    let a = spinstack(&["verify", "--suite", "properties", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    let b = spinstack(&["verify", "--suite", "properties", "--seed", "42"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    assert!(text.contains("property.cup1-coboundary-identity"));
    assert!(text.contains("0 failed"));
}
