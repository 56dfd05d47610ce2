//! End-to-end tests of the `octomod` binary: output values, JSON schemas,
//! exit codes, and byte-for-byte determinism.

use std::process::{Command, Output};

fn octomod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octomod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn mul_conj_assoc() {
    let out = octomod(&["mul", "e1", "e2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "e4\n");

    let out = octomod(&["mul", "e2", "e1"]);
    assert_eq!(stdout_of(&out), "-e4\n");

    let out = octomod(&["conj", "1/2 + 3e2 - e7"]);
    assert_eq!(stdout_of(&out), "1/2 - 3e2 + e7\n");

    let out = octomod(&["assoc", "e1", "e2", "e3"]);
    assert_eq!(stdout_of(&out), "-2e6\n");

    let out = octomod(&["assoc", "e1", "e1", "3 - e5"]);
    assert_eq!(stdout_of(&out), "0\n");
}

#[test]
fn malformed_literals_exit_2() {
    let out = octomod(&["mul", "bogus!", "e2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position"), "stderr: {err}");

    let out = octomod(&["module", "length", "--type", "1,0", "--element", "{not json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flags_are_rejected() {
    let out = octomod(&["mul", "e1", "e2", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_formats() {
    let json = stdout_of(&octomod(&["table", "--format", "json"]));
    let rows: Vec<Vec<String>> = serde_json::from_str(&json).expect("valid JSON");
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[1][2], "e4");
    assert_eq!(rows[2][1], "-e4");
    assert_eq!(rows[0][5], "e5");

    let csv = stdout_of(&octomod(&["table", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 8);
    assert!(csv.lines().next().unwrap().starts_with("1,e1,e2"));
}

#[test]
fn clifford_subcommands() {
    let out = octomod(&["clifford", "verify"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("on O: pass"));
    assert!(text.contains("on Obar: pass"));

    let out = octomod(&["clifford", "dim"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "128\n");
}

#[test]
fn module_pipeline() {
    let gen = stdout_of(&octomod(&["module", "generator", "--type", "2,1"]));
    let out = octomod(&["module", "length", "--type", "2,1", "--element", gen.trim()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "(2,1)\n");

    let sub = stdout_of(&octomod(&[
        "module",
        "submodule",
        "--type",
        "2,1",
        "--element",
        gen.trim(),
    ]));
    let parsed: serde_json::Value = serde_json::from_str(&sub).unwrap();
    assert_eq!(parsed["dim"], 24);
    assert_eq!(parsed["n"], 2);
    assert_eq!(parsed["k"], 1);

    let out = octomod(&[
        "module",
        "classify",
        "--type",
        "0,1",
        "--element",
        r#"{"n":0,"k":1,"p":[],"q":[["1","0","0","0","0","0","0","0"]]}"#,
    ]);
    assert_eq!(stdout_of(&out), "ConjAssoc\n");

    let out = octomod(&["module", "generator", "--type", "9,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn element_from_file() {
    let dir = std::env::temp_dir().join("octomod-cli-test-element");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gen.json");
    let gen = stdout_of(&octomod(&["module", "generator", "--type", "1,1"]));
    std::fs::write(&path, gen.trim()).unwrap();
    let out = octomod(&[
        "module",
        "length",
        "--type",
        "1,1",
        "--element",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "(1,1)\n");
}

#[test]
fn canonicalize_from_file() {
    // The conjugate-module generators form an abstract module of type (0,1).
    let ls = octomod_core::clifford::unit_reps_on_obar::<octomod_core::Rat>();
    let am = octomod_core::omodule::AbstractModule::new(ls).unwrap();
    let json = octomod_core::json::AbstractModuleJson::from_module(&am);
    let dir = std::env::temp_dir().join("octomod-cli-test-canon");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("obar.json");
    std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();

    let out = octomod(&["module", "canonicalize", "--input", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["n"], 0);
    assert_eq!(parsed["k"], 1);
}

#[test]
fn bimodule_solve_and_check() {
    let out = octomod(&["bimodule", "solve", "--type", "0,1"]);
    assert!(out.status.success(), "Infeasible is a successful determination");
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["outcome"], "infeasible");

    let dir = std::env::temp_dir().join("octomod-cli-test-solve");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("action.json");
    let out = octomod(&[
        "bimodule",
        "solve",
        "--type",
        "1,0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["outcome"], "unique");

    // The emitted action verifies against the standard left module.
    let out = octomod(&[
        "bimodule",
        "check",
        "--type",
        "1,0",
        "--action",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_of(&out).starts_with("pass"));

    // The same action against the wrong module fails with exit 1.
    let out = octomod(&[
        "bimodule",
        "check",
        "--type",
        "0,1",
        "--action",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["table", "--format", "json"],
        vec!["bimodule", "solve", "--type", "1,0"],
        vec!["module", "generator", "--type", "3,2"],
    ] {
        let a = octomod(&args);
        let b = octomod(&args);
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
    }
}

#[test]
fn solve_json_round_trips_including_residual_fields() {
    let out = octomod(&["bimodule", "solve", "--type", "1,1"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["outcome"], "infeasible");
    assert!(parsed["stage"].is_string());
}

#[test]
fn selftest_small_run() {
    let out = Command::new(env!("CARGO_BIN_EXE_octomod"))
        .args(["selftest", "--seed", "11", "--samples", "2"])
        .output()
        .expect("binary runs");
    let text = stdout_of(&out);
    assert!(out.status.success(), "output: {text}");
    assert!(text.contains("seed 11"));
    assert_eq!(text.matches("PASS").count(), 10, "output: {text}");

    // Seed override through the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_octomod"))
        .args(["selftest", "--samples", "1"])
        .env("OCTOMOD_SEED", "13")
        .output()
        .expect("binary runs");
    assert!(stdout_of(&out).contains("seed 13"));
}
