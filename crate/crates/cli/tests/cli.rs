use std::path::{Path, PathBuf};
use std::process::Command;

use rclkit::approx::{RclStructure, StructureFile};
use rclkit::granular::{SetRcl, SetRclDescriptor};
use rclkit::search::ClaimResult;
use rclkit_cli::run_args;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn path_str(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(
        run_args(["rclkit", "validate", &fixture("worked_example.json")]).code,
        1
    );
    let ok = run_args(["rclkit", "validate", &fixture("diamond.json")]);
    assert_eq!(ok.code, 0);
    assert!(ok.stdout.contains("## Violations\n\nviolations: none\n"));
}

#[test]
fn ascii_aliases_give_the_same_report() {
    let uni = run_args([
        "rclkit",
        "validate",
        "--format",
        "json",
        &fixture("worked_example.json"),
    ]);
    let ascii = run_args([
        "rclkit",
        "validate",
        "--format",
        "json",
        &fixture("worked_example_ascii.json"),
    ]);
    assert_eq!(uni.code, ascii.code);
    let norm = |s: &str| s.replace("\"bot\"", "\"⊥\"").replace("\"top\"", "\"⊤\"");
    assert_eq!(norm(&uni.stdout), norm(&ascii.stdout));
}

#[test]
fn input_errors_exit_two() {
    let missing = run_args(["rclkit", "validate", "no-such-file.json"]);
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.contains("[Io]"));

    let usage = run_args(["rclkit", "table", "--op", "nope", &fixture("diamond.json")]);
    assert_eq!(usage.code, 2);

    let fmt = run_args(["rclkit", "validate", "--format", "text-table", &fixture("diamond.json")]);
    assert_eq!(fmt.code, 2);
    assert!(fmt.stderr.contains("UnsupportedFormat"));

    let claim = run_args(["rclkit", "search", "--claim", "no-such-claim", "--max-size", "3"]);
    assert_eq!(claim.code, 2);
    assert!(claim.stderr.contains("UnknownClaim"));

    let bound = run_args(["rclkit", "search", "--claim", "thm1-laws", "--max-size", "9"]);
    assert_eq!(bound.code, 2);
    assert!(bound.stderr.contains("BoundExceeded"));

    let not_set = run_args(["rclkit", "depend", "--x", "{1}", "--z", "{1}", &fixture("diamond.json")]);
    assert_eq!(not_set.code, 2);
    let not_set = run_args(["rclkit", "check", "--suite", "sgrcl", &fixture("diamond.json")]);
    assert_eq!(not_set.code, 2);
}

#[test]
fn suites_on_a_valid_structure() {
    for suite in ["rcl", "aggregation", "tarski"] {
        let out = run_args(["rclkit", "check", "--suite", suite, &fixture("diamond.json")]);
        assert_eq!(out.code, 0, "{suite}: {}", out.stdout);
    }
    for suite in ["negation", "implication"] {
        let out = run_args([
            "rclkit",
            "check",
            "--suite",
            suite,
            "--format",
            "json",
            &fixture("diamond.json"),
        ]);
        assert!(out.code == 0 || out.code == 1, "{suite}");
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert!(v.as_array().is_some_and(|a| !a.is_empty()));
    }
    let sg = run_args(["rclkit", "check", "--suite", "sgrcl", &fixture("four_granules.json")]);
    assert_eq!(sg.code, 0);
    assert!(sg.stdout.contains("violations: none"));
}

#[test]
fn implication_suite_flags_the_worked_example() {
    let out = run_args([
        "rclkit",
        "check",
        "--suite",
        "implication",
        &fixture("worked_example.json"),
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("# Implication ⊨~"));
    assert!(out.stdout.contains("(info)"));
}

#[test]
fn table_formats() {
    let f = fixture("worked_example.json");
    let json = run_args(["rclkit", "table", "--op", "cca", "--format", "json", &f]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["symbol"], "·");
    assert_eq!(v["rows"][1][1], "e");
    let md = run_args(["rclkit", "table", "--op", "imp-sim", "--format", "markdown", &f]);
    assert!(md.stdout.starts_with("| ⊨~ | ⊥ |"));
    for op in [
        "odot",
        "cross",
        "neg",
        "sim",
        "imp-neg",
        "imp-o",
        "imp-s",
        "imp-top",
        "imp-bottom",
    ] {
        assert_eq!(run_args(["rclkit", "table", "--op", op, &f]).code, 0, "{op}");
    }
}

#[test]
fn rough_objects_report() {
    let out = run_args(["rclkit", "rough-objects", "--format", "json", &fixture("diamond.json")]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["interval_representation"], "holds");
    assert_eq!(v["rough_order"]["bottom_pair_is_least"], true);
    let members: usize = v["objects"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["members"].as_array().unwrap().len())
        .sum();
    assert_eq!(members, 4);
}

#[test]
fn bias_degenerate_handling() {
    let set = fixture("four_granules.json");
    let cfg = fixture("bias_degenerate.json");
    let strict = run_args(["rclkit", "bias", "--format", "json", "--config", &cfg, &set]);
    assert_eq!(strict.code, 2);
    assert!(strict.stderr.contains("DegenerateDenominator"));
    let v: serde_json::Value = serde_json::from_str(&strict.stdout).unwrap();
    assert!(v["sharp"].is_null());
    assert_eq!(v["degenerate"], serde_json::json!([2]));

    let skip = run_args([
        "rclkit",
        "bias",
        "--skip-degenerate",
        "--format",
        "json",
        "--config",
        &cfg,
        &set,
    ]);
    assert_eq!(skip.code, 0);
    let v: serde_json::Value = serde_json::from_str(&skip.stdout).unwrap();
    assert_eq!(v["sharp"]["numerator"], "-4");
    assert_eq!(v["skipped_degenerate"], true);
}

#[test]
fn ingest_round_trip_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let r = run_args([
            "rclkit",
            "ingest",
            "--csv",
            &fixture("students.csv"),
            "--attrs",
            "grade,track",
            "--key",
            "id",
            "--output",
            &path_str(out),
        ]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        assert!(r.stdout.is_empty());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let d = SetRclDescriptor::from_json(&text).unwrap();
    assert_eq!(d.granules, vec![vec!["s1", "s2", "s4"], vec!["s3"], vec!["s5"]]);
    assert_eq!(
        SetRcl::from_descriptor(&d).unwrap().to_descriptor().granules,
        d.granules
    );

    assert_eq!(run_args(["rclkit", "validate", &path_str(&a)]).code, 0);
    assert_eq!(run_args(["rclkit", "check", "--suite", "sgrcl", &path_str(&a)]).code, 0);
    let dep = run_args([
        "rclkit",
        "depend",
        "--x",
        "{s1,s2,s4,s5}",
        "--z",
        "{s1,s2,s3,s4}",
        "--format",
        "json",
        &path_str(&a),
    ]);
    assert_eq!(dep.code, 0);
    let v: serde_json::Value = serde_json::from_str(&dep.stdout).unwrap();
    assert_eq!(v["beta_i"], "{s1,s2,s4}");
    assert_eq!(v["cca"], "{s1,s2,s4}");

    let bad = run_args([
        "rclkit",
        "ingest",
        "--csv",
        &fixture("students.csv"),
        "--attrs",
        "colour",
        "--key",
        "id",
    ]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("UnknownAttribute"));
}

#[test]
fn search_database_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_args([
        "rclkit",
        "search",
        "--claim",
        "prop1-lu2eq",
        "--max-size",
        "5",
        "--out",
        &path_str(dir.path()),
    ]);
    assert_eq!(out.code, 1);
    let file = dir.path().join("prop1-lu2eq.json");
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(text, out.stdout);
    let r = ClaimResult::from_json(&text).unwrap();
    let w = r.witness.unwrap();
    let s = RclStructure::from_file(&w.structure).unwrap();
    assert_eq!(s.to_file(), w.structure);
    let reread = RclStructure::from_file(&StructureFile::from_json(&w.structure.to_json()).unwrap()).unwrap();
    assert_eq!(reread, s);

    // the database entry itself is a valid input; its witness is core but not a full RCL
    let v = run_args(["rclkit", "validate", &path_str(&file)]);
    assert_eq!(v.code, 1);
    assert!(v.stdout.contains("core: yes"));

    let confirmed = run_args([
        "rclkit",
        "search",
        "--claim",
        "thm1-laws",
        "--max-size",
        "4",
        "--format",
        "markdown",
    ]);
    assert_eq!(confirmed.code, 0);
    assert!(confirmed.stdout.contains("status: confirmed-up-to-bound"));
}

#[test]
fn claims_listing() {
    let out = run_args(["rclkit", "claims"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let ids: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    for id in ["prop1-lu2eq", "wn3n", "negimpl-bc1", "negimpl-ip", "representability"] {
        assert!(ids.contains(&id), "{id}");
    }
}

#[test]
fn binary_runs_are_byte_identical_across_thread_counts() {
    let exe = env!("CARGO_BIN_EXE_rclkit");
    let run = |threads: &str| {
        let o = Command::new(exe)
            .args(["search", "--claim", "wn3n", "--max-size", "5"])
            .env("RCLKIT_THREADS", threads)
            .output()
            .unwrap();
        (o.status.code(), o.stdout)
    };
    let one = run("1");
    assert_eq!(one.0, Some(1));
    assert_eq!(run("4"), one);
    assert_eq!(run("1"), one);
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_rclkit");
    let code = |args: &[&str]| Command::new(exe).args(args).output().unwrap().status.code();
    assert_eq!(code(&["validate", &fixture("diamond.json")]), Some(0));
    assert_eq!(code(&["validate", &fixture("worked_example.json")]), Some(1));
    assert_eq!(code(&["validate"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}
