use std::process::Command;

use serde_json::Value;
use torsion_packet::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_torsion-packet"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Report) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out) = run(&a);
    (code, Report::from_json(&out).unwrap())
}

#[test]
fn table_rows_and_exit_codes() {
    let (code, r) = json(&["tangent-ratios", "--degree", "2", "--max-denominator", "12", "--non-units-only"]);
    assert_eq!((code, r.records.len()), (0, 9));
    assert_eq!(r.schema_version, 1);

    let (code, r) = json(&["tangent-ratios", "--degree", "1", "--max-denominator", "6"]);
    assert_eq!(code, 0);
    assert!(r.records.iter().any(|x| x["alpha"] == "1/6" && x["beta"] == "1/3" && x["mu"] == "3"));

    assert_eq!(run(&["tangent-ratios", "--degree", "2", "--max-denominator", "2"]).0, 2);
    assert_eq!(run(&["tangent-ratios", "--degree", "0"]).0, 2);
    assert_eq!(run(&["lshape", "exclude", "--b-max", "2"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
}

#[test]
fn mutated_ground_truth_is_refuted() {
    let (_, original) = json(&["verify-table1"]);
    assert_eq!(original.verdict, torsion_packet::report::Verdict::Verified);

    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/table1.json")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["records"][1]["norm"] = Value::String("7".into());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mutated.json");
    std::fs::write(&path, v.to_string()).unwrap();

    let (code, r) = json(&["verify-table1", "--ground-truth", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let missing: Vec<_> = r.records.iter().filter(|x| x["status"] == "missing").collect();
    assert_eq!(missing.len(), 1);
    assert_eq!((missing[0]["alpha"].as_str(), missing[0]["beta"].as_str()), (Some("1/10"), Some("2/5")));
}

#[test]
fn stratum2_and_decagon() {
    let (code, r) = json(&["stratum2", "--torsion-order", "5"]);
    assert_eq!(code, 0);
    let nonzero = r.records.iter().filter(|x| x["stage"] == "torsion" && x["tangent_index"] != 0).count();
    assert_eq!(nonzero, 4);
    assert!(r.records.iter().any(|x| x["stage"] == "handoff"));

    let (code, r) = json(&["stratum2", "--torsion-order", "2"]);
    assert_eq!(code, 1);
    assert_eq!(r.verdict, torsion_packet::report::Verdict::Inconclusive);

    for sub in ["verify", "exclude-r", "differential"] {
        let (code, r) = json(&["decagon", sub]);
        assert_eq!(code, 0, "{sub}");
        assert_eq!(r.constants["t"], "√5/5");
    }
}

#[test]
fn output_file_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triples.csv");
    let (code, stdout) = run(&["lshape", "enumerate", "--b-max", "2", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("b,e,"));

    let (_, text) = run(&["lshape", "unit-case"]);
    assert!(text.starts_with("lshape unit-case: Verified"));
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut r: Report| {
        r.elapsed_ms = 0;
        r
    };
    for args in [&["lshape", "exclude"][..], &["decagon", "exclude-r"], &["stratum2"]] {
        let (_, a) = json(args);
        let (_, b) = json(args);
        assert_eq!(strip(a), strip(b));
    }
}
