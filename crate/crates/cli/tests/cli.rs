use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use isodual_core::{ConstructionResult, CyclicCode, RPoly, RingSpec};
use serde_json::Value;

fn isodual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isodual")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code_file(dir: &Path, name: &str, code: &CyclicCode) -> String {
    let path = dir.join(name);
    fs::write(&path, serde_json::to_string(code).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn factor_lists_lifted_factors() {
    let o = isodual(&["factor", "--p", "3", "--e", "2", "--n", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("x^5 + 3x^4 + 8x^3 + x^2 + 2x + 8"));
    assert!(text.contains("x^5 + 7x^4 + 8x^3 + x^2 + 6x + 8"));

    let o = isodual(&["--json", "factor", "--p", "2", "--e", "2", "--n", "31"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lifted"].as_array().unwrap().len(), 7);
    assert_eq!(v["residue"].as_array().unwrap().len(), 7);
    let lifted: Vec<RPoly> = serde_json::from_value(v["lifted"].clone()).unwrap();
    assert!(lifted.contains(&RPoly::from_signed(RingSpec::new(2, 2).unwrap(), &[3, 2, 3, 0, 0, 1])));
}

#[test]
fn factor_rejects_length_divisible_by_p() {
    let o = isodual(&["factor", "--p", "3", "--e", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(isodual(&["construct", "thm42", "--p", "3"]).status.code(), Some(2));
    assert_eq!(isodual(&["construct", "thm42", "--p", "4", "--m", "5"]).status.code(), Some(2));
    assert_eq!(isodual(&["construct", "thm42", "--p", "3", "--e", "2", "--m", "5", "--a", "2"]).status.code(), Some(2));
    let o = isodual(&["construct", "duadic", "--p", "3", "--e", "2", "--m", "11", "--splitting", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_cyclotomic_pair_with_verification() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("thm42.json");
    let o = isodual(&[
        "construct",
        "thm42",
        "--p",
        "3",
        "--e",
        "2",
        "--m",
        "5",
        "--a",
        "1",
        "--verify",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("<x^5 + 7x^4 + 2x^3 + 7x^2 + 2x + 8>"));
    assert_eq!(text.matches("min weight 4").count(), 2);
    assert_eq!(text.matches("claim isodual: verified").count(), 2);

    let saved: ConstructionResult = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(saved.all_verified());
    assert!(saved.codes.iter().all(|c| c.verified.as_ref().unwrap().min_weight.unwrap().weight == 4));
    // JSON round trip is lossless
    let again = serde_json::to_string_pretty(&saved).unwrap() + "\n";
    assert_eq!(again, fs::read_to_string(&out).unwrap());
}

#[test]
fn construct_duadic_json_reports_self_dual_torsion_codes() {
    let o = isodual(&["--json", "construct", "duadic", "--p", "3", "--e", "2", "--m", "11", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let r: ConstructionResult = serde_json::from_slice(&o.stdout).unwrap();
    for label in ["E1", "E2"] {
        let c = r.code(label).unwrap();
        assert!(c.code.is_self_dual());
        let v = c.verified.as_ref().unwrap();
        assert!(v.checks.iter().all(|c| c.holds));
        assert_eq!(v.dual_is.as_deref(), Some(label));
    }
}

#[test]
fn construct_with_explicit_cofactors() {
    let o = isodual(&[
        "--json",
        "construct",
        "thm44",
        "--p",
        "3",
        "--e",
        "2",
        "--m",
        "11",
        "--g1",
        "x^5 + 3x^4 + 8x^3 + x^2 + 2x - 1",
        "--g2",
        "x^5 - 2x^4 - x^3 + x^2 - 3x - 1",
        "--verify",
        "--strategy",
        "residue",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: ConstructionResult = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.codes.len(), 4);
    let weights: Vec<usize> = r.codes.iter().map(|c| c.verified.as_ref().unwrap().min_weight.unwrap().weight).collect();
    assert_eq!(weights[..2], [7, 7]);

    let bad = isodual(&["construct", "thm44", "--p", "3", "--e", "2", "--m", "11", "--g1", "x + 1", "--g2", "x"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn weight_command_strategies_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let s = RingSpec::new(3, 2).unwrap();
    let g = RPoly::from_signed(s, &[8, 2, 7, 2, 7, 1]);
    let small = code_file(dir.path(), "small.json", &CyclicCode::from_generator(&g, 10).unwrap());

    let o = isodual(&["weight", &small, "--strategy", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("min weight 4").count(), 2);

    let o = isodual(&["--json", "weight", &small]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["weight"], 4);
    assert_eq!(v["strategy"], "direct");

    let zero = code_file(dir.path(), "zero.json", &CyclicCode::zero_code(s, 10).unwrap());
    assert_eq!(isodual(&["weight", &zero]).status.code(), Some(2));

    fs::write(dir.path().join("junk.json"), "{\"ring\":{\"p\":3,\"e\":2}}").unwrap();
    let junk = dir.path().join("junk.json");
    assert_eq!(isodual(&["weight", junk.to_str().unwrap()]).status.code(), Some(2));

    // non-free and over budget: only a bound is available
    let x1 = RPoly::from_signed(s, &[-1, 1]);
    let torsion = CyclicCode::from_two_stage(&x1, &RPoly::one(s), 1, 10).unwrap();
    let big = code_file(dir.path(), "torsion.json", &torsion);
    let o = isodual(&["--json", "weight", &big, "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(4));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exact"], false);
    assert!(v["upper_bound"].as_u64().unwrap() >= 1);
}

#[test]
fn search_is_deterministic_and_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("results.jsonl");
    let out_s = out.to_str().unwrap();
    let args = ["search", "--p", "3", "--e", "2", "--m", "1-11", "--a", "1", "--out", out_s];
    let o = isodual(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let first = fs::read_to_string(&out).unwrap();
    let rows: Vec<Value> = first.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let find = |construction: &str, m: u64, label: &str| {
        rows.iter()
            .find(|r| r["key"]["construction"] == construction && r["key"]["m"] == m && r["key"]["label"] == label)
            .unwrap_or_else(|| panic!("missing {construction} m={m} {label}"))
    };
    assert_eq!(find("thm42", 5, "C-")["weight"], 4);
    assert_eq!(find("thm44", 11, "C12-")["weight"], 7);
    assert_eq!(find("duadic", 11, "E1")["all_hold"], true);
    assert!(rows.iter().all(|r| r["all_hold"] == true));

    // rerun and a narrower sweep leave the file unchanged
    assert_eq!(isodual(&args).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), first);
    let narrow = ["search", "--p", "3", "--m", "5", "--kinds", "thm42", "--out", out_s];
    assert_eq!(isodual(&narrow).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), first);
}

#[test]
fn empty_search_writes_empty_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("empty.jsonl");
    let o = isodual(&["search", "--p", "3", "--m", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), "");
}
