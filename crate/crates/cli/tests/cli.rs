use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn rgdlin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rgdlin"))
        .args(args)
        .env_remove("RGDLIN_MATRIX")
        .env_remove("RGDLIN_BASIS")
        .output()
        .expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

fn of_kind<'a>(recs: &'a [Value], kind: &str) -> Vec<&'a Value> {
    recs.iter().filter(|r| r["record"] == kind).collect()
}

#[test]
fn header_is_versioned() {
    let out = rgdlin(&["interval", "e : r", "e : r"]);
    assert!(out.status.success());
    let recs = records(&out);
    assert_eq!(recs[0]["format"], "rgdlin-records");
    assert_eq!(recs[0]["version"], 1);
    assert_eq!(recs[0]["command"], "interval");
}

#[test]
fn opposite_simple_pair_is_a_strict_inclusion() {
    let out = rgdlin(&["--matrix", "universal3", "interval", "- e : r", "s : t"]);
    assert!(out.status.success());
    let recs = records(&out);
    let cmp = of_kind(&recs, "comparison");
    assert_eq!(cmp.len(), 1);
    assert_eq!(cmp[0]["strict_inclusion"], true);
    let missing: Vec<&str> = cmp[0]["missing"].as_array().unwrap().iter().map(|m| m["root"].as_str().unwrap()).collect();
    assert_eq!(missing, ["e : s"]);
}

#[test]
fn dihedral_pairs_coincide() {
    let out = rgdlin(&["--matrix", "dihedral:4", "interval", "e : s", "s t s : t"]);
    assert!(out.status.success());
    let recs = records(&out);
    assert_eq!(of_kind(&recs, "comparison")[0]["equal"], true);
}

#[test]
fn equal_expressions_give_singletons() {
    let out = rgdlin(&["--matrix", "type444", "interval", "r s : t", "r s : t"]);
    let recs = records(&out);
    for rec in of_kind(&recs, "interval") {
        assert_eq!(rec["members"].as_array().unwrap().len(), 1);
    }
}

#[test]
fn exit_codes_separate_config_from_preconditions() {
    assert_eq!(rgdlin(&["interval", "e : r", "s : r"]).status.code(), Some(3));
    let bad_label = rgdlin(&["interval", "e : q", "s : r"]);
    assert_eq!(bad_label.status.code(), Some(2));
    assert!(bad_label.stdout.is_empty());
    assert_eq!(rgdlin(&["--matrix", "dihedral:5", "scan"]).status.code(), Some(2));
    assert_eq!(rgdlin(&["--radius", "0", "scan"]).status.code(), Some(2));
    assert_eq!(rgdlin(&["--basis", "bogus", "scan"]).status.code(), Some(2));
    assert_eq!(
        rgdlin(&["--matrix", "type444", "witness", "--family", "type444", "--k", "2"]).status.code(),
        Some(3)
    );
}

#[test]
fn infinite_dihedral_scan_is_empty() {
    let out = rgdlin(&["--matrix", "dihedral:inf", "--length", "6", "scan"]);
    assert!(out.status.success());
    let recs = records(&out);
    assert!(of_kind(&recs, "divergence").is_empty());
    assert_eq!(of_kind(&recs, "summary")[0]["divergences"], 0);
}

#[test]
fn universal_scan_reports_minus_r_alpha_zero() {
    let out = rgdlin(&["--length", "4", "scan"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert!(of_kind(&recs, "divergence")
        .iter()
        .any(|d| d["alpha"] == "- e : r" && d["beta"] == "s : t"));
}

#[test]
fn type444_scan_reports_beta_one() {
    let out = rgdlin(&["--matrix", "type444", "--length", "6", "--radius", "4", "scan"]);
    assert!(out.status.success());
    let recs = records(&out);
    let hit = of_kind(&recs, "divergence")
        .into_iter()
        .find(|d| d["alpha"] == "e : r" && d["beta"] == "r s t s t : r")
        .expect("record for (α_r, β_1)");
    assert!(!hit["missing"].as_array().unwrap().is_empty());
}

#[test]
fn scan_output_is_deterministic_across_modes() {
    let args = ["--matrix", "type444", "--length", "3", "--basis", "canonical;sample:7,2", "scan"];
    let a = rgdlin(&args);
    let b = rgdlin(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut seq = args.to_vec();
    seq.push("--sequential");
    assert_eq!(rgdlin(&seq).stdout, a.stdout);
}

#[test]
fn witness_universal_is_certified() {
    let out = rgdlin(&["witness", "--family", "universal", "--k", "0", "--n-max", "3", "--basis", "canonical;sample:1,3"]);
    assert!(out.status.success());
    let recs = records(&out);
    assert_eq!(of_kind(&recs, "table").len(), 4);
    assert!(of_kind(&recs, "verdict").iter().all(|v| v["not_linear"] == true));
    let c = of_kind(&recs, "conclusion")[0];
    assert_eq!(c["nc"], false);
    assert_eq!(c["verdict"], "not linearizable (certified)");
}

#[test]
fn witness_type444_is_certified() {
    let out = rgdlin(&["--matrix", "type444", "witness", "--family", "type444", "--k", "3", "--n-max", "4"]);
    assert!(out.status.success());
    let recs = records(&out);
    let certs = of_kind(&recs, "certificate");
    assert_eq!(certs.len(), 1);
    assert_eq!(certs[0]["accepted"], true);
    assert_eq!(certs[0]["bounded_checks"].as_array().unwrap().len(), 2);
    assert_eq!(of_kind(&recs, "conclusion")[0]["verdict"], "not linearizable (certified)");
}

#[test]
fn witness_empty_k_satisfies_nc() {
    let out = rgdlin(&["witness", "--family", "universal"]);
    let recs = records(&out);
    let c = of_kind(&recs, "conclusion")[0];
    assert_eq!(c["nc"], true);
    assert_eq!(c["verdict"], "linearizable (nc)");
}

#[test]
fn files_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = dir.path().join("m.txt");
    fs::write(&matrix, "3 r s t\n4 4\n4\n").unwrap();
    let gcm = dir.path().join("b.txt");
    fs::write(&gcm, "3 r s t\n2, -2, -1\n-1, 2, -2\n-2, -1, 2\n").unwrap();
    let cert = dir.path().join("c.json");
    fs::write(
        &cert,
        r#"{"variant":"PairExclusion","alpha":"e : r","beta":"r s t s t r s t s t : r",
            "gamma":"r s t s t r s : t","gamma_prime":"r s t s t r t : s"}"#,
    )
    .unwrap();
    let out_path = dir.path().join("out.jsonl");

    let out = Command::new(env!("CARGO_BIN_EXE_rgdlin"))
        .env("RGDLIN_MATRIX", &matrix)
        .env("RGDLIN_BASIS", format!("gcm:{}", gcm.display()))
        .args(["--out", out_path.to_str().unwrap(), "certificate", cert.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&out_path).unwrap();
    let recs: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs[0]["bases"][0], "gcm");
    assert_eq!(recs[1]["accepted"], true);

    fs::write(&cert, r#"{"variant":"Nope"}"#).unwrap();
    let bad = rgdlin(&["--matrix", "type444", "certificate", cert.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}
