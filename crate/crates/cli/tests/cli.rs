use std::io::Write;
use std::process::{Command, Output};

use glr_cli::{AhssReport, ClassifyReport};
use glr_core::catalog::CATALOG;
use glr_core::{DecompositionType, FinAbGroup, GroupDescriptor, Verdict};

fn glr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glr"))
        .args(args)
        .output()
        .expect("run glr")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_group(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

#[test]
fn classify_catalog_examples() {
    let o = glr(&["classify", "free-z2-z3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: PositivePSC"));

    let o = glr(&["classify", "schick-like-z6-z3"]);
    let out = stdout(&o);
    assert!(out.contains("verdict: Counterexample"));
    assert!(out.contains("witness: p = 3, (r, s, t) = (4, 0, 1)"));

    let o = glr(&["classify", "z4-x-z3"]);
    let out = stdout(&o);
    assert!(out.contains("verdict: Unknown"));
    assert!(out.contains("[FAIL] action free outside the origin"));
}

#[test]
fn every_catalog_entry_classifies() {
    for e in CATALOG {
        let o = glr(&["classify", e.name, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{}: {}", e.name, stderr(&o));
        let report: ClassifyReport = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(report.group.name.as_deref(), Some(e.name));
        // Round trip through the serialized form.
        let again: ClassifyReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(again, report);
        if report.status.verdict == Verdict::Counterexample {
            let w = report.witness_report.unwrap();
            assert!(w.h1_free_rank >= 4);
            assert!(!w.h5_torsion_certificate.is_trivial());
        }
    }
}

#[test]
fn classify_json_witness() {
    let o = glr(&["classify", "schick-like-z6-z3", "--json"]);
    let report: ClassifyReport = serde_json::from_slice(&o.stdout).unwrap();
    let w = report.status.witness.unwrap();
    assert_eq!(w.decomposition, DecompositionType::new(3, 4, 0, 1));
    let wr = report.witness_report.unwrap();
    assert_eq!(wr.h1_free_rank, 4);
    assert_eq!(wr.h5_torsion_certificate, FinAbGroup::elementary(3, 8));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["witness_report"]["h5_torsion_certificate"],
        serde_json::json!({"free_rank": 0, "invariant_factors": [3, 3, 3, 3, 3, 3, 3, 3]})
    );
}

#[test]
fn decompose_examples() {
    for (name, expected) in [
        ("z4-x-z3", "(4, 0, 0)"),
        ("schick-like-z6-z3", "(4, 0, 1)"),
        ("free-z2-z3", "(0, 0, 1)"),
        ("regular-z3", "(0, 1, 0)"),
    ] {
        let o = glr(&["decompose", name, "--prime", "3"]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        assert!(out.contains(&format!("(r, s, t) = {expected}")), "{name}: {out}");
        assert!(out.contains("= n"));
    }
    let o = glr(&["decompose", "free-z2-z3", "--prime", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not divide"));
}

#[test]
fn homology_examples() {
    let o = glr(&["homology", "free-z2-z3", "--degree", "1"]);
    assert!(stdout(&o).contains("H_1(Γ) = (Z/3)^2"));
    let o = glr(&["homology", "z4-x-z3", "--degree", "1"]);
    assert!(stdout(&o).contains("H_1(Γ) = Z^4 + Z/3"));
    for e in CATALOG.iter().filter(|e| glr_core::arith::is_square_free(e.group().m())) {
        let o = glr(&["homology", e.name, "--degree", "0"]);
        assert!(stdout(&o).contains("H_0(Γ) = Z\n"), "{}", e.name);
    }
    let o = glr(&["homology", "free-z6-z9", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = glr(&["homology", "free-z2-z3", "--degree", "-2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ko_table_examples() {
    let o = glr(&["ko-table", "--prime", "3", "--power", "1"]);
    let out = stdout(&o);
    assert!(out.contains("KO_0(R[Z/3^1]) = Z^2"));
    assert!(out.contains("KO_5(R[Z/3^1]) = 0"));
    assert_eq!(out.lines().count(), 8);
    let o = glr(&["ko-table", "--prime", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ahss_examples() {
    let o = glr(&["ahss", "free-z2-z3", "--max-degree", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: AhssReport = serde_json::from_slice(&o.stdout).unwrap();
    for i in 0..=1 {
        assert!(r.e2.get(i, 3).unwrap().is_trivial());
    }
    assert!(r.tate.iter().all(|t| t.vanishing_holds));
    let again: AhssReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);

    let o = glr(&["ahss", "free-z2-z3", "--max-degree", "0", "--json"]);
    let r: AhssReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.e2.len(), 1);
    assert_eq!(r.e2.get(0, 0), Some(&FinAbGroup::free(1)));

    let o = glr(&["ahss", "z4-x-z3", "--max-degree", "4"]);
    assert!(stdout(&o).contains("vanishing for all even i + j: false"));

    let o = glr(&["ahss", "free-z6-z9", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn file_input_and_errors() {
    let f = write_group(r#"{"name": "rot", "n": 2, "m": 3, "matrix": [[0, -1], [1, -1]]}"#);
    let o = glr(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("group: rot"));
    assert!(stdout(&o).contains("PositivePSC"));

    let f = write_group(r#"{"n": 2, "m": 3, "matrix": [[2, 0], [0, 1]]}"#);
    let o = glr(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not unimodular"));

    let f = write_group(r#"{"n": 2, "m": 2, "matrix": [[0, -1], [1, -1]]}"#);
    let o = glr(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("is not the identity"));

    let f = write_group(r#"{"n": 3, "m": 3, "matrix": [[1, 0], [0, 1]]}"#);
    let o = glr(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("dimension mismatch"));

    let f = write_group("{not json");
    assert_eq!(glr(&["classify", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(glr(&["classify", "/no/such/file.json"]).status.code(), Some(2));
}

#[test]
fn catalog_commands() {
    let o = glr(&["catalog", "list"]);
    let out = stdout(&o);
    for name in ["z4-x-z3", "free-z2-z3", "schick-like-z6-z3", "free-z6-z7", "regular-z3"] {
        assert!(out.contains(name));
    }
    let o = glr(&["catalog", "show", "free-z6-z7"]);
    let d: GroupDescriptor = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((d.n, d.m), (6, 7));
    let g = d.to_group().unwrap();
    assert_eq!(GroupDescriptor::from_group(d.name.clone(), &g).unwrap(), d);
    assert_eq!(glr(&["catalog", "show", "missing"]).status.code(), Some(2));
}

#[test]
fn self_test_is_seeded() {
    let a = glr(&["self-test", "--seed", "9", "--count", "40"]);
    let b = glr(&["self-test", "--seed", "9", "--count", "40"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}
