use std::path::Path;
use std::process::{Command, Output};

use onebridge::braid::FamilyParams;
use onebridge::nlo::{verify_certificate, CertificateRecord, Policy};
use onebridge::presentation::KnotGroupPresentation;
use onebridge::report::{AuditReport, NloReport, Record, SweepRecord};
use serde_json::Value;

fn onebridge(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_onebridge"))
        .args(args.split_whitespace())
        .env_remove("ONEBRIDGE_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

fn record(out: &Output) -> Record {
    serde_json::from_str(&lines(out)[0]).unwrap()
}

fn validator() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/record.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::draft202012::new(&schema).expect("schema compiles")
}

fn assert_valid(v: &jsonschema::Validator, line: &str) {
    let value: Value = serde_json::from_str(line).unwrap();
    let errors: Vec<String> = v.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{line}\n{errors:?}");
}

#[test]
fn classify_pins_the_figure_permutation() {
    let out = onebridge("classify --family 1 --w 5 --k 1 --m 0");
    assert_eq!(out.status.code(), Some(0));
    let Record::Classify(r) = record(&out) else {
        panic!("wrong kind")
    };
    assert!(r.is_knot);
    assert_eq!(r.permutation, "(1 3 4 5 2)");
}

#[test]
fn classify_generic_parameters() {
    let out = onebridge("classify --w 3 --t 1 --b 1 --m 0");
    assert_eq!(out.status.code(), Some(0));
    let Record::Classify(r) = record(&out) else {
        panic!("wrong kind")
    };
    assert_eq!(r.family, None);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        onebridge("classify --w 2 --t 1 --b 1").status.code(),
        Some(2)
    );
    assert_eq!(
        onebridge("audit --family 4 --n 2 --k 1").status.code(),
        Some(2)
    );
    assert_eq!(onebridge("audit --family 2 --k 1").status.code(), Some(2));
    assert_eq!(onebridge("frobnicate").status.code(), Some(2));
    assert_eq!(
        onebridge("sweep --min-m 2 --max-m 1").status.code(),
        Some(2)
    );
    assert_eq!(
        onebridge("props --suite nope --cases 1").status.code(),
        Some(2)
    );
}

#[test]
fn audit_discrepancy_is_a_finding() {
    let out = onebridge("audit --family 1 --w 3 --k 1 --m 0");
    assert_eq!(out.status.code(), Some(1));
    let Record::Audit(r) = record(&out) else {
        panic!("wrong kind")
    };
    let a = r.audit.unwrap();
    assert_eq!((a.v, a.v_star, a.discrepancy), (4, 6, 2));
    let f = FamilyParams::family1(3, 1, 0).unwrap();
    assert_eq!(r, AuditReport::new(&f).unwrap());
}

#[test]
fn nlo_reports_the_stated_bound() {
    let out = onebridge("nlo --family 2 --n 2 --k 1 --m 0 --policy claimed");
    assert_eq!(out.status.code(), Some(0));
    let Record::Nlo(r) = record(&out) else {
        panic!("wrong kind")
    };
    assert!(r.criterion.pass && r.verified);
    let bound = r.bound.as_ref().unwrap();
    assert_eq!(bound.policy, Policy::Claimed);
    assert_eq!(bound.criterion_bound.to_string(), "14");
    let f = FamilyParams::family2(2, 1, 0).unwrap();
    assert_eq!(r, NloReport::new(&f, Policy::Claimed).unwrap().0);
}

#[test]
fn nlo_writes_a_checkable_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_onebridge"))
        .args([
            "nlo",
            "--family",
            "3",
            "--n",
            "3",
            "--k",
            "1",
            "--m",
            "1",
            "--certificate",
            "cert.json",
        ])
        .env("ONEBRIDGE_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("cert.json")).unwrap();
    let rec: CertificateRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(rec.format, "onebridge-certificate");
    let cert = rec.to_certificate().unwrap();
    let pres = KnotGroupPresentation::family3(3, 1, 1).unwrap();
    verify_certificate(&cert, &pres).unwrap();
}

#[test]
fn present_and_alexander_pass() {
    for cmd in [
        "present --family 3 --n 3 --k 2 --m 1",
        "alexander --family 1 --w 6 --k 2 --m 1",
    ] {
        let out = onebridge(cmd);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        assert!(!record(&out).finding());
    }
}

#[test]
fn sweep_lines_round_trip_against_the_schema() {
    let v = validator();
    let out = onebridge("sweep --family all --max-n 4 --max-m 1 --format jsonl");
    // framing discrepancies are findings
    assert_eq!(out.status.code(), Some(1));
    let lines = lines(&out);
    let expected: Vec<FamilyParams> = [1u8, 2, 3]
        .into_iter()
        .flat_map(|f| FamilyParams::sweep(f, if f == 1 { 9 } else { 4 }, 0..=1))
        .collect();
    assert_eq!(lines.len(), expected.len());
    for (line, f) in lines.iter().zip(&expected) {
        assert_valid(&v, line);
        let Record::Sweep(r) = serde_json::from_str(line).unwrap() else {
            panic!("wrong kind")
        };
        assert_eq!(r, SweepRecord::new(f).unwrap());
        assert!(r.certificate_verified && r.rederivation_ok && r.alexander_agree && r.is_knot);
    }
}

#[test]
fn every_subcommand_matches_the_schema() {
    let v = validator();
    for cmd in [
        "classify --family 1 --w 5 --k 1",
        "classify --w 4 --t 2 --b 1 --m 1",
        "present --family 2 --n 3 --k 2 --m 2",
        "audit --family 3 --n 2 --k 1",
        "alexander --family 2 --n 2 --k 1",
        "nlo --family 1 --w 7 --k 2 --m 2 --policy audited",
        "props --cases 10",
    ] {
        for line in lines(&onebridge(cmd)) {
            assert_valid(&v, &line);
            let rec: Record = serde_json::from_str(&line).unwrap();
            assert_eq!(serde_json::to_string(&rec).unwrap(), line, "{cmd}");
        }
    }
}

#[test]
fn sweep_writes_through_the_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_onebridge"))
        .args([
            "sweep",
            "--family",
            "2",
            "--max-n",
            "3",
            "--max-m",
            "0",
            "--output",
            "sweep.jsonl",
        ])
        .env("ONEBRIDGE_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("sweep.jsonl")).unwrap();
    assert_eq!(text.lines().count(), FamilyParams::sweep(2, 3, 0..=0).len());
}

#[test]
fn props_are_seeded() {
    let a = onebridge("props --seed 11 --cases 50");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(lines(&a).len(), 6);
    assert_eq!(a.stdout, onebridge("props --seed 11 --cases 50").stdout);
    let text = onebridge("props --suite burau_homomorphism --cases 20 --format text");
    assert!(String::from_utf8(text.stdout)
        .unwrap()
        .starts_with("burau_homomorphism seed="));
}
