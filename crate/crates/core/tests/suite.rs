use std::collections::BTreeSet;

use qweyl::suite::{verify_paper, SuiteConfig, SCHEMA_VERSION, SUITES};
use qweyl::weyl::Mutation;

fn only(names: &[&str]) -> Option<BTreeSet<String>> {
    Some(names.iter().map(|s| s.to_string()).collect())
}

#[test]
fn only_filter_runs_one_suite() {
    let cfg = SuiteConfig { only: only(&["identities"]), ..Default::default() };
    let r = verify_paper(&cfg).unwrap();
    assert_eq!(r.suites.len(), 1);
    assert_eq!(r.suites[0].name, "identities");
    assert!(r.passed);
    assert_eq!(r.schema_version, SCHEMA_VERSION);
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["seed"], 2024);
}

#[test]
fn unknown_suite_is_rejected() {
    let cfg = SuiteConfig { only: only(&["coxeter", "nope"]), ..Default::default() };
    assert!(verify_paper(&cfg).is_err());
}

#[test]
fn suites_are_sorted_by_name() {
    let cfg = SuiteConfig { only: only(&["invariants", "coxeter", "examples"]), ..Default::default() };
    let names: Vec<String> = verify_paper(&cfg).unwrap().suites.into_iter().map(|s| s.name).collect();
    assert_eq!(names, ["coxeter", "examples", "invariants"]);
    let mut sorted = SUITES.to_vec();
    sorted.sort();
    assert_eq!(sorted, SUITES);
}

#[test]
fn mutated_generator_table_fails() {
    for m in [Mutation::ShiftPositionFactor(0), Mutation::DropTauFactor(3)] {
        let cfg =
            SuiteConfig { only: only(&["coxeter", "adjoint", "examples"]), mutation: Some(m), ..Default::default() };
        let r = verify_paper(&cfg).unwrap();
        assert!(!r.passed, "{m:?}");
        assert!(!r.suite("coxeter").unwrap().passed, "{m:?}");
        assert!(r.to_json().contains(&format!("{m:?}")));
    }
}

#[test]
fn different_seeds_still_pass() {
    let cfg = SuiteConfig { seed: 7, only: only(&["adjoint", "identities", "bilinear"]), ..Default::default() };
    let r = verify_paper(&cfg).unwrap();
    assert!(r.passed, "{}", r.to_json());
}
