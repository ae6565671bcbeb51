use std::process::{Command, Output};

use serde_json::Value;

fn qweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qweyl")).args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn verify_paper_is_deterministic() {
    let args = ["verify-paper", "--only", "identities,examples,coxeter"];
    let a = qweyl(&args);
    let b = qweyl(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 2024);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn only_runs_the_named_suite() {
    let o = qweyl(&["verify-paper", "--only", "identities", "--rng-seed", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(suites[0]["name"], "identities");
    assert_eq!(v["seed"], 11);
}

#[test]
fn mutation_exits_with_failure() {
    for m in ["shift-position:0", "drop-tau:3"] {
        let o = qweyl(&["verify-paper", "--only", "coxeter", "--mutation", m]);
        assert_eq!(o.status.code(), Some(1), "{m}");
        assert_eq!(json(&o)["passed"], false);
    }
}

#[test]
fn bad_input_is_a_usage_error() {
    let cases: [&[&str]; 6] = [
        &["act", "--word", "0 9"],
        &["act", "--word", "0 x"],
        &["--type", "F4", "act"],
        &["--type", "D5", "act", "--point", "9"],
        &["--type", "E7", "bilinear"],
        &["verify-paper", "--only", "nope"],
    ];
    for args in cases {
        assert_eq!(qweyl(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(qweyl(&["verify-paper", "--mutation", "swap:1"]).status.code(), Some(2));
}

#[test]
fn act_reproduces_the_first_example() {
    let o = qweyl(&["act", "--word", "3 2 1 0 2 4 3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["lambda"], "(2,1;1,0,0,0,0,0,1,0,1,1,1)");
    assert_eq!(v["rng_seed"], 2024);
    let c = json(&qweyl(&["act", "--word", "3,2,1,0,2,4,3", "--classical"]));
    assert_eq!(c["lambda"], v["lambda"]);
    assert!(!c["polynomial"].as_str().unwrap().contains('q'));
}

#[test]
fn pretty_output_follows_json() {
    let o = qweyl(&["--format", "pretty", "identities", "--which", "binom", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("rng_seed: 2024"));
    assert!(text.contains("name: q-binomial"));
    assert!(text.lines().any(|l| l == "passed: yes"));
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("qweyl-orbit-{}.json", std::process::id()));
    let o = qweyl(&["--type", "D5", "--jobs", "2", "orbit", "--depth", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["type"], "d5");
    assert!(v["classes"].as_u64().unwrap() >= 5);
}

#[test]
fn fpoly_and_curve_pass() {
    let f = qweyl(&["fpoly", "--word", "3 2 1 0"]);
    assert_eq!(f.status.code(), Some(0));
    assert_eq!(json(&f)["solution_dimension"], 1);
    let c = qweyl(&["--type", "E6", "curve"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(json(&c)["s0_factor_form"], Value::Null);
}
