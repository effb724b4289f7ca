use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn homprime(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_homprime"))
        .args(args)
        .env_remove("HOMPRIME_BOUND")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn run_json(args: &[&str], stdin: &str) -> Value {
    let out = homprime(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn fixture_input(case: &str) -> String {
    fs::read_to_string(fixtures().join(case).join("input.json")).unwrap()
}

#[test]
fn fixtures_match_golden_output() {
    let mut cases: Vec<_> = fs::read_dir(fixtures())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.is_dir())
        .collect();
    cases.sort();
    assert!(cases.len() >= 15);
    for dir in cases {
        let args = fs::read_to_string(dir.join("args")).unwrap();
        let args: Vec<&str> = args.split_whitespace().collect();
        let want_code: i32 = fs::read_to_string(dir.join("exit")).map_or(0, |s| s.trim().parse().unwrap());
        let out = homprime(&args, &fs::read_to_string(dir.join("input.json")).unwrap());
        assert_eq!(out.status.code(), Some(want_code), "{}", dir.display());
        if let Ok(want) = fs::read_to_string(dir.join("expected.json")) {
            assert_eq!(String::from_utf8(out.stdout).unwrap(), want, "{}", dir.display());
        }
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let input = fixture_input("e8_enumerate");
    let a = homprime(&["primes", "enumerate"], &input);
    let b = homprime(&["primes", "enumerate"], &input);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_summary_for_degree_one_over_42() {
    let v = run_json(&["primes", "enumerate"], &fixture_input("e8_enumerate"));
    assert_eq!(v["summary"], json!({"6": "unique", "14": "unique", "21": "unique", "42": "family"}));
    for verdict in v["verdicts"].as_array().unwrap() {
        assert!(verdict["oracle_bound"].is_u64());
    }
}

#[test]
fn ring_emits_requested_fields_only() {
    let v = run_json(&["ring", "--emit", "generators"], &fixture_input("hypersurface_ring"));
    assert_eq!(v["generator_degrees"], json!([2, 2, 3]));
    assert!(v.get("hilbert").is_none() && v.get("dims").is_none());
    let v = run_json(&["ring", "--emit", "tomari"], &fixture_input("weighted_456"));
    assert_eq!(v["tomari"], json!("2/15"));
}

#[test]
fn bound_from_environment() {
    let input = fixture_input("hypersurface_ring");
    let out = Command::new(env!("CARGO_BIN_EXE_homprime"))
        .args(["ring", "--emit", "dims"])
        .env("HOMPRIME_BOUND", "9")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(input.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["bound"], json!(9));
    assert_eq!(v["dims"].as_array().unwrap().len(), 10);
}

#[test]
fn check_output_feeds_semigroup() {
    let job = json!({
        "divisor": [{"point": "0", "coeff": "5/7"}, {"point": "inf", "coeff": "-4/7"}],
        "degree": 7,
        "function": {"numer": ["-1", "1"], "denom": ["0", "0", "0", "0", "0", "1"]},
    });
    let check = run_json(&["primes", "check"], &job.to_string());
    assert_eq!(check["oracle"]["prime"], json!(true));
    assert_eq!(check["necessary"]["converse_applies"], json!(true));
    let sg = run_json(&["semigroup"], &check.to_string());
    assert_eq!(sg["semigroup"]["generators"], json!([3, 5, 7]));
    assert_eq!(sg["a_invariant"], json!(-3));
    assert_eq!(sg["criterion"], json!(true));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("homprime-cli-test-{}.json", std::process::id()));
    let out = homprime(
        &["semigroup", "--output", path.to_str().unwrap()],
        r#"{"generators": [2, 3], "x0_degree": 1}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    fs::remove_file(&path).unwrap();
    assert_eq!(v["criterion"], json!(false));
}

#[test]
fn input_errors_exit_3() {
    for bad in [
        "not json",
        r#"{"divisor": [{"point": "0", "coeff": "1/2"}], "colour": 1}"#,
        r#"{"divisor": [{"point": "0", "coeff": "x"}]}"#,
        r#"{"divisor": [{"point": "0", "coeff": "1/0"}]}"#,
        r#"{}"#,
    ] {
        assert_eq!(homprime(&["ring"], bad).status.code(), Some(3), "{bad}");
    }
    assert_eq!(homprime(&["semigroup"], r#"{"generators": [3, 5]}"#).status.code(), Some(3));
}

#[test]
fn domain_errors_exit_1() {
    let out = homprime(&["semigroup"], r#"{"generators": [4, 6], "x0_degree": 1}"#);
    assert_eq!(out.status.code(), Some(1));
    let job = json!({
        "divisor": [{"point": "0", "coeff": "1/2"}, {"point": "inf", "coeff": "1/2"}, {"point": "1", "coeff": "-1/2"}],
        "degree": 2,
        "point": "0",
    });
    assert_eq!(homprime(&["primes", "construct"], &job.to_string()).status.code(), Some(1));
}
