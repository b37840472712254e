use std::process::{Command, Output};

use serde_json::Value;

fn dunkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn apply_prints_canonical_text() {
    let cases = [
        (
            vec![
                "--system", "A1dim1", "--kappa", "all=1/2", "--op", "D1", "--poly", "z1^3",
            ],
            "4*z1^2\n",
        ),
        (
            vec![
                "--system",
                "B2",
                "--kappa",
                "short=0,long=0",
                "--op",
                "D1",
                "--poly",
                "z1^2*z2",
            ],
            "2*z1*z2\n",
        ),
        (
            vec![
                "--system",
                "B2",
                "--kappa",
                "short=1,long=1",
                "--op",
                "laplacian",
                "--poly",
                "1",
            ],
            "0\n",
        ),
        (
            vec![
                "--system", "A1", "--op", "rho", "--root", "1,-1", "--poly", "z1^2",
            ],
            "z1 + z2\n",
        ),
    ];
    for (args, expected) in cases {
        let mut full = vec!["apply"];
        full.extend(args);
        let out = dunkl(&full);
        assert_eq!(out.status.code(), Some(0), "{full:?}");
        assert_eq!(stdout(&out), expected, "{full:?}");
    }
}

#[test]
fn apply_json_is_versioned() {
    let out = dunkl(&[
        "--format", "json", "apply", "--system", "A1dim1", "--kappa", "all=1/2", "--op", "D1",
        "--poly", "z1^3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["text"], "4*z1^2");
}

#[test]
fn verify_runs_pass_and_repeat_exactly() {
    let args = [
        "--seed",
        "42",
        "verify",
        "commutativity",
        "--system",
        "B2",
        "--degree",
        "5",
        "--trials",
        "25",
    ];
    let first = dunkl(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(
        stdout(&first).contains("checks: 25/25 passed"),
        "{}",
        stdout(&first)
    );
    let second = dunkl(&args);
    assert_eq!(first.stdout, second.stdout);

    let out = dunkl(&[
        "--seed",
        "7",
        "verify",
        "laplacian-formula",
        "--system",
        "A2",
        "--points",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("checks: 20/20 passed"));

    let out = dunkl(&[
        "--format", "json", "--seed", "3", "verify", "lemma32", "--system", "B2", "--trials", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["checks_run"], 40);
    assert!(report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 6] = [
        &["verify", "commutativity", "--system", "B2", "--trials", "0"],
        &["verify", "lemma3", "--system", "B2"],
        &["inspect", "--system", "Q7"],
        &[
            "apply",
            "--system",
            "B2",
            "--kappa",
            "short=1,long=1",
            "--op",
            "D3",
            "--poly",
            "z1",
        ],
        &[
            "apply", "--system", "B2", "--kappa", "short=1", "--op", "D1", "--poly", "z1",
        ],
        &["group", "--system", "B3", "--max-order", "10"],
    ];
    for args in cases {
        let out = dunkl(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn inspect_catalog_and_files() {
    let out = dunkl(&["inspect", "--system", "B2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("group order: 8"), "{text}");

    let out = dunkl(&["--format", "json", "inspect", "--system", "B2"]);
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["roots"].as_array().unwrap().len(), 8);
    assert_eq!(value["positive"].as_array().unwrap().len(), 4);
    assert_eq!(value["orbits"].as_array().unwrap().len(), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"dim": 2, "roots": [["1","0"],["0","1"],["-1","0"]]}"#,
    )
    .unwrap();
    let out = dunkl(&["inspect", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("MissingNegative"));

    let good = dir.path().join("a1.json");
    std::fs::write(&good, r#"{"dim": 2, "roots": [["1","-1"],["-1","1"]]}"#).unwrap();
    let out = dunkl(&["orbits", "--file", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}
