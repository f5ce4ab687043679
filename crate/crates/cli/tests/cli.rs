use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn acm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn repo_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = acm(&full);
    assert_eq!(
        code(&o),
        0,
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn lines_counts_and_bad_surface() {
    assert_eq!(json(&["lines", "X6"])["count"], 27);
    assert_eq!(json(&["lines", "Q"])["lines"].as_array().unwrap().len(), 0);
    let o = acm(&["lines", "X9"]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "X3", "3l-2e1-e2"]);
    assert_eq!(v["acm"], true);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["zero_regular"], true);
    assert_eq!(json(&["classify", "Q", "2h+2m"])["acm"], false);
    let v = json(&["classify", "X1", "0"]);
    assert_eq!(
        (v["acm"].clone(), v["degree"].clone()),
        (Value::Bool(true), Value::from(0))
    );
    assert_eq!(v["smooth_member"], "n/a");
}

#[test]
fn classify_rejects_bad_divisors() {
    let o = acm(&["classify", "X3", "3l+h"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 3"));
}

#[test]
fn table_rows() {
    let all = stdout(&acm(&["table", "all"]));
    let totals: Vec<&str> = all.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(
        totals,
        ["Tot", "3", "7", "15", "29", "51", "83", "127", "8"]
    );
    // cells beyond H^2 are blank: the X6 column ends at d = 3
    let row4 = all
        .lines()
        .find(|l| l.trim_start().starts_with("4 "))
        .unwrap();
    assert_eq!(row4.split_whitespace().count(), 8);

    let x5 = json(&["table", "X5"]);
    assert_eq!(x5["surfaces"][0]["counts"][4], 40);
    let p2 = json(&["table", "P2"]);
    let counts: Vec<u64> = p2["surfaces"][0]["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap())
        .collect();
    assert_eq!(counts, [1, 0, 0, 1, 0, 0, 1, 0, 0, 0]);
}

#[test]
fn wild_plans_and_scope() {
    assert_eq!(json(&["wild", "X6", "--rank", "6"])["param_dim"], 7);
    let v = json(&["wild", "X3", "--rank", "2"]);
    assert_eq!(v["param_dim"], 2);
    assert_eq!(v["relation_block"], serde_json::json!([3, 3, 2, 2, 0, 0]));
    assert_eq!(v["slope"], "6");
    assert_eq!(code(&acm(&["wild", "X2", "--rank", "2"])), 3);
    assert_eq!(code(&acm(&["wild", "Q", "--rank", "3"])), 3);
    assert_eq!(code(&acm(&["wild", "X4", "--rank", "1"])), 2);
}

#[test]
fn verify_pristine_perturbed_and_missing() {
    let golden = repo_path("golden");
    let o = acm(&["verify", golden.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let dir = tempfile::tempdir().unwrap();
    for entry in fs::read_dir(&golden).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    let x6 = dir.path().join("X6.tsv");
    let text = fs::read_to_string(&x6).unwrap();
    let perturbed = text.replacen("3\tl\t1\n", "3\tl\t2\n", 1);
    assert_ne!(text, perturbed);
    fs::write(&x6, perturbed).unwrap();
    let o = acm(&["verify", "--golden", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("X6 degree 3"), "{}", stdout(&o));

    let empty = tempfile::tempdir().unwrap();
    assert_eq!(code(&acm(&["verify", empty.path().to_str().unwrap()])), 2);
}

#[test]
fn bless_reproduces_checked_in_goldens() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        code(&acm(&["verify", "--bless", dir.path().to_str().unwrap()])),
        0
    );
    for entry in fs::read_dir(repo_path("golden")).unwrap() {
        let entry = entry.unwrap();
        let fresh = fs::read(dir.path().join(entry.file_name())).unwrap();
        assert_eq!(
            fresh,
            fs::read(entry.path()).unwrap(),
            "{:?}",
            entry.file_name()
        );
    }
}

#[test]
fn json_matches_schema_and_round_trips() {
    let schema: Value = serde_json::from_str(
        &fs::read_to_string(repo_path("schema/acm-output.schema.json")).unwrap(),
    )
    .unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let golden = repo_path("golden");
    let cases: Vec<Vec<&str>> = vec![
        vec!["lines", "X6"],
        vec!["lines", "Q"],
        vec!["classify", "X3", "3l-2e1-e2"],
        vec!["classify", "Q", "2h+2m"],
        vec!["classify", "X1", "2C0+3f"],
        vec!["table", "all"],
        vec!["table", "X4"],
        vec!["wild", "X5", "--rank", "2"],
        vec!["wild", "X6", "--rank", "7"],
        vec!["wild", "X3", "--rank", "10"],
        vec!["verify", golden.to_str().unwrap()],
    ];
    for args in cases {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let raw = stdout(&acm(&full));
        let v: Value = serde_json::from_str(&raw).unwrap();
        if let Err(errors) = compiled.validate(&v) {
            let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
            panic!("{args:?}: {msgs:?}");
        }
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, raw, "{args:?} does not round-trip");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["table", "all"],
        vec!["lines", "X6", "--format", "json"],
        vec!["wild", "X4", "--rank", "5"],
    ] {
        assert_eq!(acm(&args).stdout, acm(&args).stdout, "{args:?}");
    }
}

#[test]
fn thread_cap_is_validated() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_acm"))
            .args(["table", "X6"])
            .env("ACM_THREADS", threads)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("2")), 0);
    assert_eq!(run("1").stdout, run("3").stdout);
    assert_eq!(code(&run("zero")), 2);
}
