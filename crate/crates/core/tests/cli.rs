//! End-to-end runs of the `nsg` binary.

use std::process::{Command, Output};

use goto_semigroup::cli::{AnalyzeReport, GotoReport};
use goto_semigroup::harness::VerificationReport;

fn nsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .env_remove("NSG_TABLE_LIMIT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json() {
    let o = nsg(&["analyze", "4,5,7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#""goto_vector":[1,2,2,2]"#), "{text}");
    assert!(text.contains(r#""tau":1"#), "{text}");
    let report: AnalyzeReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), text.trim_end());
}

#[test]
fn analyze_text_matches_json() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&nsg(&["analyze", "6,7,15", "--format", "json"]))).unwrap();
    let text = stdout(&nsg(&["analyze", "6,7,15"]));
    let mut keys = Vec::new();
    for line in text.lines() {
        let (key, value) = line.split_once(": ").unwrap();
        let value: serde_json::Value = serde_json::from_str(value).unwrap();
        assert_eq!(json[key], value, "{key}");
        keys.push(key.to_string());
    }
    let json_keys: Vec<String> = json.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, json_keys);
}

#[test]
fn goto_element() {
    let o = nsg(&["goto", "5,6,9", "--element", "14"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("g(14) = 3\n"));

    let o = nsg(&["goto", "4,5,7", "--element", "7", "--oracle", "--format", "json"]);
    let report: GotoReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((report.goto_number, report.oracle), (2, Some(2)));
}

#[test]
fn verify_except_scan() {
    let o = nsg(&["verify", "--property", "theorem_except", "--max-multiplicity", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("<5,6,9> <6,7,10,11>"), "{text}");

    let o = nsg(&["verify", "--property", "theorem_except", "--max-multiplicity", "6", "--format", "json"]);
    let text = stdout(&o);
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert!(report.ok());
    assert_eq!(report.failed, 0);
    assert_eq!(serde_json::to_string(&report).unwrap(), text.trim_end());
}

#[test]
fn verify_csv_rows() {
    let o = nsg(&["verify", "--property", "theorem_main", "--genus-max", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("generators,outcome,detail"));
    assert_eq!(lines.count(), 1 + 1 + 2 + 4);
}

#[test]
fn verify_list() {
    let text = stdout(&nsg(&["verify", "--list"]));
    for id in ["theorem_main", "chain_star", "closed_form", "theorem_except", "question_3lem"] {
        assert!(text.lines().any(|l| l.starts_with(&format!("{id}: "))), "{id}");
    }
}

#[test]
fn enumerate_formats() {
    let o = nsg(&["enumerate", "--genus-max", "2", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "generators,multiplicity,embedding_dim,frobenius,genus\n\
         1,1,1,-1,0\n\"2,3\",2,2,1,1\n\"3,4,5\",3,3,2,2\n\"2,5\",2,2,3,2\n"
    );
    let o = nsg(&["enumerate", "--genus-max", "4", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 1 + 1 + 2 + 4 + 7);
}

#[test]
fn exit_codes() {
    for args in [
        &["analyze", "abc"][..],
        &["analyze", "4,5,7", "--format", "csv"],
        &["verify", "--property", "no_such_property"],
        &["verify"],
        &["frobnicate"],
    ] {
        let o = nsg(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    let o = nsg(&["analyze", "4,6"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("nsg: error: "));
}

#[test]
fn table_limit() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_nsg"))
            .args(["analyze", "5,6,9"])
            .env("NSG_TABLE_LIMIT", limit)
            .output()
            .unwrap()
    };
    assert_eq!(run("10").status.code(), Some(3));
    assert_eq!(run("100000").status.code(), Some(0));
    assert_eq!(run("lots").status.code(), Some(2));
}
