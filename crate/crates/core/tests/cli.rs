use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn changhee(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_changhee"))
        .args(args)
        .env_remove("CHANGHEE_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn params(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn changhee_table_csv() {
    let o = changhee(&["table", "--family", "changhee", "--n", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n0,1\n1,-1/2\n2,1/2\n3,-3/4\n");
}

#[test]
fn triangle_table_json_to_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("lah.json");
    let o = changhee(&["table", "--family", "lah", "--n", "3", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let rows: serde_json::Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    let row3: Vec<&str> = rows
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["indices"][0] == 3)
        .map(|r| r["value"].as_str().unwrap())
        .collect();
    assert_eq!(row3, ["0", "6", "6", "1"]);
}

#[test]
fn spec_family_tables() {
    let dir = TempDir::new().unwrap();
    let p = params(dir.path(), "p.json", r#"{"alpha": ["0", "1"], "r": [1, 1]}"#);
    let o = changhee(&["table", "--family", "mp_first", "--params", &p, "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "n,k,value\n0,1,1\n1,1,-1/2\n2,1,1/2\n");

    let o = changhee(&["table", "--family", "mp_first", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("requires a parameter file"));
}

#[test]
fn eval_values() {
    let dir = TempDir::new().unwrap();
    let p = params(dir.path(), "p.json", r#"{"alpha": ["0"], "r": [1]}"#);
    let cases = [
        (vec!["--family", "mp_first", "--x", "1/2"], "-1/4"),
        (vec!["--family", "mp_second", "--x", "2"], "1"),
        (vec!["--family", "mp_second", "--x", "-2"], "-1"),
        (vec!["--family", "mp_first"], "-1/2"),
        (vec!["--family", "mp_second_lah"], "1/2"),
        (vec!["--family", "poly_cauchy_first", "--k", "2"], "1/4"),
    ];
    for (extra, want) in cases {
        let mut args = vec!["eval", "--params", p.as_str()];
        args.extend(extra.iter().copied());
        let o = changhee(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn params_errors_are_distinct() {
    let dir = TempDir::new().unwrap();
    let bad = [
        (r#"{"alpha": ["0", "1"], "r": [1]}"#, "lengths differ"),
        (r#"{"alpha": ["1"], "r": [0]}"#, "r entries must be >= 1"),
        (r#"{"alpha": ["1/0"], "r": [1]}"#, "malformed rational"),
        (r#"{"alpha": ["1"]}"#, "invalid parameter file"),
    ];
    for (i, (body, needle)) in bad.iter().enumerate() {
        let p = params(dir.path(), &format!("bad{i}.json"), body);
        let o = changhee(&["eval", "--family", "mp_first", "--params", &p]);
        assert_eq!(o.status.code(), Some(2), "{body}");
        assert!(stderr(&o).contains(needle), "{body}: {}", stderr(&o));
    }
    let o = changhee(&["eval", "--family", "mp_first", "--params", "/nonexistent/p.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = changhee(&["verify", "--suite", "stirling-orthogonality"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["suite"], "stirling-orthogonality");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["verdict"] == "PASS"));

    let o = changhee(&["verify", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("theorem-3-1-paths"));

    let o = changhee(&["verify"]);
    assert_eq!(o.status.code(), Some(2));
    let o = changhee(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_writes_report_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.json");
    let o = changhee(&["verify", "--suite", "theorem-2-2-as-printed", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    let check = &report["checks"][0];
    assert_eq!(check["verdict"], "FAIL");
    assert_eq!(check["expected"], "FAIL");
    assert_eq!(check["counterexamples"][0]["rhs"], "1/6");
}

#[test]
fn triangle_cache_round_trip() {
    let dir = TempDir::new().unwrap();
    let cache = dir.path().join("cache");
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_changhee"))
            .args(args)
            .env("CHANGHEE_CACHE_DIR", &cache)
            .output()
            .unwrap()
    };
    let args = ["table", "--family", "stirling_second", "--n", "12", "--format", "csv"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let file = cache.join("stirling_second.json");
    let saved: serde_json::Value = serde_json::from_str(&fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(saved["kind"], "stirling_second");
    assert!(saved["rows"].as_array().unwrap().len() >= 13);

    let second = run(&args);
    assert_eq!(stdout(&second), stdout(&first));
    assert!(stderr(&second).is_empty());

    fs::write(&file, r#"{"kind":"stirling_second","version":1,"rows":[["1"],["0","2"]]}"#).unwrap();
    let third = run(&args);
    assert_eq!(third.status.code(), Some(0));
    assert_eq!(stdout(&third), stdout(&first));
    assert!(stderr(&third).contains("ignoring cached stirling_second"));
    assert!(fs::read_to_string(&file).unwrap().contains("\"0\",\"1\""));
}
