use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use skewbrace::cli::run;
use skewbrace::spec::BraceSpec;
use tempfile::TempDir;

fn brace(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("brace").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

const PQ_I: &str = r#"{"kind":"pq","p":3,"q":2,"k":2,"variant":"i"}"#;
const PQ_II: &str = r#"{"kind":"pq","p":3,"q":2,"k":2,"variant":"ii"}"#;

#[test]
fn analyze_json_reports_profile() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pq.json", PQ_I);
    let (code, out, _) = brace(&["analyze", f.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["profile"]["right"], 2);
    assert_eq!(v["profile"]["socle"], 2);
    assert!(v["profile"]["left"].is_null());
    assert_eq!(v["series"]["left"]["orders"], serde_json::json!([6, 3]));
    assert_eq!(v["equivalence"]["agree"], true);
}

#[test]
fn analyze_checks_report_witnesses() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pq.json", PQ_I);
    let (code, out, _) = brace(&[
        "analyze",
        f.to_str().unwrap(),
        "--json",
        "--checks",
        "A,C",
        "--max-n",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("witness"));
    let (code, _, err) = brace(&["analyze", f.to_str().unwrap(), "--checks", "Z"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown inclusion label"));
}

#[test]
fn verify_suites_pass_on_catalog_braces() {
    let dir = TempDir::new().unwrap();
    for (name, body) in [
        ("i.json", PQ_I),
        ("ii.json", PQ_II),
        ("d8.json", r#"{"kind":"almost_trivial","group":"D8"}"#),
    ] {
        let f = write(&dir, name, body);
        let (code, out, err) = brace(&["verify", f.to_str().unwrap(), "--suite", "all"]);
        assert_eq!(code, 0, "{name}: {out}{err}");
        for suite in ["identities", "ideals", "inclusions", "theorems"] {
            assert!(out.contains(&format!("{suite}: PASS")), "{name}: {out}");
        }
    }
}

#[test]
fn enumerate_round_trips_through_tables() {
    let (code, out, _) = brace(&["enumerate", "--builtin", "C2"]);
    assert_eq!(code, 0);
    let v: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(v.len(), 1);

    let (code, out, _) = brace(&["enumerate", "--builtin", "S3", "--profile"]);
    assert_eq!(code, 0);
    let v: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(v.len(), 8);
    assert!(v.iter().all(|b| b["equivalence_agree"] == true));

    let dir = TempDir::new().unwrap();
    let first = serde_json::to_string(&v[0]).unwrap();
    let spec = BraceSpec::parse(&first).unwrap();
    let f = write(&dir, "first.json", &spec.to_json());
    let (code, _, _) = brace(&["verify", f.to_str().unwrap(), "--suite", "identities"]);
    assert_eq!(code, 0);
}

#[test]
fn enumerate_reads_group_tables() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c3.json", "[[0,1,2],[1,2,0],[2,0,1]]");
    let (code, out, _) = brace(&["enumerate", "--group", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<Vec<Value>>(&out).unwrap().len(), 1);
}

#[test]
fn series_lists_terms() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pq.json", PQ_I);
    let (code, out, _) = brace(&[
        "series",
        f.to_str().unwrap(),
        "--kind",
        "right",
        "--json",
        "--max-n",
        "3",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["right"]["orders"], serde_json::json!([6, 3, 1]));
    assert_eq!(v["right"]["by_index"][1]["term"], serde_json::json!([0, 1, 2]));
    let (code, out, _) = brace(&["series", f.to_str().unwrap(), "--kind", "socle"]);
    assert_eq!(code, 0);
    assert!(out.contains("socle: orders [1, 3, 6]"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad_json = write(&dir, "bad.json", "{ not json");
    assert_eq!(brace(&["analyze", bad_json.to_str().unwrap()]).0, 1);
    assert_eq!(
        brace(&["analyze", dir.path().join("missing.json").to_str().unwrap()]).0,
        1
    );
    assert_eq!(brace(&["no-such-command"]).0, 1);

    let corrupt = write(
        &dir,
        "corrupt.json",
        r#"{"kind":"tables","dot":[[0,1],[1,1]],"circ":[[0,1],[1,0]]}"#,
    );
    assert_eq!(brace(&["analyze", corrupt.to_str().unwrap()]).0, 2);
    let not_brace = write(
        &dir,
        "notbrace.json",
        r#"{"kind":"tables","dot":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],"circ":[[0,1,2,3],[1,2,3,0],[2,3,1,0],[3,0,1,2]]}"#,
    );
    assert_eq!(brace(&["analyze", not_brace.to_str().unwrap()]).0, 2);
    let bad_pq = write(&dir, "badpq.json", r#"{"kind":"pq","p":4,"q":2,"k":3,"variant":"i"}"#);
    assert_eq!(brace(&["analyze", bad_pq.to_str().unwrap()]).0, 2);

    assert_eq!(brace(&["enumerate", "--builtin", "C16"]).0, 3);
    assert_eq!(brace(&["counterexample", "--p", "3"]).0, 2);
}

#[test]
fn binary_runs() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pq.json", PQ_II);
    let out = Command::new(env!("CARGO_BIN_EXE_brace"))
        .args(["analyze", f.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("left nilpotent:        class 2"), "{text}");
    let out = Command::new(env!("CARGO_BIN_EXE_brace"))
        .args(["enumerate", "--builtin", "C16"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
