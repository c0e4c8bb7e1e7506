use std::process::Command;

use wsg_core::NumericalSemigroup;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = wsg_cli::run(
        std::iter::once("wsg").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn analyze_bounds_json() {
    let (code, out, _) = run(&[
        "analyze", "--a", "4", "--b", "9", "--genus", "12", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""kind": "AtMostOnce""#));
    assert!(out.contains(r#""mode": "bounds""#));
    assert!(out.ends_with("}\n") && !out.ends_with("\n\n"));
}

#[test]
fn analyze_gap_defined() {
    let (code, out, _) = run(&[
        "analyze",
        "--a",
        "4",
        "--b",
        "9",
        "--gaps",
        "1,2,3,5,6,7,10,11,15",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let line = out.lines().nth(1).unwrap();
    assert!(line.starts_with(r#"4,9,2,1,9,"1,2,3,5,6,7,10,11,15",KnownMultiple,"#));
    assert!(line.contains("KNOWN_MULTIPLE_S"));
}

#[test]
fn domain_errors_exit_one() {
    let (code, out, err) = run(&["analyze", "--a", "4", "--b", "6"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("gcd(4, 6) = 2"));
    let (code, _, err) = run(&["analyze", "--a", "4", "--b", "9", "--gaps", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("not additively closed"));
    let (code, _, _) = run(&["analyze", "--a", "4", "--b", "9", "--gaps", "1,2,3"]);
    assert_eq!(
        code, 1,
        "<4;9> is not the multiplicity-4 semigroup of these gaps"
    );
    let (code, _, _) = run(&["examples", "--which", "4.2", "--params", "4,2,8"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["delta", "--nu", "4", "--mu", "6"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["analyze", "--a", "4"]).0, 2);
    assert_eq!(
        run(&["analyze", "--a", "4", "--b", "9", "--gaps", "1,x"]).0,
        2
    );
    assert_eq!(run(&["examples", "--which", "4.1", "--params", "3"]).0, 2);
    assert_eq!(run(&["examples", "--which", "9.9", "--params", "3"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn delta_both_methods() {
    let (code, out, _) = run(&["delta", "--nu", "4", "--mu", "9"]);
    assert_eq!(code, 0);
    assert!(out.contains("delta (recursive) = 12"));
    assert!(out.contains("delta (closed)    = 12"));
}

#[test]
fn empty_census_is_header_only() {
    let (code, out, _) = run(&[
        "census", "--a", "4", "--b", "9", "--genus", "0", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "a,b,n,r,genus,gaps,verdict,rules_established\n");
}

#[test]
fn json_round_trip() {
    let (_, out, _) = run(&["sharp-s", "--a", "4", "--b", "9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let row = &v["results"][0];
    let canonical: NumericalSemigroup = row["canonical"].as_str().unwrap().parse().unwrap();
    let gaps: Vec<u64> = serde_json::from_value(row["gaps"].clone()).unwrap();
    assert_eq!(canonical, NumericalSemigroup::from_gaps(gaps).unwrap());
    assert_eq!(canonical.genus(), 9);
    assert_eq!(v["command"]["name"], "sharp-s");
}

#[test]
fn command_echo_omits_run_options() {
    let (_, out, _) = run(&[
        "census", "--a", "4", "--b", "9", "--genus", "9", "--jobs", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v["command"]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys, ["a", "b", "genus", "name", "require_hypotheses"]);
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("wsg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ws.csv");
    let (code, out, _) = run(&[
        "ws-q",
        "--a",
        "3",
        "--b",
        "7",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains(r#""1,2,4,5,7,10""#));
    std::fs::remove_dir_all(&dir).unwrap();

    let (code, _, err) = run(&[
        "delta",
        "--nu",
        "2",
        "--mu",
        "3",
        "--out",
        "/nonexistent-dir/x.txt",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("/nonexistent-dir/x.txt"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_wsg");
    let ok = Command::new(bin)
        .args(["analyze", "--a", "4", "--b", "9", "--genus", "12"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("verdict: AtMostOnce"));
    let bad = Command::new(bin)
        .args(["analyze", "--a", "4", "--b", "6"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
