use std::io::Write;

use racg_lcs::cli::{run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("racg-lcs").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn complex_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

#[test]
fn dims_of_three_points() {
    let f = complex_file(r#"{"m":3,"faces":[]}"#);
    let (code, out, _) = call(&["dims", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dims"], serde_json::json!([3, 3, 5, 8]));
}

#[test]
fn gens_count() {
    let f = complex_file(r#"{"m":3,"faces":[]}"#);
    let (code, out, _) = call(&["gens", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 5);
}

#[test]
fn table_format() {
    let f = complex_file(r#"{"m":3,"faces":[[1,2]]}"#);
    let (code, out, _) = call(&["--format", "table", "dims", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("L^4\t4"), "{out}");
}

#[test]
fn verify_paper_single_case() {
    let (code, out, _) = call(&["verify-paper", "--case", "numbergens3"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn usage_errors() {
    let f = complex_file(r#"{"m":3,"faces":[]}"#);
    let path = f.path().to_str().unwrap();
    assert_eq!(call(&["dims", "--class", "6", path]).0, EXIT_USAGE);
    assert_eq!(call(&["verify-paper", "--case", "nope"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    let bad = complex_file(r#"{"m":3,"faces":[],"extra":1}"#);
    let (code, _, err) = call(&["dims", bad.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error:"), "{err}");
}
