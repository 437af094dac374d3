//! Byte-for-byte comparisons against files in `tests/golden`.
//! Run with `UPDATE_GOLDEN=1` to rewrite them after an intended change.

use std::path::PathBuf;
use std::process::{Command, Output};

fn spun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spun"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn golden(name: &str, args: &[&str]) {
    let out = spun(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let again = spun(args);
    assert_eq!(out.stdout, again.stdout, "{args:?} is not deterministic");

    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&expected), "{args:?}");
}

fn both(stem: &str, args: &[&str]) {
    golden(&format!("{stem}.txt"), args);
    let mut json = args.to_vec();
    json.extend(["--format", "json"]);
    golden(&format!("{stem}.json"), &json);
}

#[test]
fn info() {
    both("info_figure8", &["info", "--builtin", "figure8"]);
    both("info_gieseking", &["info", "--builtin", "gieseking"]);
}

#[test]
fn file_input_matches_builtin() {
    let from_file = spun(&["info", "tests/data/figure8.tri"]);
    let builtin = spun(&["info", "--builtin", "figure8"]);
    let strip = |o: &Output| String::from_utf8_lossy(&o.stdout).lines().skip(1).collect::<Vec<_>>().join("\n");
    assert!(from_file.status.success());
    assert_eq!(strip(&from_file), strip(&builtin));
}

#[test]
fn basis() {
    both("basis_figure8", &["basis", "--builtin", "figure8"]);
    both("basis_gieseking", &["basis", "--builtin", "gieseking"]);
}

#[test]
fn qmatch() {
    both("qmatch_figure8", &["qmatch", "--builtin", "figure8"]);
    both("qmatch_gieseking", &["qmatch", "--builtin", "gieseking"]);
}

#[test]
fn enumerate() {
    both("enumerate_figure8", &["enumerate", "--builtin", "figure8"]);
    both("enumerate_gieseking", &["enumerate", "--builtin", "gieseking"]);
}

#[test]
fn boundary() {
    both(
        "boundary_figure8_s1",
        &["boundary", "--builtin", "figure8", "--vector", "1,0,0,0,0,2"],
    );
    both("boundary_figure8_index", &["boundary", "--builtin", "figure8", "--index"]);
    both(
        "boundary_figure8_zero",
        &["boundary", "--builtin", "figure8", "--vector", "0,0,0,0,0,0", "--cusp", "0"],
    );
    both(
        "boundary_gieseking",
        &["boundary", "--builtin", "gieseking", "--vector", "2,0,1", "--index"],
    );
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut args = args.to_vec();
    args.extend(["--format", "json"]);
    serde_json::from_slice(&spun(&args).stdout).unwrap()
}

#[test]
fn values() {
    let info = json(&["info", "--builtin", "figure8"]);
    assert_eq!(info["dim_v"], "4");
    assert_eq!(info["dim_w"], "5");
    assert_eq!(info["cusps"][0]["kind"], "torus");
    let info = json(&["info", "--builtin", "gieseking"]);
    assert_eq!(info["orientable"], false);
    assert_eq!(info["cusps"][0]["kind"], "klein bottle");
    assert_eq!(
        json(&["basis", "--builtin", "gieseking"])["tetrahedral"].as_array().unwrap().len(),
        1
    );
    assert_eq!(json(&["enumerate", "--builtin", "figure8"])["count"], "20");
    assert_eq!(json(&["enumerate", "--builtin", "gieseking"])["count"], "3");
    let s1 = json(&["boundary", "--builtin", "figure8", "--vector", "1,0,0,0,0,2"]);
    assert_eq!(s1["cusps"][0]["free_gcd"], "1");
    assert_eq!(s1["cusps"][0]["zero"], false);
    assert_eq!(json(&["boundary", "--builtin", "figure8", "--index"])["image_index"], "2");
}

/// Every scalar of the JSON document shows up in the text rendering.
#[test]
fn formats_carry_the_same_data() {
    fn scalars(v: &serde_json::Value, out: &mut Vec<String>) {
        match v {
            serde_json::Value::Array(a) => a.iter().for_each(|x| scalars(x, out)),
            serde_json::Value::Object(m) => m.values().for_each(|x| scalars(x, out)),
            serde_json::Value::String(s) => out.push(s.clone()),
            other => out.push(other.to_string()),
        }
    }
    let args = ["boundary", "--builtin", "gieseking", "--vector", "0,2,1", "--index"];
    let text = String::from_utf8(spun(&args).stdout).unwrap();
    let mut values = Vec::new();
    scalars(&json(&args), &mut values);
    let mut rest = text.as_str();
    for v in values {
        let at = rest.find(&v).unwrap_or_else(|| panic!("{v:?} missing from text output"));
        rest = &rest[at + v.len()..];
    }
}

fn fails(args: &[&str], code: i32, message: &str) {
    let out = spun(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains(message), "{args:?}: {stderr}");
}

#[test]
fn input_errors_exit_with_two() {
    fails(&["info", "missing.tri"], 2, "missing.tri");
    fails(&["info", "tests/data/sphere.tri"], 2, "Euler characteristic");
    fails(&["info", "--builtin", "whitehead"], 2, "unknown builtin");
    fails(
        &["boundary", "--builtin", "figure8", "--vector", "1,0,0,0,0,1"],
        2,
        "matching equation 0",
    );
    fails(&["boundary", "--builtin", "figure8", "--vector", "1,2"], 2, "length 2, expected 6");
    fails(
        &["boundary", "--builtin", "figure8", "--vector", "1,x,0,0,0,2"],
        2,
        "not an integer",
    );
    fails(
        &["boundary", "--builtin", "figure8", "--vector", "1,0,0,0,0,2", "--cusp", "1"],
        2,
        "cusp index 1",
    );
    fails(&["boundary", "--builtin", "figure8"], 2, "--vector");
    fails(&["frobnicate"], 2, "unrecognized subcommand");
}
