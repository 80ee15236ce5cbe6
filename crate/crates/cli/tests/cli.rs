use std::process::{Command, Output};

use serde_json::Value;

fn consta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_consta"))
        .args(args)
        .env_remove("CONSTA_MAX_CODEWORDS")
        .env_remove("CONSTA_ORACLE_MAX_DIM")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = consta(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn factor_degrees() {
    let v = json(&["factor", "--n", "3"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["degrees"], serde_json::json!([1, 2]));
    let v = json(&["factor", "--m", "2", "--n", "3"]);
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 1]));
    let v = json(&["factor", "--n", "7"]);
    assert_eq!(v["degrees"], serde_json::json!([1, 3, 3]));
}

#[test]
fn even_n_is_rejected() {
    let out = consta(&["factor", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n must be odd"));
}

#[test]
fn zero_alpha_is_rejected() {
    let out = consta(&["count", "--alpha", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn counts() {
    let v = json(&["count"]);
    assert_eq!(v["total"], "135");
    assert_eq!(v["forms_agree"], true);
    assert_eq!(v["factors"][0]["families"], serde_json::json!(["36", "9", "9", "7", "38", "36"]));
    assert_eq!(json(&["count", "--n", "3"])["total"], "106515");
    assert_eq!(json(&["count", "--m", "2"])["total"], "789");
}

#[test]
fn thread_count_does_not_change_output() {
    for args in [
        &["enumerate", "--n", "3", "--limit", "500", "--generators"][..],
        &["oracle"][..],
        &["selfdual", "--m", "2"][..],
    ] {
        let a = consta(args);
        let b = consta(&[args, &["--threads", "1"]].concat());
        assert!(a.status.success() && b.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn enumerate_offset_and_csv() {
    let v = json(&["enumerate", "--offset", "130", "--limit", "10"]);
    let codes = v["codes"].as_array().unwrap();
    assert_eq!(codes.len(), 5);
    assert_eq!(codes[0]["index"], "130");
    assert_eq!(v["total"], "135");

    let out = consta(&["enumerate", "--format", "csv", "--n", "3", "--limit", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,factor,family,s,t,h,size");
    // one row per factor and code
    assert_eq!(lines.len(), 1 + 3 * 2);
}

#[test]
fn enumerate_whole_stream_is_canonical() {
    let v = json(&["enumerate"]);
    let codes = v["codes"].as_array().unwrap();
    assert_eq!(codes.len(), 135);
    let families: Vec<u64> = codes.iter().map(|c| c["components"][0]["family"].as_u64().unwrap()).collect();
    assert!(families.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn oracle_passes() {
    let v = json(&["oracle", "--list-ideals"]);
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["matched"], 135);
    let ideals = v["ideals"].as_array().unwrap();
    assert_eq!(ideals.len(), 135);
    assert!(ideals.iter().all(|i| i["code"].is_u64()));
}

#[test]
fn oracle_cap_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_consta"))
        .args(["oracle"])
        .env("CONSTA_ORACLE_MAX_DIM", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(consta(&["oracle", "--oracle-max-dim", "8"]).status.code() == Some(2));
}

#[test]
fn selfdual_m1() {
    let v = json(&["selfdual", "--scan"]);
    assert_eq!(v["found"], 11);
    assert_eq!(v["expected"], "11");
    assert_eq!(v["verified"], true);
    assert_eq!(v["scan"]["matches_list"], true);
    assert_eq!(v["status"], "PASS");
}

#[test]
fn selfdual_other_lengths_rejected() {
    assert_eq!(consta(&["selfdual", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("consta-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("count.json");
    let out = consta(&["count", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["total"], "135");
    std::fs::remove_dir_all(dir).unwrap();
}
