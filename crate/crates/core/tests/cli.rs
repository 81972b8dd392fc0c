use std::process::{Command, Output};

use serde_json::Value;

fn pentachain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentachain"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = pentachain(args);
    assert!(out.status.success(), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn generate_json_edge_list() {
    let v = json(&["generate", "--family", "cylinder", "--n", "2"]);
    assert_eq!(v["edges"].as_array().unwrap().len(), 14);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 10);
    assert_eq!(v["family"], "cylinder");
}

#[test]
fn generate_dot() {
    let out = pentachain(&["generate", "--family", "mobius", "--n", "3", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph "));
    assert_eq!(text.matches(" -- ").count(), 21);
}

#[test]
fn rejects_short_chain() {
    let out = pentachain(&["generate", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n must be >= 2"));
}

#[test]
fn rejects_unknown_family() {
    let out = pentachain(&["indices", "--family", "torus", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn indices_values() {
    let v = json(&["indices", "--family", "cylinder", "--n", "5"]);
    assert_eq!(v["gutman"], "7745");
    assert!(v["kf_star"]["decimal"].as_str().unwrap().starts_with("3110.1720"));

    let v = json(&["indices", "--family", "mobius", "--n", "6"]);
    let kf: f64 = v["kf_star"]["decimal"].as_str().unwrap().parse().unwrap();
    assert_eq!(format!("{kf:.4}"), "5074.2227");

    let v = json(&["indices", "--family", "cylinder", "--n", "2"]);
    assert_eq!((v["kemeny"]["num"].as_str(), v["kemeny"]["den"].as_str()), (Some("593"), Some("56")));
    assert!(v.get("oracle").is_none());
}

#[test]
fn indices_inline_oracles() {
    let v = json(&["indices", "--family", "mobius", "--n", "4", "--verify-inline"]);
    assert_eq!(v["oracle"]["matches"], true);
    assert_eq!(v["oracle"]["gutman"], v["gutman"]);
}

#[test]
fn verify_passes() {
    let out = pentachain(&["verify", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let records: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(records.len() >= 200);
    assert!(records.iter().all(|r| r["pass"] == true));
}

#[test]
fn verify_single_family() {
    let v = pentachain(&["verify", "--n-max", "4", "--family", "mobius"]);
    assert!(v.status.success());
    let text = stdout(&v);
    assert!(text.contains("\"spectrum_union\""));
    assert!(!text.contains("\"cylinder\""));
}

#[test]
fn verify_reports_injected_fault() {
    let out = pentachain(&["verify", "--n-max", "4", "--inject-gutman-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("FAIL gutman"), "{err}");
    assert!(err.contains("n=") && err.contains("family="));
}

#[test]
fn table_tail_rows() {
    let out = pentachain(&["table", "--n-list", "20,50,99"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1], "20,417700,148142.4997,2.8196,417340,148142.4997,2.8172");
    assert_eq!(lines[3], "99,48172311,16278895.2499,2.9592,48170529,16278895.2499,2.9591");
}

#[test]
fn table_json_round_trip() {
    let v = json(&["table", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[0]["gut_mobius"], "622");
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn spectrum_blocks() {
    let v = json(&["spectrum", "--n", "2"]);
    let rho: Vec<f64> = serde_json::from_value(v["rho"].clone()).unwrap();
    let mu: Vec<f64> = serde_json::from_value(v["mu"].clone()).unwrap();
    assert_eq!((rho.len(), mu.len()), (6, 4));
    assert!(rho[0].abs() < 1e-10);
    assert!(rho.iter().chain(&mu).all(|&x| x <= 2.0 + 1e-9));
    assert!(v["union_check_max_err"].as_f64().unwrap() < 1e-8);
}

#[test]
fn spectrum_budget() {
    let out = pentachain(&["spectrum", "--n", "201"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("pentachain-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = pentachain(&["table", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&pentachain(&["table"])));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn deterministic_output() {
    for args in [
        &["verify", "--n-max", "4"][..],
        &["spectrum", "--family", "mobius", "--n", "5"],
        &["generate", "--n", "4", "--format", "dot"],
    ] {
        assert_eq!(pentachain(args).stdout, pentachain(args).stdout, "{args:?}");
    }
}
