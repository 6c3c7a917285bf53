use std::process::{Command, Output};

use serde_json::Value;

fn swan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swan")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = swan(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).expect("valid json");
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn free_verdicts() {
    let o = swan(&["free", "--p", "7", "--r", "15"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("stably free: yes; free: NO"), "{}", stdout(&o));
    let o = swan(&["free", "--p", "7", "--r", "9"]);
    assert!(stdout(&o).contains("free: yes"));
    let v = json(&["free", "--p", "7", "--r", "9"]);
    assert_eq!(v["rho2_class"], 0);
    assert_eq!(v["rho2_raw_text"], "1 + (λ^2)t");
    assert_eq!((v["s"].as_u64(), v["t"].as_u64()), (Some(25), Some(8)));
}

#[test]
fn stably_free_outside_p7() {
    let v = json(&["stably-free", "--p", "5", "--r", "7"]);
    assert_eq!(v["stably_free"], false);
    let v = json(&["free", "--p", "5", "--r", "9"]);
    assert_eq!(v["free"], "out-of-scope");
}

#[test]
fn table_has_one_row_per_unit() {
    for (p, phi) in [(3, 8), (5, 16), (7, 24), (11, 40)] {
        let v = json(&["table", "--p", &p.to_string()]);
        assert_eq!(v["rows"].as_array().map(Vec::len), Some(phi), "p = {p}");
    }
    let text = stdout(&swan(&["table", "--p", "7"]));
    assert_eq!(text.lines().count(), 25);
}

#[test]
fn classify_counts() {
    let v = json(&["classify", "--p", "7", "--n", "7"]);
    assert_eq!((v["minimal_types"].as_u64(), v["one_stabilization_classes"].as_u64()), (Some(2), Some(2)));
    assert!(stdout(&swan(&["classify", "--p", "7", "--n", "7"])).contains("{[1], [15]}"));
    let o = swan(&["classify", "--p", "5", "--n", "7"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn aut_report_shape() {
    let v = json(&["aut", "--p", "5", "--k", "12"]);
    assert_eq!(v["aut_order"], 320);
    assert_eq!(v["inn_order"], 40);
    assert_eq!(v["psi4_image"], serde_json::json!([1, 9, 41, 49]));
    assert_eq!(v["psik_image"]["image"], serde_json::json!([1, 9, 41, 49]));
    assert!(v["fixtures"].as_array().is_some());
}

#[test]
fn chain_degree() {
    let text = stdout(&swan(&["chain", "--p", "7", "--r", "15"]));
    assert!(text.contains("degree 15"), "{text}");
    let v = json(&["chain", "--p", "7", "--r", "9"]);
    assert_eq!(v["degree"], 25);
}

#[test]
fn verify_exit_code_and_ledger() {
    let o = swan(&["verify", "--p", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("[mismatch] grouprings.mod2-sextic"));
    assert!(text.contains("[match] swan.det-u15"));
    assert_eq!(swan(&["verify", "--p", "5"]).status.code(), Some(1));
}

#[test]
fn domain_errors_exit_1() {
    for args in [
        vec!["free", "--p", "4", "--r", "3"],
        vec!["free", "--p", "7", "--r", "14"],
        vec!["table", "--p", "1"],
        vec!["free", "--p", "7"],
        vec!["bogus"],
        vec!["free", "--p", "7", "--r", "15", "--format", "yaml"],
    ] {
        assert_eq!(swan(&args).status.code(), Some(1), "{args:?}");
    }
    let o = swan(&["free", "--p", "9", "--r", "1", "--format", "json"]);
    let err: Value = serde_json::from_slice(&o.stderr).expect("json error");
    assert_eq!(err["schema"], 1);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("swan-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = swan(&["free", "--p", "7", "--r", "15", "--format", "json", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["free"], "not-free");
    assert_eq!(v["rho2_class"], 1);
}
