use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_localities")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("json on stderr")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("localities-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn essentials() {
    assert_eq!(stdout_json(&run(&["essentials", "--group", "S3", "--p", "2"])), json!([[]]));
    let v = stdout_json(&run(&["essentials", "--group", "S4", "--p", "2"]));
    assert_eq!(v.as_array().unwrap().len(), 1);
    let spec = temp_file(
        "only-s.json",
        r#"{"group": "S4", "p": 2, "S": ["(1 2)", "(1 3 2 4)"], "delta": {"explicit": [["(1 2)", "(1 3 2 4)"]]}}"#,
    );
    assert_eq!(stdout_json(&run(&["essentials", "--in", spec.to_str().unwrap()])), json!([]));
}

#[test]
fn decompose_and_verify_round_trip() {
    for (group, element) in [("S3", "(1 2 3)"), ("S3", "(1 2)"), ("S4", "(1 2 3)"), ("S4", "(1 3 2 4)")] {
        let args = ["decompose", "--group", group, "--p", "2", "--element", element];
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "byte-identical output");
        let cert = stdout_json(&first);
        let path = temp_file(&format!("{group}-{}.json", element.len()), &cert.to_string());
        let report = stdout_json(&run(&["verify-cert", "--group", group, "--p", "2", "--cert", path.to_str().unwrap()]));
        assert_eq!(report["violation_count"], json!(0));
    }
    let cert = stdout_json(&run(&["decompose", "--group", "S3", "--p", "2", "--element", "(1 2 3)"]));
    assert_eq!(cert["factors"], json!([{"Q": [], "x": "(1 2 3)"}]));
    let cert = stdout_json(&run(&["decompose", "--group", "S3", "--p", "2", "--element", "(1 2)"]));
    assert_eq!(cert["factors"], json!([{"Q": ["(1 2)"], "x": "(1 2)"}]));
}

#[test]
fn mutated_certificate_is_rejected() {
    let mut cert = stdout_json(&run(&["decompose", "--group", "S4", "--p", "2", "--element", "(1 2 3)"]));
    cert["target"] = json!("(1 3 2)");
    let path = temp_file("mutated.json", &cert.to_string());
    let out = run(&["verify-cert", "--group", "S4", "--p", "2", "--cert", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["violation_count"].as_u64().unwrap() > 0);
}

#[test]
fn exit_codes() {
    let out = run(&["decompose", "--group", "S3", "--p", "2", "--delta", "nontrivial", "--element", "(1 2 3)"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_json(&out)["error"], json!("domain"));

    let spec = temp_file("unknown-field.json", r#"{"group": "S3", "p": 2, "colour": "red"}"#);
    let out = run(&["essentials", "--in", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], json!("spec"));

    let out = run(&["essentials", "--group", "S3", "--p", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn limits() {
    for group in ["S3", "S4"] {
        let v = stdout_json(&run(&["limit", "--group", group, "--p", "2", "--functor", "h1"]));
        assert_eq!(v, json!({"lim_T": [2], "lim_Te": [2], "equal": true}));
    }
    let v = stdout_json(&run(&["limit", "--group", "S4", "--p", "2", "--functor", "fixed-points"]));
    assert_eq!(v, json!({"lim_T": [2], "lim_Te": [2], "equal": true}));
    let v = stdout_json(&run(&["limit", "--group", "S4", "--p", "2", "--essential-only", "--module", "permutation"]));
    assert_eq!(v, json!({"invariant_factors": [2]}));
}

#[test]
fn inconsistent_functor_exits_4() {
    // S3 with Δ = all: objects 0 = 1 and 1 = S
    let info = stdout_json(&run(&["transporter", "info", "--group", "S3", "--p", "2"]));
    assert_eq!(info["hom_sizes"], json!([[6, 6], [0, 2]]));
    let elements = ["()", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"];
    let mut maps = serde_json::Map::new();
    for i in 0..2 {
        for j in i..2 {
            for e in elements {
                maps.insert(format!("{i}->{j}:{e}"), json!([[1]]));
            }
        }
    }
    maps.retain(|k, _| !k.starts_with("1->1:") || k.ends_with(":()") || k.ends_with(":(1 2)"));
    let good = json!({"values": {"0": [2], "1": [2]}, "maps": maps.clone()});
    let path = temp_file("good-functor.json", &good.to_string());
    let v = stdout_json(&run(&["limit", "--group", "S3", "--p", "2", "--functor", path.to_str().unwrap()]));
    assert_eq!(v["lim_T"], json!([2]));

    maps.insert("0->0:(1 2 3)".into(), json!([[0]]));
    let bad = json!({"values": {"0": [2], "1": [2]}, "maps": maps});
    let path = temp_file("bad-functor.json", &bad.to_string());
    let out = run(&["limit", "--group", "S3", "--p", "2", "--functor", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stderr_json(&out)["error"], json!("functor"));
}

#[test]
fn cohomology_and_info() {
    let v = stdout_json(&run(&["cohomology", "--group", "S3", "--p", "2", "--degree", "2"]));
    assert_eq!(v, json!({"H": [2], "lim_T": [2], "lim_Te": [2], "equal": true}));
    let module = temp_file("sign.json", r#"{"orders": [4], "action": {"(1 2)": [[-1]], "(1 2 3)": [[1]]}}"#);
    let v = stdout_json(&run(&["cohomology", "--group", "S3", "--p", "2", "--degree", "0", "--module", module.to_str().unwrap()]));
    assert_eq!(v["H"], json!([2]));
    assert_eq!(v["equal"], json!(true));

    let v = stdout_json(&run(&["group", "info", "--group", "A4"]));
    assert_eq!(v["order"], json!(12));
    let spec = temp_file("group.json", r#"{"name": "K", "kind": "permutation", "n": 4, "generators": ["(1 2)(3 4)", "(1 3)(2 4)"]}"#);
    let v = stdout_json(&run(&["group", "info", "--in", spec.to_str().unwrap()]));
    assert_eq!(v["order"], json!(4));
    assert_eq!(v["name"], json!("K"));

    let v = stdout_json(&run(&["locality", "build", "--group", "S3", "--p", "2", "--delta", "nontrivial"]));
    assert_eq!(v["size"], json!(2));
    let v = stdout_json(&run(&["locality", "verify", "--group", "S4", "--p", "2", "--maxlen", "2"]));
    assert_eq!(v["violation_count"], json!(0));

    let out = std::env::temp_dir().join(format!("localities-cli-{}-out.json", std::process::id()));
    let status = run(&["essentials", "--group", "S4", "--p", "2", "--out", out.to_str().unwrap()]);
    assert!(status.status.success() && status.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written.as_array().unwrap().len(), 1);
}
