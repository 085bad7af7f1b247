use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opbialg")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (out.status.code().unwrap(), v)
}

#[test]
fn trees_enumerate_in_all_formats() {
    let (code, v) = json(&["trees", "enumerate", "--leaves", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 5);
    let csv = String::from_utf8(run(&["trees", "enumerate", "--leaves", "3", "--format", "csv"]).stdout).unwrap();
    assert_eq!(csv.lines().collect::<Vec<_>>(), ["index,tree", "0,\"((.,.),.)\"", "1,\"(.,(.,.))\""]);
    let text = String::from_utf8(run(&["prim", "--model", "dup", "--degree", "2", "--format", "text"]).stdout).unwrap();
    assert!(text.contains("dim = 1"));
}

#[test]
fn grafting_and_products() {
    let (_, v) = json(&["trees", "graft", "--op", "over", "(.,.)", "(.,.)"]);
    assert_eq!(v["result"], "((.,.),.)");
    let (_, v) = json(&["product", "--model", "dup", "--product", "left", "--left", "x", "--right", "y"]);
    assert_eq!(v["value"], serde_json::json!({"(.,(.,.)):xy": "1"}));
    let (_, v) = json(&["coproduct", "--model", "as", "--element", "xyz"]);
    assert_eq!(v["value"], serde_json::json!({"x|yz": "1", "xy|z": "1"}));
}

#[test]
fn failed_checks_exit_one_with_witness() {
    let (code, v) = json(&["check", "--model", "dup", "--relation", "nui", "--coproduct", "delta", "--product", "left", "--max-degree", "4"]);
    assert_eq!((code, v["holds"].clone()), (0, Value::Bool(true)));
    let (code, v) = json(&["check", "--model", "lie", "--relation", "lily", "--max-degree", "4", "--witness"]);
    assert_eq!(code, 1);
    assert_eq!(v["firstFailure"]["degree"], 4);
    let (_, v) = json(&["check", "--model", "lie", "--relation", "lily", "--max-degree", "4"]);
    assert!(v.get("firstFailure").is_none());
    let (code, _) = json(&["series", "--check", "triple", "--names", "Com,As,Com", "--order", "5"]);
    assert_eq!(code, 1);
}

#[test]
fn relation_files_are_read() {
    let path = std::env::temp_dir().join(format!("opbialg-nui-{}.json", std::process::id()));
    let nui = r#"{"name": "file-nui", "terms": [
        {"coeff": "1", "outOps": ["id", "id"], "perm": [0, 1], "inCoops": ["id", "id"]},
        {"coeff": "1", "outOps": ["$mu", "id"], "perm": [0, 1, 2], "inCoops": ["id", "$delta"]},
        {"coeff": "1", "outOps": ["id", "$mu"], "perm": [0, 1, 2], "inCoops": ["$delta", "id"]}
    ]}"#;
    std::fs::write(&path, nui).unwrap();
    let out = run(&["check", "--model", "as", "--relation-file", path.to_str().unwrap(), "--max-degree", "4"]);
    std::fs::remove_file(&path).ok();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|_| panic!("{}", String::from_utf8_lossy(&out.stderr)));
    assert_eq!(v["holds"], true, "{v}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["idempotent", "--model", "dup"],
        &["prim", "--model", "nope", "--degree", "2"],
        &["coproduct", "--model", "as", "--element", "x +"],
        &["trees", "enumerate", "--leaves", "3", "--max-degree", "0"],
        &["homology", "--internal-degree", "2", "--format", "csv"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn idempotents_and_verification() {
    let (code, v) = json(&["idempotent", "--model", "dup", "--max-degree", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["ranks"], serde_json::json!([1, 1, 2, 5, 14]));
    let (_, v) = json(&["idempotent", "--model", "classical", "--kind", "eulerian:2", "--max-degree", "3"]);
    assert_eq!(v["ranks"], serde_json::json!([0, 3, 2]));
    let (code, v) = json(&["verify", "--model", "dup", "--what", "h2", "--max-degree", "4"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("epi-with-splitting")));
    let (code, v) = json(&["pbw", "--model", "dup", "--element", "{x<y}"]);
    assert_eq!((code, v["reassemblesExactly"].as_bool()), (0, Some(true)));
}

#[test]
fn output_is_deterministic() {
    let args = ["homology", "--internal-degree", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
