use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assocmink"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn y_values(report: &Value) -> Vec<(Vec<u64>, String)> {
    report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let set = e["set"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (set, e["y"].as_str().unwrap().to_string())
        })
        .collect()
}

#[test]
fn hexagon_coefficients() {
    let report = json(&["decompose", "--n", "4", "--up", "2"]);
    assert_eq!(report["all_agree"], true);
    assert_eq!(report["methods"], serde_json::json!(["moebius", "four-term", "product"]));
    let ys = y_values(&report);
    let expected = [
        "1", "-1", "1", "1", "3", "1", "0", "2", "0", "1", "-1", "0", "1", "2", "-1",
    ];
    let got: Vec<String> = ys.iter().map(|(_, y)| y.clone()).collect();
    let want: Vec<String> = expected.iter().map(|y| format!("{y}/1")).collect();
    assert_eq!(got, want);
    assert_eq!(ys[6].0, vec![1, 4]);
}

#[test]
fn pentagon_with_empty_up_set() {
    let ys = y_values(&json(&["decompose", "--n", "3"]));
    let got: Vec<&str> = ys.iter().map(|(_, y)| y.as_str()).collect();
    assert_eq!(got, ["1/1", "1/1", "1/1", "1/1", "0/1", "1/1", "1/1"]);
}

#[test]
fn single_method_table() {
    let report = json(&["decompose", "--n", "3", "--up", "2", "--method", "product"]);
    assert_eq!(report["method"], "product");
    assert_eq!(report["entries"][6]["y"], "-1/1");
}

#[test]
fn cyclohedron_counts() {
    let report = json(&["cyclo-check"]);
    assert_eq!(report, serde_json::json!({"left": 27, "right": 20, "decomposition_holds": false}));
}

#[test]
fn zvalues_schema() {
    let report = json(&["zvalues", "--n", "3", "--up", "2"]);
    assert_eq!(report["total"], "6/1");
    let zs: Vec<&str> = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["z"].as_str().unwrap())
        .collect();
    assert_eq!(zs, ["1/1", "0/1", "1/1", "3/1", "3/1", "3/1", "6/1"]);
}

#[test]
fn vertices_of_the_pentagon() {
    let report = json(&["vertices", "--n", "3", "--up", "2"]);
    assert_eq!(report["vertex_count"], 5);
    assert_eq!(report["facet_count"], 5);
    assert!(report["vertices"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!(["3/1", "0/1", "3/1"])));
}

#[test]
fn classification_listing() {
    let report = json(&["classify", "--n", "4", "--up", "2"]);
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 15);
    assert_eq!(entries[4]["set"], serde_json::json!([1, 2]));
    assert_eq!(entries[4]["proper"], serde_json::json!([1, 4]));
    assert_eq!(entries[4]["sub_case"], "a");
    assert_eq!(entries[6]["nested"], false);
}

#[test]
fn verify_passes() {
    let report = json(&["verify", "--max-n", "6"]);
    assert_eq!(report["passed"], true);
}

#[test]
fn output_is_stable() {
    let a = run(&["decompose", "--n", "5", "--up", "2,4"]);
    let b = run(&["decompose", "--n", "5", "--up", "2", "--up", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["zvalues", "--n", "4", "--up", "3", "--seed", "11"]);
    let d = run(&["zvalues", "--n", "4", "--up", "3", "--seed", "11"]);
    assert!(c.status.success());
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn custom_facet_file() {
    let dir = std::env::temp_dir().join(format!("assocmink-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spec.json");
    let spec = serde_json::json!({
        "n": 3, "up": [], "total": "6",
        "entries": [
            {"set": [1], "z": "11/10"}, {"set": [2], "z": "1"}, {"set": [3], "z": "1"},
            {"set": [1, 2], "z": "3"}, {"set": [2, 3], "z": "29/10"}
        ]
    });
    std::fs::write(&path, spec.to_string()).unwrap();
    let p = path.to_str().unwrap();
    let report = json(&["decompose", "--n", "3", "--z-file", p]);
    assert_eq!(report["spec"], "custom");
    assert_eq!(report["methods"], serde_json::json!(["moebius", "four-term"]));
    assert_eq!(report["all_agree"], true);

    let out = run(&["decompose", "--n", "3", "--z-file", p, "--method", "product"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["decompose", "--n", "3", "--up", "2", "--z-file", p]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_input_reports_json_error() {
    for args in [
        &["decompose", "--n", "4", "--up", "1"][..],
        &["decompose", "--n", "1"][..],
        &["zvalues", "--n", "40"][..],
        &["frobnicate"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
        assert!(err["error"].is_string());
    }
}

#[test]
fn table_format() {
    let out = run(&["zvalues", "--n", "3", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[5].trim_start().starts_with("{1,3}"));
    assert!(lines[5].ends_with("2/1"));
}
