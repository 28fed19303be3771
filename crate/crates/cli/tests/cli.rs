use std::process::{Command, Output};

use serde_json::Value;

fn nie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nie")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn code_repr_of_x_in_a_chain_algebra() {
    let out = nie(&["code-repr", "--algebra", "Z(8);n=2;lambda=2", "--gens", "[0,1]"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["representation"], serde_json::json!([[0, 1], [2, 0], [4, 0]]));
    assert_eq!(v["torsional_degrees"], serde_json::json!([1, 0, 0]));
    assert_eq!(v["cardinality"], "32");
}

#[test]
fn optimal_reed_solomon_certificate() {
    let out = nie(&["pir-optimal", "--kind", "rs", "--q", "5", "--k", "1", "--s", "2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["n"], 4);
    assert_eq!(v["cardinality"], "5");
    assert_eq!(v["distance"], 4);
    assert_eq!(v["bound"], "9/2");
    assert_eq!(v["optimal"], true);
}

#[test]
fn optimal_galois_certificate() {
    let out = nie(&[
        "pir-optimal",
        "--kind",
        "galois",
        "--p",
        "2",
        "--t",
        "2",
        "--m",
        "2",
        "--n",
        "3",
        "--k",
        "1",
        "--s",
        "2",
    ]);
    let v = json(&out);
    assert_eq!(v["bound"], "7/2");
    assert_eq!(v["distance"], 3);
    assert_eq!(v["cardinality"], "16");
}

#[test]
fn classification_over_a_lambda_list() {
    let out = nie(&["algebra-classify", "--ring", "Z(4)", "--n", "2", "--lambdas", "0,2,1"]);
    let v = json(&out);
    let cls: Vec<&Value> = v["algebras"].as_array().unwrap().iter().map(|a| &a["classification"]).collect();
    assert_eq!(cls, [&Value::from("LocalNonChain"), &Value::from("ChainViaX(4)"), &Value::Null]);
}

#[test]
fn distance_and_dual_reports() {
    let out = nie(&["code-distance", "--algebra", "Z(4);n=2;lambda=2", "--gens", "[0,1]"]);
    assert_eq!(json(&out)["distance"], 1);
    let out = nie(&["code-dual", "--algebra", "F(5);n=4;lambda=0", "--gens", "[0,0,1,0]"]);
    let v = json(&out);
    assert_eq!(v["dual_generator_matrix"], serde_json::json!([[1, 0, 0, 0], [0, 1, 0, 0]]));
    assert_eq!(v["matches_inner_product_dual"], true);
    assert!(v["verdict"]["no"].is_object());
}

#[test]
fn pir_distance_uses_the_nie_component() {
    let out = nie(&["pir-distance", "--pir", "Z(4) x F(5)", "--n", "2", "--lambdas", "2,1", "--gens", "[0,1]|"]);
    let v = json(&out);
    assert_eq!(v["distance"], 1);
    assert_eq!(v["enumerated_distance"], 1);
    assert_eq!(v["nie_witness"].as_array().unwrap().len(), 2);
}

#[test]
fn domain_errors_exit_one_with_a_kind() {
    let out = nie(&["ring-info", "--ring", "Z(6)"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "NonPrime");
    let out = nie(&["code-repr", "--algebra", "Z(4);n=2;lambda=2", "--gens", "[1,2,3]"]);
    assert_eq!(json(&out)["error"]["kind"], "LengthMismatch");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(nie(&["code-repr"]).status.code(), Some(2));
    assert_eq!(nie(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_csv_is_available() {
    let args = ["verify", "--suite", "optimal", "--format", "csv"];
    let a = nie(&args);
    let b = nie(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("suite,check,passed,failed,statement\n"));
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("nie-ring-info-{}.json", std::process::id()));
    let out = nie(&["ring-info", "--ring", "GR(4,2)", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["size"], 16);
    assert_eq!(v["e"], 2);
}

#[test]
fn verify_distance_suite_passes() {
    let out = nie(&["verify", "--suite", "distance", "--max-algebra-size", "4096"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["all_passed"], true);
}
