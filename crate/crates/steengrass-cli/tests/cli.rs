use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steengrass")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn fails_with_2(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    assert!(out.stdout.is_empty());
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn reduced_power_on_grassmannian() {
    let out = stdout(&["act", "--op", "P^1", "--prime", "3", "--class", "1,1", "--grass", "2,5"]);
    assert_eq!(out.trim(), r#"{"terms":[{"partition":[3,1],"coeff":1},{"partition":[2,2],"coeff":2}]}"#);
    let v = json(&["act", "--op", "P^1", "--prime", "3", "--class", "1,1", "--grass", "2,5", "--envelope"]);
    assert_eq!(v["grass"], serde_json::json!([2, 5]));
    assert_eq!(v["prime"], 3);
}

#[test]
fn squares_on_grassmannians() {
    let v = json(&["act", "--op", "Sq^4", "--class", "1,1", "--grass", "2,5"]);
    assert_eq!(v["terms"], serde_json::json!([{"partition": [2, 2], "coeff": 1}]));
    for (op, class, grass) in [("Sq^2", "2,1", "2,4"), ("Sq^4", "3,1", "2,5"), ("(Sq^2)^2", "1,1", "2,5")] {
        let v = json(&["act", "--op", op, "--class", class, "--grass", grass]);
        assert_eq!(v["terms"], serde_json::json!([]), "{op} on {class}");
    }
    let v = json(&["act", "--op", "SQ^1*SQ^1", "--class", "(1,1)", "--grass", "2,5"]);
    assert_eq!(v["terms"], serde_json::json!([{"partition": [3, 1], "coeff": 2}]));
}

#[test]
fn symmetric_function_output() {
    let v = json(&["act", "--op", "SQ^1", "--class", "1"]);
    assert_eq!(
        v,
        serde_json::json!({"basis": "s", "terms": [
            {"partition": [2], "num": 1, "den": 1},
            {"partition": [1, 1], "num": -1, "den": 1}
        ]})
    );
    let v = json(&["act", "--op", "P^1", "--prime", "3", "--class", "1,1"]);
    let coeffs: Vec<i64> = v["terms"].as_array().unwrap().iter().map(|t| t["num"].as_i64().unwrap()).collect();
    assert_eq!(coeffs, [1, 2, 2, 2]);
}

#[test]
fn wu_table_rows() {
    let out = stdout(&["wu", "--p", "5", "--n", "2", "--k", "0"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("lambda,n,k,alpha,beta,alpha_mod_p"));
    assert!(out.lines().any(|l| l.starts_with("(1,1,2,6),2,0,-15,")), "{out}");
    let filtered = stdout(&["wu", "--p", "5", "--n", "2", "--k", "0", "--mod"]);
    assert!(filtered.lines().skip(1).all(|l| !l.ends_with(",0")));
    let v = json(&["wu", "--p", "2", "--n", "2", "--k", "1", "--format", "json"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["lambda"], serde_json::json!([5]));
    assert_eq!(rows[0]["alpha"], 5);
}

#[test]
fn inverse_kostka_rows() {
    let v = json(&["kostka-inv", "--degree", "3"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1]["lambda"], serde_json::json!([2, 1]));
    assert_eq!(
        rows[1]["entries"],
        serde_json::json!([{"partition": [2, 1], "coeff": 1}, {"partition": [1, 1, 1], "coeff": -2}])
    );
}

#[test]
fn poset_outputs() {
    let dot = stdout(&["poset", "--grass", "2,4", "--prime", "2", "--format", "dot"]);
    assert!(dot.starts_with("digraph attach {\n"));
    assert!(dot.contains("\"[1,1]\" -> \"[2,2]\" [label=\"Sq^4\"];"));
    assert!(!dot.contains("\"[2,1]\" -> \"[2,2]\""));
    assert_eq!(dot, stdout(&["poset", "--grass", "2,4", "--prime", "2"]));
    let v = json(&["poset", "--grass", "2,5", "--prime", "2", "--format", "json"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 10);
    let covers = v["covers"].as_array().unwrap();
    assert!(covers.iter().any(|c| c["from"] == serde_json::json!([1, 1]) && c["to"] == serde_json::json!([2, 2])));
    let rel = v["relation"].as_array().unwrap();
    assert!(!rel.iter().any(|c| c["from"] == serde_json::json!([3, 1]) && c["to"] == serde_json::json!([3, 3])));
    let trivial = stdout(&["poset", "--grass", "2,2", "--prime", "3"]);
    assert!(!trivial.contains("->"));
}

#[test]
fn conjecture_report() {
    let v = json(&["conjecture", "--max-boxes", "1", "--box", "4"]);
    assert_eq!(v["agree"], v["shapes"]);
    assert!(v["shapes"].as_u64().unwrap() > 0);
    assert_eq!(v["disagreements"], serde_json::json!([]));
}

#[test]
fn a_poly_output() {
    let v = json(&["a-poly", "--inner", "2,1", "--outer", "4,1"]);
    assert_eq!(v["pi"], serde_json::json!([]));
    assert_eq!(v["rho"], serde_json::json!([2]));
    assert_eq!(v["c"], 2);
    assert_eq!(v["value"], 1);
    assert_eq!(v["binomial"], serde_json::json!([0, 0, 1]));
    assert_eq!(v["monomial"][2], serde_json::json!({"num": 1, "den": 2}));
}

#[test]
fn suites_pass() {
    for suite in ["oracle", "hopf", "paper"] {
        let out = stdout(&["verify", "--suite", suite, "--max-degree", "6"]);
        assert!(out.lines().all(|l| !l.starts_with("FAIL")), "{out}");
        assert!(out.trim_end().ends_with("checks passed"));
    }
}

#[test]
fn diagnostics_exit_2() {
    assert!(fails_with_2(&["act", "--op", "Sq^4", "--class", "3,x", "--grass", "2,5"]).contains("malformed partition"));
    assert!(fails_with_2(&["act", "--op", "Sq^4", "--class", "3,3,3", "--grass", "2,5"]).contains("does not fit"));
    assert!(fails_with_2(&["act", "--op", "P^1", "--prime", "4", "--class", "1"]).contains("not prime"));
    assert!(fails_with_2(&["poset", "--grass", "2,5", "--prime", "6"]).contains("not prime"));
    fails_with_2(&["act", "--op", "Q^1", "--class", "1"]);
    fails_with_2(&["act", "--op", "Sq^2", "--class", "1", "--grass", "5,2"]);
    fails_with_2(&["a-poly", "--inner", "3", "--outer", "2"]);
    fails_with_2(&["wu", "--p", "1", "--n", "1", "--k", "0"]);
}
