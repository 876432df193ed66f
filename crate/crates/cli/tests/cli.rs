use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .args(args)
        .env_remove("QEULER_PERM_CAP")
        .env_remove("QEULER_DEGREE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&ok(&a)).unwrap()
}

#[test]
fn expand_cycle_type_six_in_schur_basis() {
    let s = ok(&["expand", "Q", "--lambda", "6", "--j", "3", "--basis", "s"]);
    assert_eq!(s.trim_end(), "3 s[6] + 3 s[5,1] + 3 s[4,2] + s[3,3] + s[3,2,1]");
    let h = ok(&["expand", "Q", "--lambda", "6", "--j", "3"]);
    assert_eq!(h.trim_end(), "h[5,1] + 2 h[4,2] - h[4,1,1] + h[3,2,1]");
}

#[test]
fn expand_json_terms() {
    let v = json(&["expand", "Q", "--n", "3", "--j", "1", "--basis", "s"]);
    assert_eq!(v["basis"], "s");
    let terms = v["terms"].as_array().unwrap();
    assert!(terms.iter().all(|t| t["partition"].is_array() && t["coefficient"].is_string()));
    // Q_{3,1} is Schur positive
    assert!(terms.iter().all(|t| !t["coefficient"].as_str().unwrap().starts_with('-')));
    let f = ok(&["expand", "Q", "--n", "2", "--j", "1", "--basis", "f"]);
    assert!(f.contains("F["), "{f}");
}

#[test]
fn char_table_n6_csv() {
    let csv = ok(&["table", "char", "--n", "6", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "lambda,\"6,1\",\"6,2\",\"6,3\"");
    assert_eq!(lines[1], "[6],1,0,0");
    assert_eq!(lines[7], "\"[2,2,2]\",1,0,6");
    assert_eq!(lines[11], "\"[1,1,1,1,1,1]\",1,26,66");
}

#[test]
fn verify_symmetric_generating_function_through_z7() {
    let o = run(&["verify", "thm1.2", "--zmax", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for z in 0..=7 {
        assert!(text.contains(&format!("n={z} ")), "grade {z} missing");
    }
    let v = json(&["verify", "thm1.2", "--zmax", "3"]);
    assert_eq!(v["suite"], "symmetric-generating-function");
    assert!(v["version"].is_string());
    for it in v["items"].as_array().unwrap() {
        assert!(it["id"].is_string() && it["params"].is_object());
        assert_eq!(it["status"], "pass");
    }
}

#[test]
fn mismatch_exits_one_with_first_failure() {
    let o = run(&["verify", "rees-boolean", "--nmax", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("first failure: rees-boolean ideal-literal-sign"), "{err}");
}

#[test]
fn caps_exit_three() {
    assert_eq!(run(&["table", "char", "--n", "12"]).status.code(), Some(3));
    assert_eq!(run(&["--perm-cap", "4", "table", "qeuler", "--n", "5"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .args(["verify", "aid-mahonian"])
        .env("QEULER_PERM_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("cap of 5"));
    assert_eq!(run(&["verify", "basis-round-trip", "--bound", "degree-max=13"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "aid-mahonian", "--bound", "zz=1"]).status.code(), Some(2));
    assert_eq!(run(&["stats", "3x1"]).status.code(), Some(2));
    assert_eq!(run(&["stats", "312", "--format", "csv"]).status.code(), Some(0));
    assert_eq!(run(&["biject", "phi", "1'2", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn stats_of_a_permutation() {
    let v = json(&["stats", "3167542"]);
    assert_eq!(v["des"], 4);
    assert_eq!(v["aid"], 6);
    assert_eq!(v["ai"], 2);
    assert_eq!(v["cycle_type"], serde_json::json!([6, 1]));
    let t = ok(&["stats", "(1,3)(2)"]);
    assert!(t.contains("permutation  321"), "{t}");
}

#[test]
fn phi_and_eta_are_inverse() {
    assert_eq!(ok(&["biject", "phi", "31'4"]).trim(), "413");
    assert_eq!(ok(&["biject", "eta", "413"]).trim(), "31'4");
    let v = json(&["biject", "eta", "413"]);
    assert_eq!(v["output"][1], serde_json::json!({"value": 1, "barred": true}));
}

#[test]
fn gessel_reutenauer_pair() {
    let r = ok(&["biject", "grphi", "45162387", "77755422"]);
    let r = r.trim();
    let back = ok(&["biject", "greta", r]);
    assert!(back.contains("permutation  45162387"), "{back}");
    assert!(back.contains("sequence     77755422"), "{back}");
    let v = json(&["biject", "greta", "(7'5'47)(7'5)(2'2)"]);
    assert_eq!(v["permutation"], serde_json::json!([4, 5, 1, 6, 2, 3, 8, 7]));
}

#[test]
fn factorizations() {
    assert_eq!(ok(&["biject", "lyndon", "7'5'47"]).trim(), "7'5'47");
    let f = ok(&["biject", "incfact", "2'2.7'5.7'5'47"]);
    assert_eq!(f.trim(), "2'2.7'5.7'5'47");
    let g = json(&["biject", "gamma", "7'5'47"]);
    assert!(g["omega"].is_array() && g["mark"].is_number());
}

#[test]
fn poset_commands() {
    let v = json(&["poset", "ideal", "boolean:3"]);
    let mus: Vec<i64> = v["rows"].as_array().unwrap().iter().map(|r| r["mu_hat"].as_i64().unwrap()).collect();
    // |μ| runs through the Eulerian numbers 1, 4, 1
    assert_eq!(mus.iter().map(|m| m.abs()).collect::<Vec<_>>(), [1, 4, 1]);
    let r = json(&["poset", "rees", "boolean:4", "chain:4", "--minus"]);
    assert_eq!(r["mu_hat"].as_i64().unwrap().abs(), 9);
    let m = json(&["poset", "mobius", "boolean:3"]);
    assert_eq!(m["mu"], -1);
    let x = json(&["poset", "mobius", "chain:3", "--from", "1", "--to", "2"]);
    assert_eq!(x["mu"], -1);
    // the face lattice of the octahedron with a top adjoined is Eulerian of rank 4
    let c = json(&["poset", "mobius", "cross:3"]);
    assert_eq!((c["quantity"].as_str(), c["mu"].as_i64()), (Some("mu(P+)"), Some(1)));
    assert_eq!(json(&["poset", "mobius", "cross:3", "--hat"])["mu"], 0);
    assert_eq!(ok(&["table", "whitney", "subspace:2,3"]).lines().count(), 5);
    assert_eq!(run(&["poset", "mobius", "tree:2"]).status.code(), Some(2));
}

#[test]
fn list_reaches_every_suite_once() {
    let v = json(&["verify", "--list"]);
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|s| s["id"].as_str().unwrap()).collect();
    assert!(ids.len() >= 40);
    for must in ["maj-exc-egf", "character-conjecture", "rees-boolean", "phi-bijection", "basis-round-trip"] {
        assert_eq!(ids.iter().filter(|&&i| i == must).count(), 1, "{must}");
    }
}

#[test]
fn output_is_deterministic() {
    let a = ok(&["table", "dims", "--n", "5", "--format", "json"]);
    let b = ok(&["table", "dims", "--n", "5", "--format", "json"]);
    assert_eq!(a, b);
    let q = ok(&["table", "qeuler", "--n", "3"]);
    assert!(q.contains("q + q^2"), "{q}");
}
