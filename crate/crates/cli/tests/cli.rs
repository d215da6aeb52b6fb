use std::process::{Command, Output};

fn cubics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubics")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn multiplicities() {
    for (args, want) in [
        (["D0", "-1", "-5"], "1"),
        (["P", "3", "-3"], "1"),
        (["S", "1", "0"], "0"),
        (["Q0delta", "-2", "-4"], "1"),
        (["F-1", "-7", "-7"], "1"),
    ] {
        let out = cubics(&[&["mult"], &args[..]].concat());
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), want, "{args:?}");
    }
}

#[test]
fn parse_errors_exit_two() {
    for args in [&["mult", "X9", "0", "0"][..], &["mult", "S", "a", "0"], &["table", "S", "--lo", "0"], &["verify", "--suite", "nope"]] {
        let out = cubics(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(cubics(&["rep", "decompose", "/no/such/file.json"]).status.code(), Some(2));
}

#[test]
fn table_json_is_sorted_and_stable() {
    let args = ["--format", "json", "table", "Sdelta", "--lo", "-4", "--hi", "4"];
    let (a, b) = (cubics(&args), cubics(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let weights: Vec<(i64, i64)> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["weight"][0].as_i64().unwrap(), e["weight"][1].as_i64().unwrap()))
        .collect();
    let mut sorted = weights.clone();
    sorted.sort();
    assert_eq!(weights, sorted);
    assert!(weights.contains(&(3, -3)));
}

#[test]
fn quiver_queries() {
    assert_eq!(stdout(&cubics(&["quiver", "ext1", "paper_full", "d1", "g1"])), "1");
    assert_eq!(stdout(&cubics(&["quiver", "ext1", "paper_full", "e", "s"])), "0");
    assert_eq!(stdout(&cubics(&["quiver", "injective", "paper_full", "q0"])), "d0:1 p:1 q0:1");
    assert_eq!(stdout(&cubics(&["quiver", "paths", "paper_full", "--from", "e", "--to", "s"])), "e s alpha3*beta1");
    let export = cubics(&["quiver", "export", "big_component"]);
    let v: serde_json::Value = serde_json::from_slice(&export.stdout).unwrap();
    assert_eq!(v["quiver"]["relations"].as_array().unwrap().len(), 16);
}

#[test]
fn decompose_files() {
    let out = cubics(&["rep", "decompose", &data("pencil_sum.json")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(1,1)  indecomposable\n(1,1)  indecomposable");
    let out = cubics(&["rep", "decompose", &data("r2.json")]);
    assert_eq!(stdout(&out), "(1,1,1,1,2)  indecomposable");
}

#[test]
fn verify_exit_codes() {
    let out = cubics(&["verify", "--suite", "characters"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    // The stated projective-injective pairs do not hold under the stated relations.
    let out = cubics(&["--format", "json", "verify", "--suite", "quiver"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["criterion 6: projective-injective identifications as stated"]);
}
