//! End-to-end checks of the binary: exit codes, canonical output, and the
//! gen/check/compute/eval pipeline.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn qspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

fn tmp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("qspace-cli-tests");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

#[test]
fn check_exit_codes() {
    let valid = tmp(
        "valid.json",
        r#"{"type":"metric","quantale":{"kind":"extended_rational"},"carrier":["a","b"],"d":[["0","1"],["inf","0"]]}"#,
    );
    assert_eq!(qspace(&["check", valid.to_str().unwrap()]).status.code(), Some(0));

    // well-formed but violating the triangle axioms
    let violating = tmp(
        "violating.json",
        r#"{"type":"metric","quantale":{"kind":"chain","step":"1","levels":3},"carrier":["a","b","c"],"d":[["0","1","3"],["2","0","1"],["3","2","0"]]}"#,
    );
    assert_eq!(qspace(&["check", violating.to_str().unwrap()]).status.code(), Some(1));

    let malformed = tmp("malformed.json", "{\"type\":\"metric\"");
    assert_eq!(qspace(&["check", malformed.to_str().unwrap()]).status.code(), Some(2));

    let missing = qspace(&["check", "/no/such/file.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn generated_documents_validate_and_reserialize() {
    for kind in ["metric", "poset", "lattice", "action", "approach", "met-comp-haus", "weight"] {
        let out = qspace(&["gen", kind, "--size", "3", "--seed", "11"]);
        assert_eq!(out.status.code(), Some(0), "gen {kind}");
        let text = stdout(&out);
        let path = tmp(&format!("gen-{kind}.json"), &text);
        let checked = qspace(&["check", path.to_str().unwrap()]);
        assert_eq!(checked.status.code(), Some(0), "check of generated {kind}");
        // canonical: re-parsing and re-serializing is byte-identical
        let doc = qspace::doc::parse(&text).unwrap();
        assert_eq!(qspace::doc::to_canonical_string(&doc), text);
    }
}

#[test]
fn generation_is_deterministic_per_seed() {
    let a = stdout(&qspace(&["gen", "metric", "--size", "3", "--seed", "9"]));
    let b = stdout(&qspace(&["gen", "metric", "--size", "3", "--seed", "9"]));
    let c = stdout(&qspace(&["gen", "metric", "--size", "3", "--seed", "10"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn eval_matches_the_defining_equality() {
    // generate a space, take a yoneda weight, and compare the expression
    // for the supremum profile with the distance from the computed
    // supremum
    let space = stdout(&qspace(&["gen", "metric", "--size", "3", "--seed", "5"]));
    let space_path = tmp("eval-space.json", &space);
    let weight = stdout(&qspace(&[
        "compute", "yoneda", "b", "--input", space_path.to_str().unwrap(),
    ]));
    let weight_path = tmp("eval-weight.json", &weight);
    let sup = stdout(&qspace(&[
        "compute",
        "weighted-sup",
        "--input",
        space_path.to_str().unwrap(),
        "--input2",
        weight_path.to_str().unwrap(),
    ]));
    assert!(!sup.is_empty() && sup != "none");
    for x in ["a", "b", "c"] {
        let profile = stdout(&qspace(&[
            "eval",
            "sup y . d(y,x) - psi(y)",
            "--input",
            space_path.to_str().unwrap(),
            "--bind",
            &format!("x={x}"),
            "--weight",
            &format!("psi={}", weight_path.display()),
        ]));
        let direct = stdout(&qspace(&[
            "eval",
            &format!("d({sup},{x})"),
            "--input",
            space_path.to_str().unwrap(),
        ]));
        assert_eq!(profile, direct, "profile at {x}");
    }
}

#[test]
fn eval_rejects_bad_expressions() {
    let space = stdout(&qspace(&["gen", "metric", "--size", "2", "--seed", "1"]));
    let path = tmp("bad-eval.json", &space);
    let out = qspace(&["eval", "d(a,", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = qspace(&["eval", "d(a,ghost)", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_unknown_names() {
    let ok = qspace(&["verify", "quantale-chain-closure"]);
    assert_eq!(ok.status.code(), Some(0));
    let unknown = qspace(&["verify", "no-such-suite"]);
    assert_eq!(unknown.status.code(), Some(2));
    // the equivalence round-trip suite runs clean at the documented size
    let round = qspace(&["verify", "tensmet-roundtrip", "--size", "3", "--seed", "7"]);
    assert_eq!(round.status.code(), Some(0));
}

#[test]
fn verify_reports_json() {
    let out = qspace(&["verify", "ultra-em-discrete", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(j["suite"], "ultra-em-discrete");
    assert_eq!(j["passed"], true);
}

#[test]
fn compute_catalogue_and_errors() {
    let listed = stdout(&qspace(&["compute", "list"]));
    assert!(listed.contains("weighted-sup"));
    let out = qspace(&["compute", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // precondition violations exit 1: the closed formula on a
    // non-cocomplete space
    let space = r#"{"type":"metric","quantale":{"kind":"chain","step":"1","levels":3},"carrier":["a","b"],"d":[["0","3"],["3","0"]]}"#;
    let path = tmp("discrete.json", space);
    let weight = stdout(&qspace(&["compute", "yoneda", "a", "--input", path.to_str().unwrap()]));
    let wpath = tmp("discrete-w.json", &weight);
    let out = qspace(&[
        "compute",
        "sup-by-formula",
        "--input",
        path.to_str().unwrap(),
        "--input2",
        wpath.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn translation_pipeline_through_the_cli() {
    // lattice action -> approach space -> back, checking classifiers along
    // the way
    let action = stdout(&qspace(&["gen", "action", "--size", "3", "--seed", "21"]));
    let apath = tmp("pipeline-action.json", &action);
    let app = stdout(&qspace(&["compute", "lattice-action-to-app", "--input", apath.to_str().unwrap()]));
    let ppath = tmp("pipeline-app.json", &app);
    let abs = stdout(&qspace(&["compute", "is-absolutely-cocomplete", "--input", ppath.to_str().unwrap()]));
    assert_eq!(abs, "true");
    let back = stdout(&qspace(&["compute", "app-to-lattice-action", "--input", ppath.to_str().unwrap()]));
    assert_eq!(back, action);
}
