//! End-to-end checks of the binary: exit codes, determinism, and the
//! report format.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jorlie"))
}

fn write_temp(dir: &tempfile::TempDir, name: &str, content: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn validate_passes_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_temp(
        &dir,
        "inst.json",
        r#"{ "name": "rect(1,1)", "ring": "gf:5",
             "kind": "rectangular", "parameters": {"p": 1, "q": 1} }"#,
    );
    let out = run(&["validate", "--instance", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let body = String::from_utf8(out.stdout).unwrap();
    assert!(body.ends_with('\n'));
    let json: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(json["command"], "validate");
    assert_eq!(json["ring"], "gf:5");
}

#[test]
fn corrupted_instance_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_temp(
        &dir,
        "broken.json",
        r#"{ "name": "broken", "ring": "q", "kind": "tensor",
             "parameters": {"rank": 2},
             "structure_tensor": {
               "plus":  [[[["1","0"],["0","0"]],[["0","0"],["0","0"]]],
                         [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]],
               "minus": [[[["0","0"],["0","0"]],[["0","0"],["0","0"]]],
                         [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]]
             } }"#,
    );
    let out = run(&["validate", "--instance", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let body = String::from_utf8(out.stdout).unwrap();
    assert!(body.contains("witness"), "report must carry a witness:\n{body}");
}

#[test]
fn bad_ring_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_temp(
        &dir,
        "inst.json",
        r#"{ "name": "x", "ring": "gf:3",
             "kind": "rectangular", "parameters": {"p": 1, "q": 1} }"#,
    );
    let out = run(&["validate", "--instance", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_instance_exits_two() {
    let out = run(&["validate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deform_membership_census() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_temp(
        &dir,
        "inst.json",
        r#"{ "name": "rect(1,1)", "ring": "gf:7",
             "kind": "rectangular", "parameters": {"p": 1, "q": 1} }"#,
    );
    let def = write_temp(&dir, "def.json", r#"{ "kind": "element", "value": [["1"]] }"#);
    let out = run(&[
        "deform",
        "--instance",
        inst.to_str().unwrap(),
        "--deformation",
        def.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let checks = json["checks"].as_array().unwrap();
    let membership = checks
        .iter()
        .find(|c| c["name"] == "membership.count")
        .unwrap();
    assert_eq!(membership["details"][0], "6 of 7");
}

#[test]
fn reports_are_byte_identical_for_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_temp(
        &dir,
        "inst.json",
        r#"{ "name": "rect(1,1)", "ring": "q",
             "kind": "rectangular", "parameters": {"p": 1, "q": 1} }"#,
    );
    let def = write_temp(&dir, "def.json", r#"{ "kind": "element", "value": [["1"]] }"#);
    let args = [
        "deform",
        "--instance",
        inst.to_str().unwrap(),
        "--deformation",
        def.to_str().unwrap(),
        "--seed",
        "99",
        "--samples",
        "40",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    // a different seed samples differently
    let c = run(&[
        "deform",
        "--instance",
        inst.to_str().unwrap(),
        "--deformation",
        def.to_str().unwrap(),
        "--seed",
        "100",
        "--samples",
        "40",
    ]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_temp(
        &dir,
        "inst.json",
        r#"{ "name": "rect(1,1)", "ring": "gf:5",
             "kind": "rectangular", "parameters": {"p": 1, "q": 1} }"#,
    );
    let out_path = dir.path().join("report.json");
    let out = run(&[
        "validate",
        "--instance",
        inst.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&out_path).unwrap();
    assert_eq!(written, out.stdout);
}

#[test]
fn group_and_grassmann_and_geometry_commands() {
    let dir = tempfile::tempdir().unwrap();
    let group = write_temp(
        &dir,
        "group.json",
        r#"{ "ring": "gf:5", "n": 2, "deformation": [["1","0"],["0","0"]] }"#,
    );
    let out = run(&["group", "--instance", group.to_str().unwrap(), "--samples", "30"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let gr = write_temp(
        &dir,
        "gr.json",
        r#"{ "ring": "q", "p": 2, "q": 2,
             "b1": [["1","0"],["0","1"]], "b2": [["1","0"],["0","0"]] }"#,
    );
    let out = run(&["grassmann", "--instance", gr.to_str().unwrap(), "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let inst = write_temp(
        &dir,
        "scalar.json",
        r#"{ "name": "scalar", "ring": "f64",
             "kind": "rectangular", "parameters": {"p": 1, "q": 1} }"#,
    );
    let def = write_temp(&dir, "alpha.json", r#"{ "kind": "alpha", "value": [["1"]] }"#);
    let out = run(&[
        "geometry",
        "--instance",
        inst.to_str().unwrap(),
        "--deformation",
        def.to_str().unwrap(),
        "--samples",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
