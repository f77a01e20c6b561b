use std::path::{Path, PathBuf};
use std::process::Command as Process;

use cotensor_cli::{
    exit_code, parse_input, render, run_command, Command, Format, SessionConfig, Status, FIXTURE_FILE_MAXDEG,
};
use cotensor_core::io::{self, Object};
use cotensor_core::{Error, Field};

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixtures_dir().join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn binary() -> Process {
    Process::new(env!("CARGO_BIN_EXE_cotensor"))
}

#[test]
fn shipped_files_are_canonical() {
    let expected = io::fixture_files(Field::gf(2), FIXTURE_FILE_MAXDEG).unwrap();
    for (name, text) in &expected {
        let on_disk = std::fs::read_to_string(fixtures_dir().join(name)).unwrap();
        assert_eq!(&on_disk, text, "{name} differs from the generated fixture");
        let loaded = parse_input(&fixture(name), &SessionConfig::default()).unwrap();
        assert!(loaded.report.passed(), "{name}: {}", loaded.report);
        assert_eq!(&io::to_canonical(&loaded.document), text, "{name} does not round-trip");
    }
}

#[test]
fn coalgebra_flags_from_file() {
    let loaded = parse_input(&fixture("f2.coalg"), &SessionConfig::default()).unwrap();
    let Object::Coalgebra(c) = &loaded.document.object else { panic!("expected a coalgebra") };
    let flags = c.flags();
    assert!(flags.coassociative && flags.cocommutative && flags.simply_connected);
}

#[test]
fn nonzero_square_fails_validation_at_degree_two() {
    let path =
        scratch("bad.cx", r#"{"kind": "complex", "field": 2, "dims": [1, 1, 1], "diff": {"1": [[1]], "2": [[1]]}}"#);
    let out = run_command(&Command::Validate { input: path.clone() }, &SessionConfig::default()).unwrap();
    assert_eq!(out.status, Status::Failed);
    assert_eq!(out.report.unwrap().first_failure().unwrap().degree, Some(2));
    let err = run_command(&Command::Homology { input: path.clone() }, &SessionConfig::default()).unwrap_err();
    assert_eq!(exit_code(&err), 1);
    assert_eq!(binary().args(["validate", &path]).output().unwrap().status.code(), Some(1));
}

#[test]
fn missing_coalgebra_is_a_resolution_error() {
    let path = scratch(
        "orphan.cm",
        r#"{"kind": "comodule", "field": 2, "coalgebra": "nowhere.coalg", "dims": [1], "diff": {}, "coaction": {}}"#,
    );
    let err = parse_input(&path, &SessionConfig::default()).unwrap_err();
    assert!(matches!(err, Error::Resolution(_)), "{err}");
    assert_eq!(exit_code(&err), 2);
    assert_eq!(binary().args(["validate", &path]).output().unwrap().status.code(), Some(2));
}

#[test]
fn malformed_json_reports_the_line() {
    let path = scratch("broken.cx", "{\n  \"kind\": \"complex\",\n  \"dims\": [1,\n}\n");
    let err = parse_input(&path, &SessionConfig::default()).unwrap_err();
    assert!(err.to_string().contains("line 4"), "{err}");
}

#[test]
fn cotor_of_the_point() {
    let cmd = Command::Cotor { left: fixture("triv-k.cm"), right: fixture("triv-k.cm"), q: 3 };
    let out = run_command(&cmd, &SessionConfig::default()).unwrap();
    assert_eq!(out.summary, vec!["CoTor^3: dim 1 at chain degree 6".to_string()]);
}

#[test]
fn postnikov_tower_verifies() {
    let cmd = Command::Postnikov { input: fixture("triv-k.cm"), stages: 5 };
    let config = SessionConfig { verify: true, ..SessionConfig::default() };
    let out = run_command(&cmd, &config).unwrap();
    assert_eq!(out.status, Status::Ok);
    assert!(out.report.as_ref().unwrap().passed());
    assert!(out.summary.last().unwrap().ends_with("fibrant"));
}

#[test]
fn validate_point_coalgebra() {
    let out = run_command(&Command::Validate { input: fixture("f1.coalg") }, &SessionConfig::default()).unwrap();
    assert_eq!(out.status, Status::Ok);
    let run = binary().args(["validate", &fixture("f1.coalg")]).output().unwrap();
    assert!(run.status.success());
    assert!(String::from_utf8_lossy(&run.stdout).contains("pass: 8 of 8"));
}

#[test]
fn too_many_stages_is_a_precondition_failure() {
    let run = binary().args(["postnikov", &fixture("triv-k.cm"), "--stages", "8"]).output().unwrap();
    assert_eq!(run.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&run.stderr).contains("stages"));
    let run = binary().args(["--maxdeg", "1", "homology", "f2"]).output().unwrap();
    assert_eq!(run.status.code(), Some(1));
}

#[test]
fn fixture_root_from_the_environment() {
    let run = binary()
        .current_dir(env!("CARGO_TARGET_TMPDIR"))
        .env("COTENSOR_FIXTURES", fixtures_dir())
        .args(["fibrant", "cofree-s1.cm"])
        .output()
        .unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "fibrant through degree 8\n");
}

#[test]
fn builtin_names_need_no_files() {
    let cmd = Command::Cotensor { left: "regular-f4".into(), right: "trunc2-f4".into() };
    let out = run_command(&cmd, &SessionConfig::default()).unwrap();
    assert_eq!(out.data["dims"], serde_json::json!([1, 0, 1, 0, 0, 0, 0, 0, 0]));
}

#[test]
fn field_override_changes_the_answer_space_not_the_dims() {
    let config = SessionConfig { field: Some(Field::gf(3)), ..SessionConfig::default() };
    let out = run_command(&Command::Homology { input: fixture("f3.coalg") }, &config).unwrap();
    assert_eq!(out.data["homology"], serde_json::json!([1, 0, 1, 0, 0, 0, 0, 0]));
}

#[test]
fn machine_output_is_stable() {
    let args = ["--format", "machine", "--verify", "emss", "--left", "regular", "--right", "triv-k"];
    let a = binary().args(args).output().unwrap();
    let b = binary().args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["outcome"]["status"], "ok");
    assert_eq!(v["outcome"]["data"]["total"], serde_json::json!([1, 0, 0, 0]));
}

#[test]
fn factorization_and_fibration_commands() {
    let config = SessionConfig { verify: true, format: Format::Machine, ..SessionConfig::default() };
    let out = run_command(&Command::Factorize { input: fixture("coaug.cmm"), stages: 5 }, &config).unwrap();
    assert_eq!(out.status, Status::Ok);
    assert!(render(&out, &config).contains("\"status\": \"ok\""));
    let out = run_command(&Command::Fibration { input: fixture("coaug.cmm") }, &config).unwrap();
    assert_eq!(out.data["verdict"], "inconclusive");
}

#[test]
fn split_and_ext() {
    let config = SessionConfig { verify: true, ..SessionConfig::default() };
    let out = run_command(&Command::Split { input: fixture("cofree-d1.cm") }, &config).unwrap();
    assert_eq!(out.status, Status::Ok);
    assert_eq!(out.data["spheres"], serde_json::json!([0, 0, 0, 0, 0, 0, 0, 0, 0]));
    let out = run_command(&Command::Ext { left: "triv-k".into(), right: "triv-k".into(), i: 1 }, &config).unwrap();
    assert_eq!(out.summary, vec!["Ext^1: dim 1 in internal degree 2".to_string()]);
}
