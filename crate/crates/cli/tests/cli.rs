use std::fs;
use std::process::{Command, Output};

fn yangian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian"))
        .args(args)
        .output()
        .expect("spawn yangian")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const SU2_SCENARIO: &str = r#"{"system":"su2","params":{"mu":1,"nu":-0.25,"lambda":1},
    "state":{"alpha":0.6,"beta":0.8},"transition":{}}"#;

#[test]
fn reduce_constrained_exits_zero() {
    let o = yangian(&[
        "reduce",
        "--params",
        r#"{"mu":0,"nu":1,"lambda":1}"#,
        "--constrained",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("I8 middle block: I8"));
    let o = yangian(&[
        "reduce",
        "--system",
        "su2",
        "--params",
        r#"{"mu":0,"nu":1,"lambda":1}"#,
        "--constrained",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn singular_locus_exits_two() {
    let o = yangian(&[
        "reduce",
        "--params",
        r#"{"mu":0,"nu":1,"lambda":2}"#,
        "--constrained",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nu = ±lambda/2"));
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(
        yangian(&["verify", "--params", r#"{"mu":1}"#])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(yangian(&["verify", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(yangian(&["entangle"]).status.code(), Some(2));
    assert_eq!(
        yangian(&["entangle", "--scenario", "/nonexistent/scenario.json"])
            .status
            .code(),
        Some(2)
    );
    let bad_state = SU2_SCENARIO.replace("0.8", "0.9");
    assert_eq!(
        yangian(&["entangle", "--scenario", &bad_state])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn failing_identity_exits_one() {
    // The sum-of-squares identities are among the checks that do not hold.
    let o = yangian(&["verify"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn entangle_su2_json() {
    let o = yangian(&["--json", "entangle", "--scenario", SU2_SCENARIO]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["system"], "su2");
    assert!((v["initial_measure"].as_f64().unwrap() - 0.28).abs() < 1e-12);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = yangian(&["verify", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert!(matches!(o.status.code(), Some(0 | 1)));
    }
    let (a, b) = (fs::read(a).unwrap(), fs::read(b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert!(v.get("wall_time").is_none());
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    let out = dir.path().join("out.json");
    fs::write(
        &cfg,
        format!(
            r#"{{"command":"reduce","params":{{"mu":0,"nu":1,"lambda":1}},"constrained":true,"system":"su2","output_path":{:?}}}"#,
            out.to_str().unwrap()
        ),
    )
    .unwrap();
    let o = yangian(&["--config", cfg.to_str().unwrap(), "reduce"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["report"]["suite"], "reduce-su2");

    let o = yangian(&[
        "--config",
        cfg.to_str().unwrap(),
        "reduce",
        "--system",
        "su3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["report"]["suite"], "reduce-su3");

    assert_eq!(
        yangian(&["--config", cfg.to_str().unwrap(), "verify"])
            .status
            .code(),
        Some(2)
    );
}
