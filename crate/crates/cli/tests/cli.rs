use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn quohal(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quohal"))
        .args(args)
        .env_remove("QUOHAL_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn emit_then_check_axioms_from_stdin() {
    let emitted = quohal(&["zoo", "emit", "fZ2w"], None);
    assert_eq!(emitted.status.code(), Some(0));
    let out = quohal(&["check-axioms", "-", "fZ2w"], Some(&emitted.stdout));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["checks"].as_array().unwrap().len(), 18);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn nz_on_coset_reports_rank_two() {
    let out = quohal(&["nz", "zoo:coset_Z4_Z2"], None);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["evidence"]["right_rank"], 2);
    assert_eq!(r["evidence"]["left_rank"], 2);
    assert_eq!(r["seed"], 0);
}

#[test]
fn unresolved_reference_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"field": {"prime": 13}, "embeddings": {"E": {"sub": "K", "ambient": "H", "incl": []}}}"#,
    )
    .unwrap();
    let out = quohal(&["nz", path.to_str().unwrap(), "E"], None);
    assert_eq!(out.status.code(), Some(3));
    assert!(report(&out)["error"].as_str().unwrap().contains("no quasi_hopf named 'K'"));
}

#[test]
fn malformed_file_exits_3_with_location() {
    let out = quohal(&["check-axioms", "-"], Some(b"{\"field\": {\"prime\": 13},\n  \"quasi_hopf\": 7}"));
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn corrupted_file_fails_with_witness() {
    let emitted = quohal(&["zoo", "emit", "fZ2w"], None);
    let mut file: Value = serde_json::from_slice(&emitted.stdout).unwrap();
    // β := α, which breaks the quasiantipode identities.
    let alpha = file["quasi_hopf"]["fZ2w"]["alpha"].clone();
    file["quasi_hopf"]["fZ2w"]["beta"] = alpha;
    let out = quohal(&["check-antipode", "-"], Some(file.to_string().as_bytes()));
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let failing: Vec<&Value> = r["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().any(|c| c.get("witness").is_some()));
}

#[test]
fn unsupported_oracle_exits_2() {
    let emitted = quohal(&["zoo", "emit", "kZ2", "--prime", "2"], None);
    let out = quohal(&["semisimple", "-"], Some(&emitted.stdout));
    assert_eq!(out.status.code(), Some(2));
    let r = report(&out);
    assert_eq!(r["evidence"]["semisimple"], false);
}

#[test]
fn non_faithful_module_exits_1() {
    let out = quohal(&["auxthm", "zoo:fZ2w", "fZ2w_regular", "fZ2w_trivial"], None);
    assert_eq!(out.status.code(), Some(1));
    let out = quohal(&["auxthm", "zoo:fZ2w", "fZ2w_regular", "fZ2w_regular"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["evidence"]["W_rank"], 1);
}

#[test]
fn reports_are_deterministic_per_seed() {
    let a = quohal(&["frobenius", "zoo:kS3", "--seed", "7"], None);
    let b = quohal(&["frobenius", "zoo:kS3", "--seed", "7"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(without_timing(report(&a)), without_timing(report(&b)));
    let env = Command::new(env!("CARGO_BIN_EXE_quohal"))
        .args(["frobenius", "zoo:kS3"])
        .env("QUOHAL_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(without_timing(report(&env)), {
        let mut v = without_timing(report(&a));
        v["command"] = serde_json::json!(["frobenius", "zoo:kS3"]);
        v
    });
}

#[test]
fn other_commands_succeed_on_the_zoo() {
    for args in [
        &["check-axioms", "zoo:coset_Z4_Z2"][..],
        &["integrals", "zoo:fZ4w"],
        &["hopf-free", "zoo:fZ2w_x_kZ2"],
        &["cotensor-iso", "zoo:fZ2w", "fZ2w_cofree", "fZ2w_regular"],
        &["check-axioms", "zoo:kS3", "kS3_cofree"],
    ] {
        let out = quohal(args, None);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let list = quohal(&["zoo", "list"], None);
    assert_eq!(String::from_utf8_lossy(&list.stdout).lines().count(), 7);
    assert_eq!(quohal(&["zoo", "emit", "nope"], None).status.code(), Some(3));
}
