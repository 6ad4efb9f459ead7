//! End-to-end runs of the `hnr` binary against fixture configs.

use std::io::Read;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!(
        "{}/tests/fixtures/{name}",
        env!("CARGO_MANIFEST_DIR")
    )
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hnr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn trace_of_squared_braid_generator_prints_one() {
    let out = run(&["trace", "--config", &fixture("p22.json"), "--expr", "g1*g1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "\"1\"");
}

#[test]
fn trace_accepts_rational_results() {
    let out = run(&["trace", "--config", &fixture("p22_u25.json"), "--expr", "t1"]);
    assert_eq!(code(&out), 0);
    // tau(t_1) = gamma_1 u_1 + gamma_2 u_2 with gamma = (5/3, -2/3).
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "\"0\"");
    let out = run(&["trace", "--config", &fixture("p22_u25.json"), "--expr", "t1^3"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "\"-70\"");
}

#[test]
fn mult_straightens_idempotents_past_braid_generators() {
    let out = run(&[
        "mult",
        "--config",
        &fixture("p22.json"),
        "--expr",
        "g1*b[1,2]",
    ]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["text"], "b[2,1]*g1");
    let entries = value["coordinates"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["head"], serde_json::json!([2, 1]));
    assert_eq!(entries[0]["w"], serde_json::json!([2, 1]));
    assert_eq!(entries[0]["value"], "1");
}

#[test]
fn convert_reduces_spectral_powers_in_the_monomial_basis() {
    let out = run(&[
        "convert",
        "--config",
        &fixture("p22_u25.json"),
        "--expr",
        "t1^2",
        "--basis",
        "tg",
    ]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["basis"], "tg");
    let entries = value["entries"].as_array().unwrap();
    // t1^2 = sigma_1 t1 - sigma_2 = 7 t1 - 10 at u = (2, 5).
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["head"], serde_json::json!([0, 0]));
    assert_eq!(entries[0]["value"], "-10");
    assert_eq!(entries[1]["head"], serde_json::json!([1, 0]));
    assert_eq!(entries[1]["value"], "7");
}

#[test]
fn verify_all_suites_passes() {
    let out = run(&[
        "verify",
        "--config",
        &fixture("p22.json"),
        "--suite",
        "all",
    ]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["pass"], true);
    let reports = value["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 4);
    let table = String::from_utf8_lossy(&out.stderr);
    assert!(table.contains("definition/braid-quadratic"));
    assert!(table.contains("pass  suite derived-identities"));
}

#[test]
fn verify_trials_flag_appends_a_fuzz_report() {
    let out = run(&[
        "verify",
        "--config",
        &fixture("p22.json"),
        "--suite",
        "lemmas",
        "--trials",
        "2",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    let reports = value["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[1]["suite"], "multi-parameter-fuzz");
    assert_eq!(reports[1]["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn gram_reports_the_identity_matrix() {
    let out = run(&["gram", "--config", &fixture("p22.json")]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["is_identity"], true);
    assert_eq!(value["dimension"], 8);
}

#[test]
fn gram_refuses_a_degenerate_trace_form() {
    let out = run(&["gram", "--config", &fixture("p22_zero_u.json")]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not symmetrizing"));
}

#[test]
fn gram_respects_the_size_guard() {
    let out = run(&["gram", "--config", &fixture("p43.json")]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("size guard"));
}

#[test]
fn fixed_basis_counts_orbit_words() {
    let out = run(&["fixed-basis", "--config", &fixture("p32.json")]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["dimension"], 24);
    assert_eq!(value["labels"].as_array().unwrap().len(), 24);
    assert_eq!(value["generation"]["generated"], true);
    assert_eq!(value["generation"]["rank"], 24);
}

#[test]
fn orbits_lists_canonical_representatives() {
    let out = run(&["orbits", "--config", &fixture("p32.json")]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["count"], 4);
    let orbits = value["orbits"].as_array().unwrap();
    assert_eq!(orbits[0]["representative"], serde_json::json!([1, 1, 1]));
    assert_eq!(
        orbits[0]["members"],
        serde_json::json!([[1, 1, 1], [2, 2, 2]])
    );
}

#[test]
fn isomap_produces_verified_generator_images() {
    let out = run(&[
        "isomap",
        "--config",
        &fixture("p22.json"),
        "--target",
        &fixture("p22_u25.json"),
    ]);
    assert_eq!(code(&out), 0);
    let value = stdout_json(&out);
    assert_eq!(value["coefficients"], serde_json::json!(["7/2", "-3/2"]));
    assert_eq!(value["verification"]["pass"], true);
    assert_eq!(value["verification"]["suite"], "definition-images");
}

#[test]
fn isomap_rejects_a_mismatched_target() {
    let out = run(&[
        "isomap",
        "--config",
        &fixture("p22.json"),
        "--target",
        &fixture("p32.json"),
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("context"));
}

#[test]
fn expression_errors_exit_with_usage_code() {
    let out = run(&["trace", "--config", &fixture("p22.json"), "--expr", "t1 +"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("syntax error at byte 4"));

    let out = run(&["mult", "--config", &fixture("p22.json"), "--expr", "t9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("index out of range"));
}

#[test]
fn config_errors_exit_with_usage_code() {
    let out = run(&["gram", "--config", &fixture("bad_q.json")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("q must be nonzero"));

    let out = run(&["gram", "--config", &fixture("missing.json")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read"));
}

#[test]
fn missing_arguments_exit_with_usage_code() {
    let out = run(&["verify"]);
    assert_eq!(code(&out), 2);
    let out = run(&[]);
    assert_eq!(code(&out), 2);
    let out = run(&["convert", "--config", &fixture("p22.json"), "--expr", "t1", "--basis", "zz"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn out_flag_redirects_the_payload() {
    let path: PathBuf = std::env::temp_dir().join(format!("hnr-cli-out-{}.json", std::process::id()));
    let out = run(&[
        "trace",
        "--config",
        &fixture("p22.json"),
        "--expr",
        "g1*g1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "\"1\"\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn closing_the_output_pipe_early_is_not_an_error() {
    // The payload here is larger than a pipe buffer, so dropping our read end
    // after a few bytes forces the binary to see a broken pipe mid-write.
    let mut child = Command::new(env!("CARGO_BIN_EXE_hnr"))
        .args([
            "mult",
            "--config",
            &fixture("p42.json"),
            "--basis",
            "tT",
            "--expr",
            "((1+2/3*t1)*(1+2/3*t2)*(1+2/3*t3)*(1+2/3*t4)*(1+g1)*(1+g2)*(1+g3))^2",
        ])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut head = [0u8; 16];
    child
        .stdout
        .take()
        .expect("stdout piped")
        .read_exact(&mut head)
        .expect("payload starts");
    assert_eq!(head[0], b'{');
    let out = child.wait_with_output().expect("binary exits");
    assert_eq!(code(&out), 0);
    assert!(
        out.stderr.is_empty(),
        "unexpected stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}
