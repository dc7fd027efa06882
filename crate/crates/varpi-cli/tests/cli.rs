//! CLI behavior: exit codes, text-mode output, and file-based input.

use std::io::Write;
use std::process::Command;

fn varpi(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_varpi")).args(args).output().expect("the binary runs")
}

#[test]
fn samuel_text_mode_prints_the_bare_rational() {
    let out = varpi(&["samuel", "--vars", "x,y", "--ideal", "(x^2,y^3)", "--f", "x*y^2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "7/6\n");
}

#[test]
fn seminorm_text_mode_prints_the_log_value() {
    let out = varpi(&["seminorm", "--vars", "x,y", "--omega", "x*y", "--f", "x^2*y^3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2^(-2)\n");
}

#[test]
fn malformed_input_exits_two_with_a_position() {
    let out = varpi(&["rees", "--vars", "x,y", "--ideal", "(x^2,"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("at byte"), "missing position in: {stderr}");
}

#[test]
fn unknown_subcommands_exit_two() {
    let out = varpi(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_closure_membership_is_an_answer_not_a_failure() {
    let out = varpi(&["closure", "--vars", "x,y", "--ideal", "(x)", "--f", "y", "--n", "1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "false\n");
}

#[test]
fn probe_witnesses_exit_one() {
    let out = varpi(&["valuative", "--oracle", "semigroup", "--gens", "2,3"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("t^3"), "missing witness in: {stdout}");
    let out = varpi(&["valuative", "--oracle", "dvr"]);
    assert!(out.status.success());
}

#[test]
fn verify_all_default_seed_passes() {
    let out = varpi(&["verify", "--suite", "all", "--seed", "7"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 7, "one line per suite: {stdout}");
    assert!(stdout.lines().all(|l| l.ends_with("pass")));
}

#[test]
fn unknown_suites_exit_two() {
    let out = varpi(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ideal_text_can_come_from_a_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "(x^2, y^3)").unwrap();
    let path = file.path().to_str().unwrap();
    let out = varpi(&["rees", "--vars", "x,y", "--file", path, "--json"]);
    assert!(out.status.success());
    let inline = varpi(&["rees", "--vars", "x,y", "--ideal", "(x^2,y^3)", "--json"]);
    assert_eq!(out.stdout, inline.stdout);
}

#[test]
fn extensions_can_come_from_a_json_file() {
    let spec = serde_json::json!({
        "basis": ["1", "y"],
        "table": [
            [["1", "0"], ["0", "1"]],
            [["0", "1"], ["x", "0"]]
        ],
        "one": ["1", "0"],
        "omega_exponent": 1,
        "domain": true,
        "integrally_closed": true
    });
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{spec}").unwrap();
    let path = file.path().to_str().unwrap();
    let out = varpi(&["ext", "--file", path, "--f", "0,1", "--json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let builtin = varpi(&["ext", "--builtin", "sqrt-x", "--f", "0,1", "--json"]);
    assert_eq!(out.stdout, builtin.stdout);
}

#[test]
fn cusp_spectral_refusal_is_reported_in_text_mode() {
    let out = varpi(&["ext", "--builtin", "cusp", "--f", "0,1"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("refused"), "missing refusal in: {stdout}");
}
