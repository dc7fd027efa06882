//! End-to-end acceptance: the seeded verification suites at their default
//! bounds, the frozen probe verdicts, and byte-stable CLI reports.  Every
//! check is exact; the time budgets are generous wall-clock ceilings.

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use varpi::ring_class::{
    rank_one_probe, valuative_probe, BiMonomial, BivariateLocalOracle, DvrOracle, ProbeOutcome,
    SemigroupOracle, TPower,
};
use varpi::star::wass_t_ideal_check;
use varpi::verify::{omega_corpus, run_suite, VerifyConfig};

/// Runs one verification suite at the default bounds and asserts a clean
/// pass, optionally under a wall-clock budget.
fn assert_suite(name: &str, budget: Option<Duration>) {
    let config = VerifyConfig::default();
    let start = Instant::now();
    let reports = run_suite(name, &config).expect("the suite must run to completion");
    let elapsed = start.elapsed();
    for report in &reports {
        assert!(
            report.passed(),
            "suite {} found witnesses: {:?}",
            report.suite,
            report.witnesses
        );
        assert!(report.checks > 0, "suite {} performed no checks", report.suite);
    }
    if let Some(limit) = budget {
        assert!(elapsed < limit, "suite {name} took {elapsed:?}, budget {limit:?}");
    }
}

#[test]
fn samuel_closure_equivalence_on_the_seeded_corpus() {
    assert_suite("samuel-closure", Some(Duration::from_secs(30)));
}

#[test]
fn bruteforce_brackets_close_within_sixty_powers() {
    assert_suite("samuel-closure", Some(Duration::from_secs(60)));
}

#[test]
fn shilov_boundary_equals_rees_valuations_across_routes() {
    assert_suite("shilov-cross-route", Some(Duration::from_secs(10)));
}

#[test]
fn rees_valuations_form_a_minimal_boundary() {
    assert_suite("boundary", Some(Duration::from_secs(30)));
}

#[test]
fn gauge_agrees_with_the_spectral_route_and_scales() {
    assert_suite("gauge", None);
}

#[test]
fn v_closure_axioms_hold_and_registered_operations_are_finer() {
    assert_suite("star", None);
}

#[test]
fn divisor_group_laws_hold() {
    assert_suite("divisor-group", None);
}

#[test]
fn weakly_associated_primes_are_t_ideals() {
    for data in omega_corpus(7, 20, 3, 4) {
        let verdict = wass_t_ideal_check(&data).expect("localization succeeds");
        assert!(verdict.passed(), "failed for omega exponent {:?}", data.omega.entries);
    }
}

#[test]
fn valuative_probes_return_the_frozen_verdicts() {
    assert!(valuative_probe(&DvrOracle, 20).is_valuative());
    assert!(rank_one_probe(&DvrOracle, 20));
    assert_eq!(
        valuative_probe(&BivariateLocalOracle, 20),
        ProbeOutcome::Witness { f: BiMonomial { i: 0, j: 1 }, n: 1 }
    );
    let semigroup = SemigroupOracle::new(&[2, 3]).expect("nonempty generators");
    assert_eq!(
        valuative_probe(&semigroup, 20),
        ProbeOutcome::Witness { f: TPower(3), n: 1 }
    );
}

#[test]
fn extension_formulas_brackets_and_isometry() {
    assert_suite("extensions", None);
}

/// Runs one CLI fixture three times (twice plain, once under a pinned
/// thread-count environment) and compares every byte of stdout against the
/// checked-in golden file.
fn assert_fixture(args: &[&str], golden: &str) {
    let exe = env!("CARGO_BIN_EXE_varpi");
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(golden);
    let expected = fs::read(&path).expect("golden file exists");
    let mut runs = Vec::new();
    for threads in [None, Some("1"), Some("4")] {
        let mut command = Command::new(exe);
        command.args(args);
        if let Some(t) = threads {
            command.env("RAYON_NUM_THREADS", t);
        }
        let output = command.output().expect("the binary runs");
        assert!(
            output.status.success(),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&output.stderr)
        );
        assert_eq!(
            output.stdout, expected,
            "fixture {golden} diverged from the golden bytes"
        );
        runs.push(output.stdout);
    }
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn cli_reports_are_byte_stable() {
    assert_fixture(&["rees", "--vars", "x,y", "--ideal", "(x^2,y^3)", "--json"], "rees.json");
    assert_fixture(
        &["samuel", "--vars", "x,y", "--ideal", "(x^2,y^3)", "--f", "x*y^2", "--json"],
        "samuel.json",
    );
    assert_fixture(&["classify", "--vars", "x,y", "--omega", "x*y^2", "--json"], "classify.json");
    assert_fixture(&["ext", "--builtin", "sqrt-x", "--f", "0,1", "--json"], "ext.json");
    assert_fixture(
        &["verify", "--suite", "divisor-group", "--seed", "7", "--corpus", "10", "--json"],
        "verify.json",
    );
}
