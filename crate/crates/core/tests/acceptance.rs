//! Acceptance gate: every criterion as one test, printing one pass/fail
//! line per check. All arithmetic is exact — the tolerance everywhere is
//! zero. Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use spinstack_core::verify::{paper_suite, property_suite, Check};
use std::sync::OnceLock;

fn paper_checks() -> &'static [Check] {
    static CHECKS: OnceLock<Vec<Check>> = OnceLock::new();
    CHECKS.get_or_init(paper_suite)
}

fn report(check: &Check) {
    println!(
        "{} {} — {}",
        if check.passed { "pass" } else { "FAIL" },
        check.name,
        check.detail
    );
}

fn assert_criterion(name: &str) {
    let check = paper_checks()
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("missing check {name}"));
    report(check);
    assert!(check.passed, "{}: {}", check.name, check.detail);
}

#[test]
fn criterion1_shift_orbit_trichotomy() {
    assert_criterion("criterion1.shift-orbit-trichotomy");
}

#[test]
fn criterion2_exact_shift_identities() {
    assert_criterion("criterion2.exact-shift-identities");
}

#[test]
fn criterion3_condensation_lemma() {
    assert_criterion("criterion3.condensation-lemma");
}

#[test]
fn criterion4_solver_vs_reported_numbers() {
    assert_criterion("criterion4.solver-vs-reported-numbers");
}

#[test]
fn criterion5_period_vs_consistency_equivalence() {
    assert_criterion("criterion5.period-vs-consistency-equivalence");
}

#[test]
fn criterion6_ring_spot_checks() {
    assert_criterion("criterion6.cohomology-ring-spot-checks");
}

#[test]
fn criterion7_property_suites() {
    let checks = property_suite(0xACCE97);
    for check in &checks {
        report(check);
    }
    for check in &checks {
        assert!(check.passed, "{}: {}", check.name, check.detail);
    }
}

#[test]
fn criterion8_scope_note() {
    assert_criterion("criterion8.scope-note");
}
