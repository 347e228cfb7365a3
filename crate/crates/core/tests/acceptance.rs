//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Scales follow the stated acceptance scale; run with `--nocapture` to see
//! the per-criterion lines even on success.

use biserial::verify::{self, VerifyScale};

fn run(report: verify::CriterionReport) {
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_1_hom_basis_matches_oracle() {
    run(verify::criterion_hom_basis(&VerifyScale::default()));
}

#[test]
fn criterion_2_end_is_k_predicate() {
    run(verify::criterion_end_is_k(&VerifyScale::default()));
}

#[test]
fn criterion_3_syzygy_identities() {
    run(verify::criterion_syzygy_identities());
}

#[test]
fn criterion_4_ext_table() {
    run(verify::criterion_ext_table());
}

#[test]
fn criterion_5_orbit_censuses() {
    run(verify::criterion_orbit_censuses());
}

#[test]
fn criterion_6_tube_census() {
    run(verify::criterion_tube_census());
}

#[test]
fn criterion_7_lift_chains() {
    run(verify::criterion_lift_chains());
}

#[test]
fn criterion_8_base_case_regression() {
    run(verify::criterion_lambda31(&VerifyScale::default()));
}

#[test]
fn criterion_9_classifier_coherence() {
    run(verify::criterion_coherence(&VerifyScale::default()));
}
