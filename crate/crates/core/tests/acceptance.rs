//! Acceptance suite: one test per verification criterion, each printing its
//! pass/fail line with the measured runtime against the pinned limit. The
//! seed honors OCTOMOD_SEED; the sample counts are pinned here (1000 random
//! table triples, 100 elements per module type, 20 conjugations).

use octomod_core::selftest::{run_criterion, SelftestConfig, DEFAULT_SEED};

fn config() -> SelftestConfig {
    let seed = std::env::var("OCTOMOD_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    SelftestConfig {
        seed,
        samples: None,
    }
}

fn run(id: usize) {
    let res = run_criterion(id, &config());
    println!("{}", res.summary_line());
    assert!(res.passed, "{}", res.summary_line());
    assert!(
        res.within_limit(),
        "criterion {} exceeded its runtime limit: {}",
        id,
        res.summary_line()
    );
}

#[test]
fn criterion_01_octonion_table_validity() {
    run(1);
}

#[test]
fn criterion_02_clifford_relations() {
    run(2);
}

#[test]
fn criterion_03_algebra_dimension_128() {
    run(3);
}

#[test]
fn criterion_04_pseudoscalar_split() {
    run(4);
}

#[test]
fn criterion_05_length_closure_oracle_equivalence() {
    run(5);
}

#[test]
fn criterion_06_canonical_generators() {
    run(6);
}

#[test]
fn criterion_07_generated_submodule_bound() {
    run(7);
}

#[test]
fn criterion_08_canonicalization_round_trip() {
    run(8);
}

#[test]
fn criterion_09_bimodule_solver_results() {
    run(9);
}

#[test]
fn criterion_10_bimodule_lemma_suite() {
    run(10);
}
