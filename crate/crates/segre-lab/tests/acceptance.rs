//! Acceptance gate: ten budgeted criteria, each a bundle of named
//! verification properties. Every criterion prints exactly one pass or fail
//! line; budgets cover the property runs only, with exact arithmetic
//! throughout.

use std::time::{Duration, Instant};

use segre_lab::verify::{run_named, DEFAULT_SEED};

fn criterion(number: usize, label: &str, budget: Duration, names: &[&str]) {
    let start = Instant::now();
    for name in names {
        if let Err(reason) = run_named(name, DEFAULT_SEED) {
            println!("criterion {number} ({label}): fail");
            panic!("property {name} failed: {reason}");
        }
    }
    let elapsed = start.elapsed();
    if elapsed > budget {
        println!("criterion {number} ({label}): fail");
        panic!("budget {budget:?} exceeded: took {elapsed:?}");
    }
    println!("criterion {number} ({label}): pass");
}

#[test]
fn criterion_01_square_root_expansions() {
    criterion(
        1,
        "square-root expansions",
        Duration::from_millis(1),
        &["sqrt-expansion"],
    );
}

#[test]
fn criterion_02_two_path_segre_equality() {
    criterion(
        2,
        "two-path Segre equality",
        Duration::from_secs(10),
        &["two-path-k3", "two-path-enriques"],
    );
}

#[test]
fn criterion_03_delta_zero_specialization() {
    criterion(
        3,
        "delta = 0 specialization",
        Duration::from_secs(1),
        &["delta0-specialization"],
    );
}

#[test]
fn criterion_04_k_equals_one_identities() {
    criterion(
        4,
        "k = 1 geometric identities",
        Duration::from_secs(1),
        &["k1-identities"],
    );
}

#[test]
fn criterion_05_positivity_lemma_window() {
    criterion(
        5,
        "positivity lemma window",
        Duration::from_secs(30),
        &["lemma-grid", "lemma-counterexamples"],
    );
}

#[test]
fn criterion_06_theorem_grids() {
    criterion(
        6,
        "theorem grids",
        Duration::from_secs(30),
        &[
            "grid-k3",
            "grid-abelian",
            "grid-enriques",
            "grid-blowup",
            "grid-general-type",
            "grid-curve",
            "grid-quot",
        ],
    );
}

#[test]
fn criterion_07_enriques_experiments() {
    criterion(
        7,
        "Enriques experiments",
        Duration::from_secs(30),
        &["enriques-experiments"],
    );
}

#[test]
fn criterion_08_cross_formula_consistency() {
    criterion(
        8,
        "cross-formula consistency",
        Duration::from_secs(10),
        &["cross-formula", "mnp-consistency"],
    );
}

#[test]
fn criterion_09_blowup_proof_internals() {
    criterion(
        9,
        "blowup proof internals",
        Duration::from_secs(1),
        &["blowup-lattice", "seshadri"],
    );
}

#[test]
fn criterion_10_engine_laws() {
    criterion(10, "engine laws", Duration::from_secs(10), &["engine-laws"]);
}
