//! Acceptance criteria. Each test prints one PASS/FAIL line.

use std::io::Write;
use std::sync::Mutex;

use bricklab::census::default_jobs;
use bricklab::selftest::{criteria, Options};

// run criteria one at a time so their timings do not interfere
static SERIAL: Mutex<()> = Mutex::new(());

fn check(id: usize) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let opts = Options { jobs: default_jobs() };
    let criterion = criteria(&opts).into_iter().find(|c| c.id == id).expect("known criterion");
    let outcome = criterion.run(&opts);
    // bypass the harness capture so the line always shows
    let _ = writeln!(std::io::stdout().lock(), "{outcome}");
    assert!(outcome.passed, "{outcome}");
}

#[test]
fn criterion_1_named_bricks() {
    check(1);
}

#[test]
fn criterion_2_family_edge_sets() {
    check(2);
}

#[test]
fn criterion_3_claw_free_census() {
    check(3);
}

#[test]
fn criterion_4_two_b_invariant_edges() {
    check(4);
}

#[test]
fn criterion_5_unique_matching_bridge() {
    check(5);
}

#[test]
fn criterion_6_order_invariance() {
    check(6);
}

#[test]
fn criterion_7_fixtures() {
    check(7);
}

#[test]
fn criterion_8_oracle_equivalence() {
    check(8);
}
