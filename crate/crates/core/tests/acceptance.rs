//! Every verification criterion at its stated tolerance, one line each.

use std::io::Write;

use exturan::verify::{criterion, run};

fn gate(name: &str) {
    let c = criterion(name).expect("known criterion");
    let out = run(c);
    let mut block = format!("{}\n", out.line());
    for note in &out.notes {
        block.push_str(&format!("    {note}\n"));
    }
    for f in out.failures.iter().skip(1) {
        block.push_str(&format!("    also failed: {f}\n"));
    }
    // Straight to stdout so the line shows without --nocapture.
    std::io::stdout().lock().write_all(block.as_bytes()).unwrap();
    assert!(out.passed, "{}", out.line());
}

#[test]
fn turan_cliques() {
    gate("turan-cliques");
}

#[test]
fn eckhoff() {
    gate("eckhoff");
}

#[test]
fn turan_increment() {
    gate("turan-increment");
}

#[test]
fn f_value_oracle() {
    gate("f-value-oracle");
}

#[test]
fn balanced_optimal() {
    gate("balanced-optimal");
}

#[test]
fn boundary_shift() {
    gate("boundary-shift");
}

#[test]
fn unbalanced_gap() {
    gate("unbalanced-gap");
}

#[test]
fn curvature() {
    gate("curvature");
}

#[test]
fn shift_identity() {
    gate("shift-identity");
}

#[test]
fn convergence() {
    gate("convergence");
}

#[test]
fn decomposition_biex() {
    gate("decomposition-biex");
}

#[test]
fn construction() {
    gate("construction");
}
