//! Stage partition, template rewriting and SWAP merging on a small circuit.

use cliffopt::templates::{builtin_templates, merge_swaps, partition_stages, to_cz_form, Metric, RuleSet};
use cliffopt::{circuits_equivalent, Circuit, Gate};

fn main() {
    for t in builtin_templates() {
        println!("template {}: {} gates on {} wires", t.id, t.len(), t.wires);
    }

    let c: Circuit = "qubits 3\nx 0\ncx 0 1\nh 1\ncx 1 0\nswap 0 2\nz 1\ncx 0 2\ncx 2 0\nh 2\n".parse().unwrap();
    let p = partition_stages(&c);
    println!("\ncompute stage ({} gates), permutation {:?}, pauli {}", p.compute.len(), p.permutation, p.pauli);

    let cz = to_cz_form(&p.compute);
    let rewritten = RuleSet::builtin(Metric::TwoQubit).apply(&cz);
    // SWAPs left by the rules are free here; the next partition folds them
    // into the permutation.
    let entangling = |c: &Circuit| c.gates().iter().filter(|g| matches!(g, Gate::CX(..) | Gate::CZ(..))).count();
    println!("CZ form: {} entangling gates, after templates: {}", entangling(&cz), entangling(&rewritten));

    let mut merged = merge_swaps(&p);
    merged.extend(&Circuit::from_gates(3, p.pauli.to_gates()).unwrap()).unwrap();
    println!("SWAPs merged into the compute stage: {} -> {} two-qubit gates", c.two_qubit_count(), merged.two_qubit_count());
    assert!(circuits_equivalent(&c, &merged).unwrap());
}
