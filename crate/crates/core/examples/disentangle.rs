//! Disentangle an anticommuting Pauli pair onto a single qubit.

use cliffopt::synth::{disentangler, standard_form};
use cliffopt::PauliOperator;

fn main() {
    let o: PauliOperator = "XYZIZX".parse().unwrap();
    let o2: PauliOperator = "-ZZXYIX".parse().unwrap();
    assert!(o.anticommutes(&o2));

    let part = standard_form(&o, &o2).unwrap();
    println!("classes A={:?} B={:?} C={:?} D={:?} E={:?}", part.a, part.b, part.c, part.d, part.e);

    let d = disentangler(&o, &o2).unwrap();
    println!("{} CX gates, deferred swap {:?}", d.cnot_cost, d.deferred_swap);
    println!("{o} -> {}", d.circuit.conjugate_pauli(&o).unwrap());
    println!("{o2} -> {}", d.circuit.conjugate_pauli(&o2).unwrap());
}
