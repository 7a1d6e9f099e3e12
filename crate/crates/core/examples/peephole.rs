//! One peephole step by hand: project onto a qubit pair, solve the DP over
//! the cost table and lift the result back into the circuit.

use cliffopt::peephole::{dp_optimize, lift, project_onto_subset, shared_table};
use cliffopt::{circuits_equivalent, Circuit};

fn main() {
    let c: Circuit = "qubits 3\ncx 0 1\ncx 2 0\ncx 0 1\nh 1\ncx 1 0\ncz 2 1\ncx 1 0\ncx 0 1\n".parse().unwrap();
    let table = shared_table(2).unwrap();
    println!("arity-2 table: {} elements in {} cosets, max cost {}", table.len(), table.reps().len(), table.max_cost());

    let s = project_onto_subset(&c, &[0, 1]).unwrap();
    println!("subset [0, 1]: {} gates absorbed ({} two-qubit), {} coupling groups",
        s.absorbed.len(), s.absorbed_cost, s.num_groups());

    let sol = dp_optimize(&s, table).unwrap();
    let out = lift(&c, &s, &sol, table).unwrap();
    println!("DP cost {}: circuit {} -> {} two-qubit gates", sol.cost, c.two_qubit_count(), out.two_qubit_count());
    assert!(circuits_equivalent(&c, &out).unwrap());
    print!("{out}");
}
