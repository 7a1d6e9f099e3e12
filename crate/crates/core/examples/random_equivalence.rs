//! Random Clifford circuits, their tableaus and an equivalence check after
//! re-synthesis.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cliffopt::random::{random_circuit, random_clifford_circuit};
use cliffopt::synth::greedy_bidirectional;
use cliffopt::{circuits_equivalent, CliffordTableau};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    let uniform = random_clifford_circuit(3, &mut rng);
    let t = CliffordTableau::from_circuit(&uniform).unwrap();
    println!("uniform 3-qubit Clifford ({} gates):", uniform.len());
    for (j, row) in t.rows().iter().enumerate() {
        let label = if j < 3 { format!("X{j}") } else { format!("Z{}", j - 3) };
        println!("  {label} -> {row}");
    }

    let c = random_circuit(5, 60, &mut rng);
    let again = greedy_bidirectional(&CliffordTableau::from_circuit(&c).unwrap(), None);
    println!("\nrandom circuit with {} two-qubit gates re-synthesized with {}",
        c.two_qubit_count(), again.two_qubit_count());
    println!("equivalent: {}", circuits_equivalent(&c, &again).unwrap());
}
