//! Synthesize a random Clifford unitary three ways and compare CNOT counts.
//!
//! ```text
//! cargo run --release --example synthesize -- 8 42
//! ```

use cliffopt::random::random_clifford;
use cliffopt::synth::{ag_canonical, greedy_bidirectional, greedy_unidirectional};
use cliffopt::CliffordTableau;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);

    let target = random_clifford(n, seed);
    println!("random {n}-qubit Clifford, seed {seed}");

    let methods = [
        ("A-G canonical form", ag_canonical(&target)),
        ("greedy, one side", greedy_unidirectional(&target, None)),
        ("greedy, both sides", greedy_bidirectional(&target, None)),
    ];
    for (name, c) in &methods {
        let ok = CliffordTableau::from_circuit(c).unwrap() == target;
        println!("{name:>20}: {:4} two-qubit gates, {:4} total, exact: {ok}", c.two_qubit_count(), c.len());
    }
}
