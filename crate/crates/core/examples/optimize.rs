//! Optimize a circuit given in the text format.

use std::time::Duration;

use cliffopt::pipeline::{optimize_circuit, OptimizeConfig};
use cliffopt::{circuits_equivalent, Circuit};

const INPUT: &str = "\
qubits 4
h 0
cx 0 1
cx 1 2
cx 0 1
s 2
cx 2 3
cx 1 2
cz 0 3
cx 2 3
swap 1 3
cx 0 1
h 3
cx 3 0
cx 0 1
";

fn main() {
    let c: Circuit = INPUT.parse().expect("valid circuit");
    let cfg = OptimizeConfig { time_limit: Some(Duration::from_secs(5)), ..Default::default() };
    let report = optimize_circuit(&c, &cfg).expect("valid config");

    println!("before: {} two-qubit gates", c.two_qubit_count());
    println!("after:  {} two-qubit gates ({} template rounds, {} peephole improvements)",
        report.best.two_qubit_count(), report.template_rounds, report.peephole.improvements);
    println!("equivalent: {}", circuits_equivalent(&c, &report.best).unwrap());
    print!("{}", report.best);
}
