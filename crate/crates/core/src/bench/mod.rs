//! Hamiltonian evolution benchmarks over lattice families.

pub mod graph;
pub mod hamiltonian;
pub mod oracle;
pub mod runner;

pub use graph::{make_graph, Family, InteractionGraph};
pub use hamiltonian::{evolution_period, hamiltonian_circuit, DEFAULT_PERIOD_CAP};
pub use oracle::optimal_oracle;
pub use runner::{run_bench, run_instance, run_row, write_csv, BenchConfig, BenchRow, Instance, CSV_HEADER};
