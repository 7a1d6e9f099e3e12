//! Peephole optimization over two- and three-qubit subsets with symbolic
//! Pauli gates standing in for CX gates that leave the subset.

pub mod cache;
pub mod cost_table;
pub mod dp;
pub mod lift;
pub mod pass;
pub mod symbolic;
pub mod symplectic;

pub use cache::{load_table, save_table, set_cache_dir, shared_table, CACHE_ENV};
pub use cost_table::CostTable;
pub use dp::{dp_optimize, DpSolution};
pub use lift::lift;
pub use pass::{optimize_subset, peephole_pass, peephole_pass_with_stats, PeepholeStats};
pub use symbolic::{project_onto_subset, ControlBasis, SpgGroup, SymbolicCircuit};
