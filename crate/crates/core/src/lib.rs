//! Clifford circuit synthesis and two-qubit gate count optimization.

pub mod bench;
pub mod circuit;
pub mod error;
pub mod gate;
mod local;
pub mod pauli;
pub mod peephole;
pub mod pipeline;
pub mod random;
pub mod synth;
pub mod tableau;
pub mod templates;

pub use circuit::Circuit;
pub use error::{Error, Result};
pub use gate::Gate;
pub use pauli::{Pauli1, PauliOperator};
pub use tableau::{circuit_to_tableau, circuits_equivalent, tableaus_equal, CliffordTableau};
