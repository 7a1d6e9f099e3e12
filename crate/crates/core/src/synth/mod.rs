//! Greedy synthesis of Clifford unitaries from tableaus.

pub mod ag;
pub mod disentangle;
pub mod greedy;

pub use ag::ag_canonical;
pub use disentangle::{disentangle_cost, disentangler, disentangler_onto, standard_form, DisentangleResult, StandardFormPartition};
pub use greedy::{greedy_bidirectional, greedy_bidirectional_raw, greedy_unidirectional};
