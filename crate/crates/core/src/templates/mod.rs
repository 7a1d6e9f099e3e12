//! Template rewriting over the compute stage of a circuit.

pub mod library;
pub mod matching;
pub mod partition;
pub mod push;
pub mod single;
pub mod swaps;

pub use matching::{match_and_apply, reduce_single_qubit, Metric, RuleSet};
pub use library::{builtin_templates, Template};
pub use push::{push_singles, PushDirection};
pub use partition::{partition_stages, permutation_swaps, to_cz_form, StagePartition};
pub use swaps::merge_swaps;
pub use single::{collapse_runs, minimal_single_qubit_word};
