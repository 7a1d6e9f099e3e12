use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },
    #[error("two-qubit gate on repeated qubit {0}")]
    RepeatedQubit(usize),
    #[error("qubit count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("pauli operators commute; an anticommuting pair is required")]
    CommutingPair,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("unsupported size {n} for graph family {family}")]
    InadmissibleGraph { family: String, n: usize },
    #[error("number of layers must be at least 1")]
    ZeroLayers,
    #[error("period exceeds cap of {0} layers")]
    PeriodCapExceeded(u64),
    #[error("optimality oracle supports at most 3 qubits, got {0}")]
    OracleTooLarge(usize),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("template {0} does not multiply to the identity")]
    InvalidTemplate(String),
    #[error("inconsistent peephole solution: {0}")]
    InconsistentSolution(String),
    #[error("gate '{0}' crosses the subset boundary and has no symbolic form")]
    BoundaryCrossing(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("cost table cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
