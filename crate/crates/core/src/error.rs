use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("subset {0:?} is not contained in [{1}]")]
    BadSubset(Vec<usize>, usize),
    #[error("slot {0} out of range for arity {1}")]
    SlotOutOfRange(usize, usize),
    #[error("expected {expected} inner elements, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("arity {0} exceeds the window bound {1}")]
    WindowExceeded(usize, usize),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("non-integral multiplicity for {0}")]
    NonIntegralMultiplicity(String),
    #[error("zero vector")]
    ZeroVector,
    #[error("ideal has no certified truncation tail within the window")]
    MissingTail,
    #[error("{0} exceeds the cap {1}")]
    CapExceeded(String, u64),
    #[error("inadmissible sequence: {0}")]
    Inadmissible(String),
    #[error("no stabilization within capacity: {0}")]
    NoStabilization(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
