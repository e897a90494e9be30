use thiserror::Error;

/// Errors raised by model construction and the decision procedures.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CredalError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cardinality clash for variable `{name}`: {left} vs {right}")]
    CardinalityClash {
        name: String,
        left: usize,
        right: usize,
    },

    #[error("unknown variable `{name}`")]
    UnknownVariable { name: String },

    #[error("duplicate variable `{name}`")]
    DuplicateVariable { name: String },

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("not a partition of the space: {0}")]
    NotAPartition(String),

    #[error("unbounded region")]
    UnboundedRegion,

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("vertex {index} is not normalized (mass {mass})")]
    NotNormalized { index: usize, mass: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, CredalError>;
