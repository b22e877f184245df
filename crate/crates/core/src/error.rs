use thiserror::Error;

/// Errors raised while constructing or composing structures.
///
/// Axiom failures are never errors: they are report entries.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error("no solution: column {column} of the target lies outside the image")]
    NoSolution { column: usize },

    #[error("preimage is not unique: the map has a kernel of dimension {kernel_dim}")]
    Ambiguous { kernel_dim: usize },

    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),

    #[error("degree {degree:?} exceeds truncation bound {bound}")]
    OutOfBound { degree: Vec<usize>, bound: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("transcription ambiguity at step {step}: expected legs {expected}, found {found}")]
    Transcription {
        step: usize,
        expected: String,
        found: String,
    },

    #[error("braiding is not symmetric on {0}")]
    NonSymmetric(String),

    #[error("RL-condition violated: {0}")]
    RlConditionViolation(String),

    #[error("invalid quasitriangular structure: {0}")]
    InvalidQuasitriangular(String),

    #[error("characteristic {characteristic} too small for truncation {bound}")]
    Characteristic { characteristic: u64, bound: usize },

    #[error("missing antipode inverse for {0}")]
    MissingAntipodeInverse(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("semantic error in {field}: {message}")]
    Semantic { field: String, message: String },

    #[error("unknown example {name:?}; available: {available}")]
    UnknownExample { name: String, available: String },

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
