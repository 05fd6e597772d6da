use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// An exact computation that must be integral came out otherwise.
    /// This can only happen through a bug in the character engine.
    #[error("internal error: expected a nonnegative integer, got {0}")]
    InternalNonInteger(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("no closed form available: {0}")]
    ClosedFormUnavailable(String),

    #[error("degree {degree} exceeds the oracle cap of {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
