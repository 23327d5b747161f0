use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("column {0} is not in the span of the basis")]
    NotInSpan(usize),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// The instance is larger than the configured exact-solve cap.
    #[error("{what} count {size} exceeds the exact-solve cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// A decider declined to apply its bound because the instance lies
    /// outside the family the bound is proven for.
    #[error("refused: {0}")]
    Refused(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}
