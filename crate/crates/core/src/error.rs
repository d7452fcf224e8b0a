use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("degree {degree} exceeds truncation degree {max}")]
    TruncationExceeded { degree: u32, max: u32 },

    #[error("invalid scalar literal {0:?}")]
    InvalidScalar(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        message: String,
        line: usize,
        column: usize,
    },

    #[error("invalid structure file: {0}")]
    Format(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),
}

impl Error {
    pub(crate) fn dims(context: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
            expected,
            found,
        }
    }
}
