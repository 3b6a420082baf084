use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{what} is outside the domain: {detail}")]
    OutOfDomain { what: String, detail: String },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{what} did not converge within {iterations} iterations")]
    NonConvergence { what: String, iterations: usize },
    #[error("small divisor: {0}")]
    SmallDivisor(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("singular point: {0}")]
    Singular(String),
}

impl Error {
    /// Whether the error stems from bad input rather than a numerical failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_) | Error::OutOfDomain { .. } | Error::FieldMismatch(_)
        )
    }

    pub(crate) fn domain(what: impl Into<String>, detail: impl Into<String>) -> Error {
        Error::OutOfDomain {
            what: what.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
