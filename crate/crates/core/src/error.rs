use crate::algebra::AlgebraError;

/// Library-level error. Each variant maps to a CLI exit code.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("parse error: {0}")]
    Parse(String),
    /// Input outside the supported domain: bad characteristic, reducible
    /// model, split finite branch places, bad reduction and similar.
    #[error("unsupported input: {0}")]
    Domain(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// Two independent computations disagreed, or an identity that must hold
    /// did not.
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Algebra(AlgebraError::Parse(_)) => 2,
            Error::CrossCheck(_)
            | Error::Algebra(AlgebraError::PrecisionExhausted(_))
            | Error::Algebra(AlgebraError::ZeroDivisor(_)) => 3,
            Error::Budget(_) => 5,
            Error::Domain(_) | Error::Algebra(_) => 4,
        }
    }
}
