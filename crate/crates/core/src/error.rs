use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} outside I = {{1, ..., {rank}}}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("residue {residue} lies outside I = {{1, ..., {rank}}}")]
    ResidueOutOfRange { residue: i64, rank: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("system is not unitriangular: {0}")]
    NotUnitriangular(String),

    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    /// Raised when an internal cross-check disagrees; always a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Input-validation errors, as opposed to failures raised mid-computation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::IndexOutOfRange { .. }
                | Error::InvalidTableau(_)
                | Error::InvalidInput(_)
        )
    }
}
