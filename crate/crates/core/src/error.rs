use thiserror::Error;

/// Errors raised by the library. Every variant maps to a stable
/// machine-readable code through [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {weight} is not dominant for {algebra}")]
    NotDominant { algebra: String, weight: String },

    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: String, right: String },

    #[error("dimension {dim} exceeds the configured ceiling {ceiling}")]
    CeilingExceeded { dim: String, ceiling: u64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("spin weight rejected: {0}")]
    SpinParity(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("Pfaffian requested for a matrix of odd size {0}")]
    OddSize(usize),

    #[error("element outside the declared subspace: {0}")]
    InvalidElement(String),

    #[error("invalid algebra tag {0:?}")]
    InvalidAlgebra(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotDominant { .. } => "E_NOT_DOMINANT",
            Error::AlgebraMismatch { .. } => "E_ALGEBRA_MISMATCH",
            Error::CeilingExceeded { .. } => "E_CEILING",
            Error::Unsupported(_) => "E_UNSUPPORTED",
            Error::SpinParity(_) => "E_SPIN_PARITY",
            Error::DimensionMismatch { .. } => "E_DIMENSION",
            Error::NotSkew => "E_NOT_SKEW",
            Error::OddSize(_) => "E_ODD_SIZE",
            Error::InvalidElement(_) => "E_INVALID_ELEMENT",
            Error::InvalidAlgebra(_) => "E_INVALID_ALGEBRA",
            Error::Parse(_) => "E_PARSE",
            Error::Consistency(_) => "E_CONSISTENCY",
        }
    }

    /// Usage errors are malformed input text; everything else is a domain
    /// error about well-formed input.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidAlgebra(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
