use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0}")]
    InvalidPartition(String),
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("truncation cap {cap} is below degree {degree}")]
    CapTooSmall { cap: usize, degree: usize },
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("{nvars} variables cannot determine a symmetric function of degree {degree}")]
    TooFewVariables { nvars: usize, degree: usize },
    #[error("incidence functions live on different grounds {0} and {1}")]
    GroundMismatch(String, String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
