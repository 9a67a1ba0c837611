use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("cannot parse exact scalar from {0:?}")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Error)]
pub enum Error {
    #[error("subspaces live in different ambient dimensions ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("denominator is not contained in numerator: {context}")]
    NotContained { context: String },

    #[error("almost complex structure is degenerate: {0}")]
    DegenerateJ(String),

    #[error("model is inconsistent: {0}")]
    InconsistentModel(String),

    #[error("metric is not positive definite: {0}")]
    NotPositive(String),

    #[error("operation requires a real 4-dimensional manifold, got real dimension {0}")]
    Not4Manifold(usize),

    #[error("correction equation has no solution at model level")]
    NoSolution { obstruction: Vec<String> },

    #[error("input form is not ddbar-closed")]
    NotDdcClosed,

    #[error("form degenerates at sample point {0:?}")]
    DegenerateAtSample(Vec<String>),

    #[error("invalid input form: {0}")]
    InvalidForm(String),

    #[error("validation failed for {invariant}: {detail}")]
    Validation { invariant: String, detail: String },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error(transparent)]
    Scalar(#[from] ParseScalarError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
