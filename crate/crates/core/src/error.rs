use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("characteristic must be odd, got {0}")]
    EvenCharacteristic(u64),
    #[error("field order {0} is too large")]
    FieldTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("norm fiber over zero requested")]
    ZeroNormTarget,
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("quaternion has zero reduced norm")]
    NonInvertible,
    #[error("invalid lattice parameters: {0}")]
    InvalidParams(String),
    #[error("no solution of the square system for ({xi}, {eta})")]
    NoSolution { xi: String, eta: String },
    #[error("square system for ({xi}, {eta}) has {count} solutions")]
    NonUniqueSolution { xi: String, eta: String, count: usize },
    #[error("oracle failure: {0}")]
    OracleFailure(String),
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("square complex is incomplete: {0}")]
    IncompleteComplex(String),
    #[error("overlapping squares at {0}")]
    OverlappingSquares(String),
    #[error("word mixes A-side and B-side letters")]
    MixedSides,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
