use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed gauss code at byte {offset}: {reason}")]
    MalformedToken { offset: usize, reason: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown crossing {0}")]
    UnknownCrossing(u32),

    #[error("diagram does not project to the given projection")]
    ProjectionMismatch,

    #[error("a diagram without crossings has no warping matrix")]
    NoCrossings,

    #[error("{0} crossings exceed the supported maximum of {max}", max = crate::MAX_MATRIX_CROSSINGS)]
    TooManyCrossings(u32),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("not a warping matrix: row {row}, column {col} has step {step}")]
    NonUnitStep { row: usize, col: usize, step: i64 },

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("parse error on line {line}: {reason}")]
    Format { line: usize, reason: String },

    #[error("the projection matrix breaks rule {0}")]
    RuleBroken(crate::rules::RuleId),

    #[error("unknown rule {0:?}")]
    UnknownRule(String),

    #[error("unknown solver {0:?}")]
    UnknownSolver(String),

    #[error("json: {0}")]
    Json(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
