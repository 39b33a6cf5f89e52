use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative radicand {0}: elliptic case, no real root")]
    NegativeRadicand(String),
    #[error("mixed radicands √{0} and √{1}")]
    RadicandMismatch(String, String),
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("coincident points: {0}")]
    CoincidentPoints(String),
    #[error("coincident lines: {0}")]
    CoincidentLines(String),
    #[error("points are not collinear: {0}")]
    NotCollinear(String),
    #[error("point not on line: {0}")]
    NotOnLine(String),
    #[error("point at infinity where a finite point is required: {0}")]
    PointAtInfinity(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("non-generic configuration: {0}")]
    NonGeneric(String),
    #[error("rank-deficient system: {0}")]
    RankDeficient(String),
    #[error("irrational intersection (discriminant {discriminant}): {context}")]
    Irrational { discriminant: String, context: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{kind}: retry budget of {attempts} exhausted; last failure: {last}")]
    RetryExhausted {
        kind: String,
        attempts: usize,
        last: String,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
