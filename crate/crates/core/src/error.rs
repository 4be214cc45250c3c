use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("rational function not representable with a (1-t^s) denominator: {0}")]
    NotRepresentable(String),
    #[error("resolution too short: need step {needed}, have {have}")]
    ResolutionTooShort { needed: usize, have: usize },
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    BeyondBound { degree: i64, bound: i64 },
    #[error("insufficient precision: {0}")]
    Precision(String),
    #[error("no stabilization within the computed window: {0}; increase the maximum step")]
    NotStabilized(String),
    #[error("fitted polynomial degree {degree} exceeds codimension bound {bound} (input is not a complete intersection pair, or a bug)")]
    DegreeExceedsCodim { degree: usize, bound: usize },
    #[error("window too short: {0}")]
    WindowTooShort(String),
    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),
    #[error("lift failed: {0}")]
    LiftFailed(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("superficial element search exhausted after {draws} draws: {reason}")]
    SearchExhausted { draws: usize, reason: String },
    #[error("missing required assertion flag(s): {0}")]
    MissingAssertion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
