use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element of Q(zeta_{conductor}) is not in the field of conductor {target}")]
    IncompatibleField { conductor: u32, target: u32 },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("change-of-basis matrix is singular")]
    SingularBasis,
    #[error("malformed Hopf algebra: {0}")]
    MalformedHopfAlgebra(String),
    #[error("not semisimple: the integral has zero counit")]
    NotSemisimple,
    #[error("splitting field too small (block {block}): {detail}")]
    SplittingFieldTooSmall { block: usize, detail: String },
    #[error("no simple module found among {bound} candidate generators")]
    ModuleSearchFailed { bound: usize },
    #[error("lattice has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("replay failed at step {step}: {detail}")]
    ReplayFailed { step: usize, detail: String },
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
