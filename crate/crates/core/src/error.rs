use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must have at least one row")]
    EmptyMatrix,
    #[error("non-finite matrix entry at position {0}")]
    NonFinite(usize),
    #[error("expected {expected} entries, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("entries ({i},{j}) and ({j},{i}) differ by {diff:e}")]
    NotSymmetric { i: usize, j: usize, diff: f64 },
    #[error("angle {0} is outside the open interval (0, pi)")]
    AngleOutOfRange(f64),
    #[error("truncation order {0} must be even and at least 2")]
    BadTruncationOrder(usize),
    #[error("matrix {0} is not an involution")]
    NotInvolution(&'static str),
    #[error("matrices of a pair must have equal order ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("|lambda| = {0} exceeds 2")]
    LambdaOutOfRange(f64),
    #[error("the set is empty")]
    EmptySet,
    #[error("lambda = {lambda} lies inside the essential spectrum [-{edge}, {edge}]")]
    InsideEssentialSpectrum { lambda: f64, edge: f64 },
    #[error("spectral radius {0} is outside [0, 2]")]
    RhoOutOfRange(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
