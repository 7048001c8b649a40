use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("evaluation point has {got} coordinates, polynomial has {expected} variables")]
    PointLength { expected: usize, got: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("invalid minor specification: {0}")]
    InvalidMinorSpec(String),

    #[error("k = {k} is below the threshold min_k = {min_k}")]
    BelowThreshold { k: usize, min_k: usize },

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid insertion sequence: {0}")]
    InvalidSequence(String),

    #[error("roots {i} and {j} are not distinct")]
    RootsNotDistinct { i: usize, j: usize },

    #[error("root {0} is zero")]
    ZeroRoot(usize),

    #[error("expected {expected} roots")]
    WrongRootKind { expected: &'static str },

    #[error("leading coefficient vanishes, polynomial degree drops")]
    DegreeDrop,

    #[error("root finder did not converge after {iterations} iterations")]
    RootNotConverged {
        iterations: usize,
        best: Vec<Complex64>,
    },

    #[error("QR iteration did not converge after {iterations} iterations")]
    QrNotConverged { iterations: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("limit-set scan produced no hits")]
    EmptyLimitSet,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by malformed input rather than by a failed computation.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::RootNotConverged { .. } | Error::QrNotConverged { .. } | Error::EmptyLimitSet
        )
    }
}
