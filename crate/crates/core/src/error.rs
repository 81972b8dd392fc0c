use thiserror::Error;

use crate::graphs::ChainFamily;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("n must be >= 2 (got {0})")]
    ChainTooShort(usize),

    #[error("operation is only defined for the {expected} family (got {got})")]
    WrongFamily {
        expected: ChainFamily,
        got: ChainFamily,
    },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("expected a single zero eigenvalue, found {0}")]
    ZeroEigenvalueCount(usize),

    #[error("coefficient has a nonzero irrational part: {0}")]
    IrrationalCoefficient(String),

    #[error("eigensolver budget exceeded: order {order} > {limit}")]
    Budget { order: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
