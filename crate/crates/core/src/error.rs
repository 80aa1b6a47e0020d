use thiserror::Error;

/// Errors shared across the exact and floating-point lanes.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("empty vector")]
    EmptyVector,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular matrix")]
    Singular,

    #[error("n too small: need n >= 4, got {0}")]
    TooSmall(usize),

    #[error("even n required, got {0}")]
    EvenRequired(usize),

    #[error("no inverse formula (det D = 0) for odd n = {0}")]
    NoInverseForOdd(usize),

    #[error("k out of range: k = {k}, valid range 1..={max} for n = {n}")]
    KOutOfRange { k: usize, max: usize, n: usize },

    #[error("index out of range: ({i}, {j}) for {rows}x{cols} matrix")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        rows: usize,
        cols: usize,
    },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
