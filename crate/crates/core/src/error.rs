use thiserror::Error;

/// Errors produced by the entropy library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("log_gamma domain error: argument {0} must be finite and > 0")]
    Domain(f64),

    #[error("probability vector is empty")]
    EmptyDistribution,

    #[error("negative or non-finite probability {value} at index {index}")]
    NegativeProbability { index: usize, value: f64 },

    #[error("probabilities sum to {0}, expected 1 within 1e-9")]
    SumNotOne(f64),

    #[error("all weights are zero; cannot normalize")]
    AllZero,

    #[error("input stream is empty")]
    EmptyStream,

    #[error("count vector must hold at least one event")]
    EmptyCounts,

    #[error("sample size must be >= {min}, got {got}")]
    InvalidN { min: u64, got: f64 },

    #[error("beans-per-bean unit needs an alphabet of at least 2 outcomes, got {0}")]
    InvalidUnit(usize),

    #[error("zero probability at index {0}; the asymptotic gap needs every p_i > 0")]
    ZeroProbability(usize),

    #[error("truncation length must be >= 2, got {0}")]
    InvalidM(usize),

    #[error("truncated head needs {needed} positive entries, got {got}")]
    ShortHead { needed: usize, got: usize },

    #[error("non-positive entry {value} at index {index}")]
    NonPositive { index: usize, value: f64 },

    #[error("dimension mismatch: counts have {counts} outcomes, distribution has {probs}")]
    DimensionMismatch { counts: usize, probs: usize },

    #[error("counts sum to {got}, expected {expected}")]
    TotalMismatch { expected: u64, got: u64 },

    #[error("enumeration of {0} compositions exceeds the 1e7 guard")]
    TooLarge(u128),

    #[error("outcome index {index} out of range for {len} outcomes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("split fraction {0} must lie in [0, 1)")]
    InvalidLambda(f64),

    #[error("outcome {0} has zero probability and cannot be split")]
    ZeroProbabilityAtIndex(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("group {0} has zero total probability")]
    ZeroGroupMass(usize),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors raised by a numeric domain violation rather than by
    /// malformed input.
    pub fn is_numeric_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::ZeroProbability(_)
                | Error::ZeroProbabilityAtIndex(_)
                | Error::ZeroGroupMass(_)
                | Error::InvalidUnit(_)
                | Error::TooLarge(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
