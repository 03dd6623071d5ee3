//! Error type shared by all kernel operations.

use thiserror::Error;

/// Partial statistics attached to a resource-cap abort so the caller can see
/// how far a computation got before it was stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapStats {
    pub basis_size: usize,
    pub max_degree_seen: i64,
    pub pairs_pending: usize,
}

impl std::fmt::Display for CapStats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "basis={} max_degree={} pairs_pending={}",
            self.basis_size, self.max_degree_seen, self.pairs_pending
        )
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown identifier `{0}`")]
    UnknownVariable(String),
    #[error("division is not supported in polynomial expressions")]
    DivisionUnsupported,
    #[error("characteristic {0} is not zero or a prime")]
    NotPrime(u64),
    #[error("values belong to different rings")]
    RingMismatch,
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("Groebner basis not computed; compute it first")]
    BasisNotComputed,
    #[error("resource cap exceeded during basis computation ({0})")]
    ResourceCap(CapStats),
    #[error("saturation did not stabilize within {0} colon steps")]
    SaturationCap(usize),
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("quotient has infinite length (dimension {0})")]
    InfiniteLength(i64),
    #[error("not a system of parameters: quotient dimension {0}")]
    NotSop(i64),
    #[error("expected {expected} parameter forms, got {got}")]
    WrongParameterCount { expected: usize, got: usize },
    #[error("cohomological index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("ideal is not a monomial ideal")]
    NotMonomial,
    #[error("quotient is not Artinian")]
    NotArtinian,
    #[error("brute-force enumeration refused: {0}")]
    BruteForceLimits(String),
    #[error("polynomial type {0} exceeds the supported range (at most one)")]
    PolynomialTypeTooLarge(i64),
    #[error("module dual has dimension {0} >= 2; no finite bound procedure")]
    DualDimensionTooLarge(i64),
    #[error("sequence is not filter-regular at step {step} (colon subquotient dimension {dim})")]
    NotFilterRegular { step: usize, dim: i64 },
    #[error("retry budget exhausted after {attempts} attempts: {what}")]
    RetryBudget { attempts: usize, what: String },
    #[error("rearrangement requires generators of equal degree (saw {0} and {1})")]
    UnequalDegrees(i64, i64),
    #[error("Hilbert-Samuel tail did not stabilize on window {0:?}: differences {1:?}")]
    HilbertSamuelUnstable(Vec<u64>, Vec<i64>),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
