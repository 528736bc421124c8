use thiserror::Error;

use crate::lattice::LatticeVec;
use crate::weyl::WeylElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid permutation image {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("rank mismatch: expected {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("entry index ({i},{j}) invalid for rank {n}")]
    InvalidIndex { i: usize, j: usize, n: usize },

    #[error("operation requires rank 3, got {0}")]
    UnsupportedRank(usize),

    #[error("point {point} lies in {count} sets S_w")]
    PartitionViolation { point: LatticeVec, count: usize },

    #[error("precondition failed: {0}")]
    Domain(String),

    #[error("operator {operator} is undefined in the {case} case")]
    Undefined { operator: String, case: String },

    #[error("no lattice region named {0}")]
    UnknownRegion(WeylElem),

    #[error("basis key {key} violates S-membership (internal)")]
    Consistency { key: String },

    #[error("coefficient {value} not allowed: {reason}")]
    InvalidCoefficient { value: i64, reason: String },

    #[error("vector support {0} is outside the window")]
    OutsideWindow(String),

    #[error("precision exceeded: {0}")]
    PrecisionExceeded(String),

    #[error("decomposition bound {bound} too small (found {found})")]
    BoundTooSmall { bound: i64, found: LatticeVec },

    #[error("element is not invertible at working precision")]
    NotInvertible,

    #[error("result is not aligned with the f-basis: {0}")]
    NonBasisAligned(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
