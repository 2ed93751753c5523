use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("partition {0} has repeated parts")]
    RepeatedParts(Partition),

    #[error("partition {0} has an even part")]
    EvenPart(Partition),

    #[error("partition {0} is not even (n and the number of parts differ in parity)")]
    OddClass(Partition),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("permutation {0} is not an involution")]
    NotInvolution(String),

    #[error("the trivial shape ({0}) carries no symplectic form")]
    TrivialShape(usize),

    #[error("n = {n} exceeds the limit {limit} for {what}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("n = {n} is below the minimum {min} for {what}")]
    BelowMinimum {
        what: &'static str,
        n: usize,
        min: usize,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
