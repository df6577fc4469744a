use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank {0} is outside the supported range 1..=64")]
    RankOutOfRange(usize),

    #[error("malformed input {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("not a signed permutation: {0}")]
    NotAPermutation(String),

    #[error("expected an unsigned permutation")]
    SignedInput,

    #[error("{0:?} is not a maximal partition")]
    NotMaximalPartition(Vec<usize>),

    #[error("{parts:?} is not a maximal split partition with respect to rho = {rho}")]
    NotMaximalSplitPartition { parts: Vec<usize>, rho: usize },

    #[error("interval [{a},{k}] does not fit in rank {n}")]
    IntervalOutOfRange { a: usize, k: usize, n: usize },

    #[error("element {0} has an odd number of sign changes and is not in type D")]
    NotInTypeD(String),

    #[error("type {ty} is not defined in rank {n}")]
    UnsupportedRank { ty: char, n: usize },

    #[error("resource budget exceeded: {what} needs {needed}, limit is {limit}")]
    Budget {
        what: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("root closure exceeded {ceiling} positive roots; the group is not finite or too large")]
    NonFinite { ceiling: usize },

    #[error("generator {index} out of range for rank {rank}")]
    BadGenerator { index: usize, rank: usize },

    #[error("unknown group {0:?}")]
    UnknownGroup(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
