use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: String, rank: usize },

    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("not a positive root: {0:?}")]
    NotPositiveRoot(Vec<i64>),

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands belong to different root systems ({0} vs {1})")]
    MismatchedSystems(String, String),

    #[error("element {0} is not smooth")]
    NotSmooth(String),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("invalid Hessenberg function {0:?}")]
    InvalidHessenbergFunction(Vec<usize>),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("permutation {0:?} is not codominant (contains 312)")]
    NotCodominant(Vec<usize>),

    #[error("coweight {0:?} is not generic: an edge weight pairs to zero")]
    NonGenericCoweight(Vec<i64>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
