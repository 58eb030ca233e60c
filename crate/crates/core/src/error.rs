use thiserror::Error;

use crate::rootsys::LieFamily;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: LieFamily, rank: usize },

    #[error("unknown Lie family {0:?}")]
    UnknownFamily(String),

    #[error("node {node} is out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("parabolic subset must exclude at least one node")]
    EmptyExcludedSet,

    #[error("invalid word {0:?}")]
    MalformedWord(String),

    #[error("elements belong to different root systems")]
    ContextMismatch,

    #[error("element is not a minimal coset representative")]
    NotMinimalRepresentative,

    #[error("enumeration is truncated; {0}")]
    Truncated(&'static str),

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("table data error: {0}")]
    TableData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
