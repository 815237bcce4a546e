use thiserror::Error;

use crate::typea::Weight;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 2, got n = {0}")]
    InvalidRank(usize),

    #[error("rank mismatch: expected n = {expected}, got n = {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid positive root alpha_({i},{j}) for n = {n}")]
    InvalidRoot { i: usize, j: usize, n: usize },

    #[error("invalid node {node} for n = {n}")]
    InvalidNode { node: usize, n: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight pairs have different totals: {0} vs {1}")]
    TotalsDiffer(Weight, Weight),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a character of a finite-dimensional module: {0}")]
    NotACharacter(String),

    #[error("module dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: u64, cap: u64 },

    #[error("evaluation points must be distinct")]
    EqualEvaluationPoints,

    #[error("unknown case tag `{0}`")]
    UnknownCase(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
