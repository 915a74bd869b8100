use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("generators are not transitive ({orbits} orbits)")]
    NotTransitive { orbits: usize },
    #[error("block system not preserved by generator {generator}")]
    BlockNotPreserved { generator: usize },
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("overlapping pair at point {0}")]
    OverlappingPair(usize),
}
