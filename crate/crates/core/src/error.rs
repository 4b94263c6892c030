use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} appears in more than one block")]
    Overlap { vertex: usize },
    #[error("vertex {vertex} is not covered by any block")]
    Coverage { vertex: usize },
    #[error("empty block")]
    EmptyBlock,
    #[error("vertex index {index} out of range for n = {n}")]
    Index { index: usize, n: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("a block straddles two kernel classes")]
    NotDecomposable,
    #[error("block of size {size} is not allowed in a partial Brauer diagram")]
    NotPartialBrauer { size: usize },
    #[error("component {vertices:?} matches none of the balanced forms")]
    NotBalanced { vertices: Vec<usize> },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("predicted {predicted} elements exceeds the cap of {cap}")]
    TooLarge { predicted: String, cap: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
