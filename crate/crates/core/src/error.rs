use thiserror::Error;

use crate::group::NotFrobenius;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a Frobenius group: {0}")]
    NotFrobenius(NotFrobenius),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaceError {
    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("subset contains a full coset of the kernel (coset {coset}); not a proper face")]
    Improper { coset: usize },
    #[error("dimension {k} out of range [-1, {top}]")]
    DimOutOfRange { k: i64, top: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {value} exceeds the oracle cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },
    #[error("points have mismatched dimensions")]
    ShapeMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("matrix size mismatch: {left}x{left} vs {right}x{right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("coset index {index} out of range (h = {h})")]
    CosetOutOfRange { index: usize, h: usize },
}
