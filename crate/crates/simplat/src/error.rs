//! Crate-wide error type.
//!
//! Every message starts with a stable code word (`NotMonotone`, `OutOfRange`,
//! ...) so diagnostics name the violated invariant directly.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Empty: value must contain at least one entry")]
    Empty,

    #[error("OutOfRange: {name} = {value} lies outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("NotMonotone: {name}[{index}] = {left} exceeds the next entry {right}")]
    NotMonotone {
        name: &'static str,
        index: usize,
        left: f64,
        right: f64,
    },

    #[error("NotNested: expected {lower} <= {upper}, got {lower_value} > {upper_value}")]
    NotNested {
        lower: &'static str,
        lower_value: f64,
        upper: &'static str,
        upper_value: f64,
    },

    #[error("NotStrictlyIncreasing: {name}[{index}] does not strictly precede the next entry")]
    NotStrictlyIncreasing { name: &'static str, index: usize },

    #[error("SumExceedsOne: {name} sums to {sum}")]
    SumExceedsOne { name: &'static str, sum: f64 },

    #[error("SumNotOne: weights sum to {sum}")]
    SumNotOne { sum: f64 },

    #[error("DuplicateLabel: scale label {label:?} appears more than once")]
    DuplicateLabel { label: String },

    #[error("DimensionMismatch: expected dimension {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("OddDimension: nested-interval stacks require an even dimension, got {dim}")]
    OddDimension { dim: usize },

    #[error("IndexOutOfRange: index {index} exceeds bound {bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("DimensionTooSmall: dimension {dim} below minimum {min}")]
    DimensionTooSmall { dim: usize, min: usize },

    #[error("Overflow: {n}! does not fit in 64 bits")]
    Overflow { n: usize },

    #[error("TotalIgnorance: the interval (0, 1) carries no certainty information")]
    TotalIgnorance,

    #[error("NotInImage: {0}")]
    NotInImage(String),

    #[error("UnsupportedConversion: {kind}")]
    UnsupportedConversion { kind: &'static str },

    #[error("UnknownKind: {0:?} is not a registered kind tag")]
    UnknownKind(String),

    #[error("WordToken: {0:?} is not a face or degeneracy token")]
    WordToken(String),

    #[error("FaceInWord: granularity embeddings accept degeneracy-only words")]
    FaceInWord,

    #[error("ScaleMismatch: scale has {labels} labels but {values} values were given")]
    ScaleMismatch { labels: usize, values: usize },
}
