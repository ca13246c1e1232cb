use thiserror::Error;

use crate::partitions::Partition;

/// Domain errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands have incompatible or non-square dimensions.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A structural precondition (triangularity, strictness, monicity) failed.
    #[error("shape error: {0}")]
    Shape(String),

    /// `exp_nilpotent` was handed a matrix that is not strictly triangular.
    #[error("matrix is not strictly triangular: {0}")]
    NotNilpotent(String),

    /// A partition is longer than the number of variables allows.
    #[error("partition length {len} exceeds the allowed maximum {max}")]
    Length { len: usize, max: usize },

    /// The finite truncation of a semi-infinite object is too small.
    #[error("truncation too small for {what}: need N >= {need}, have N = {have}")]
    Truncation {
        what: String,
        need: usize,
        have: usize,
    },

    /// The Vandermonde determinant of the evaluation point vanishes.
    #[error("evaluation points are not pairwise distinct (singular Vandermonde)")]
    SingularVandermonde,

    /// A Plücker family lacks a coordinate required by a Giambelli relation.
    #[error("incomplete Plücker family: missing coordinate for {0}")]
    IncompleteFamily(Partition),

    /// A Hankel minor of a measure vanishes before the requested degree.
    #[error("degenerate measure: Hankel determinant of order {0} vanishes")]
    Degeneracy(usize),

    /// Brute-force Littlewood-Richardson computation refused an oversized weight.
    #[error("Littlewood-Richardson weight {weight} exceeds the cap {cap}")]
    WeightCap { weight: usize, cap: usize },

    /// Any other invalid argument.
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn truncation(what: impl Into<String>, need: usize, have: usize) -> Error {
    Error::Truncation {
        what: what.into(),
        need,
        have,
    }
}
