//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("rank guard exceeded: rank {rank} > guard {guard} (whole-group enumeration refused)")]
    RankGuard { rank: usize, guard: usize },

    #[error("length cutoff exceeded: length {len} > cutoff {cutoff}")]
    CutoffExceeded { len: usize, cutoff: usize },

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("element is not W-invariant: {0}")]
    NotInvariant(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
