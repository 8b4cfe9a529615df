use thiserror::Error;

/// Errors shared by the permutation, interval and Mobius operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed argument: duplicate letters, empty sequence, affix length
    /// out of range, trimming a permutation down to nothing, and similar.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation that requires `sigma <= tau` was given a pair where
    /// sigma has no occurrence in tau.
    #[error("{sigma} does not occur in {tau}")]
    NotContained { sigma: String, tau: String },

    /// The brute-force oracle refuses permutations longer than its guard;
    /// the caller should use the fast algorithm instead.
    #[error("|tau| = {len} exceeds the oracle bound {bound}")]
    OracleTooLarge { len: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
