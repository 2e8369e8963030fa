use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {q} is not supported: {reason}")]
    InvalidModulus { q: u64, reason: &'static str },

    #[error("invalid tuple for q = {q}: {reason}")]
    InvalidTuple { q: u64, reason: String },

    #[error("tuples are not comparable: {0}")]
    Mismatch(String),

    #[error("q = {q} has no expression-pattern taxonomy (needs p^m, p1*p2, 2^m or 2p)")]
    UnsupportedShape { q: u64 },

    #[error("n = {n} is out of range for q = {q} (need {min} <= n <= {max})")]
    DimensionOutOfRange { q: u64, n: usize, min: usize, max: usize },

    /// Raised when two classes share a character-polynomial invariant but
    /// their multiplicity series differ. This would contradict the
    /// decomposition of the generating function, so it is never recovered.
    #[error("invariant and series disagree for q = {q}: {left:?} vs {right:?} differ at k = {index}")]
    InvariantSeriesMismatch {
        q: u64,
        left: Vec<u64>,
        right: Vec<u64>,
        index: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
