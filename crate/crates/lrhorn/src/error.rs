use thiserror::Error;

/// Errors reported by partition construction, crossing statistics, the
/// coefficient oracles, and the feasibility engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing nonnegative integers, got {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("parts must be strictly decreasing positive integers, got {0:?}")]
    NotStrict(Vec<u32>),

    #[error("shape dimensions must be positive")]
    EmptyShape,

    #[error("partition ({partition}) does not fit in {shape}")]
    NotContained { partition: String, shape: String },

    #[error("rank r={r} out of range {lo}..={hi}")]
    RankOutOfRange { r: u32, lo: u32, hi: u32 },

    #[error("cannot parse partition from {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("{0}")]
    Usage(String),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("coefficient {value} is not divisible by {divisor}")]
    InexactDivision { value: i64, divisor: i64 },

    #[error("leading exponent vector {0:?} is not a valid basis index")]
    InvalidLeadingTerm(Vec<u32>),

    #[error("sweep over {size} triples exceeds the configured cap {cap}")]
    CapExceeded { size: u64, cap: u64 },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug in the oracle or the engines
    /// rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Overflow
                | Error::InexactDivision { .. }
                | Error::InvalidLeadingTerm(_)
                | Error::Internal(_)
        )
    }
}
