use thiserror::Error;

/// Errors raised by the segment search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegmentError {
    #[error("integer overflow while accumulating scores")]
    IntegerOverflow,
    #[error("floating-point accumulation left the finite range")]
    FloatOverflow,
    #[error("score at position {position} is not finite")]
    NonFiniteScore { position: usize },
    #[error("threshold is not finite")]
    NonFiniteThreshold,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = SegmentError> = std::result::Result<T, E>;
