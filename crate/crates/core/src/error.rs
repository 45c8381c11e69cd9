use std::fmt;

use thiserror::Error;

/// Failure to parse polynomial, monomial or ideal text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based column of the offending token (one past the end for EOF).
    pub column: usize,
    pub token: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at column {}: {} (found {})",
            self.column, self.message, self.token
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no order")]
    OrderOfZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ideal is not m-primary: it must contain a pure power of x and of y")]
    NotMPrimary,
    #[error("ideal {0} is not integrally closed")]
    NotIntegrallyClosed(String),
    #[error("order {order} of the ideal is smaller than the rank {rank}")]
    OrderTooSmall { order: u32, rank: usize },
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("coordinate change matrix is not invertible over the local ring")]
    NotUnimodular,
    #[error("an ideal needs at least one nonzero generator")]
    EmptyIdeal,
    #[error("orders {r1} + {r2} do not split an ideal of order {order}")]
    SplitOrders { order: u32, r1: u32, r2: u32 },
    #[error("no truncation bound up to {cap} certifies m-primariness")]
    TruncationCap { cap: u32 },
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// A certified identity did not hold. Always a bug.
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
