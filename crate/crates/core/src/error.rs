use thiserror::Error;

/// Errors raised while building or reading partitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("weight must be at least 1, got {0}")]
    ZeroWeight(usize),
    #[error("partition has no parts")]
    Empty,
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts must be strictly decreasing: {prev} is followed by {next}")]
    NotStrictlyDecreasing { prev: u32, next: u32 },
    #[error("parts must be weakly decreasing: {prev} is followed by {next}")]
    NotWeaklyDecreasing { prev: u32, next: u32 },
    #[error("run statistic is undefined on the empty partition")]
    RunOfEmpty,
    #[error("cannot parse token `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

impl PartitionError {
    pub(crate) fn parse(token: &str, reason: impl Into<String>) -> Self {
        PartitionError::Parse {
            token: token.to_string(),
            reason: reason.into(),
        }
    }
}

/// Errors from truncated power series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term {0} is not a unit")]
    NotUnit(String),
}

/// Raised by the Laplacian oracle when the operator matrices disagree with
/// the algebraic identities they must satisfy. Any of these signals a bug in
/// an operator, never bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConsistencyError {
    #[error("adjoint matrix at length {length} is not the transpose of the coboundary matrix")]
    NotTranspose { length: usize },
    #[error("coboundary squared is nonzero starting at length {length}")]
    DeltaSquared { length: usize },
    #[error("adjoint squared is nonzero starting at length {length}")]
    DeltaStarSquared { length: usize },
    #[error("Laplacian at length {length} is not a 0/1 diagonal projection")]
    NotProjection { length: usize },
    #[error("matrix shape mismatch at length {length}: {detail}")]
    Shape { length: usize, detail: String },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
