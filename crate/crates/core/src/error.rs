use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("closed form needs lambda_2 <= n - a, got lambda_2 = {second}, n - a = {bound}")]
    LargeFirstRowGuard { second: usize, bound: i64 },

    #[error("Ding's formula needs 1 <= r <= n - lambda_2, got r = {r}, n - lambda_2 = {bound}")]
    DingGuard { r: usize, bound: usize },

    #[error("{what} is limited to n <= {max}, got n = {n}")]
    TooLarge { what: &'static str, n: usize, max: usize },

    #[error("{0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
