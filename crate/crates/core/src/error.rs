use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,

    #[error("square root requires constant term 1")]
    SqrtBranch,

    #[error("coefficient of x^{exponent} was expected to vanish")]
    NonVanishingTerm { exponent: usize },

    #[error("odd coefficient while halving the square-root pair at level {level}")]
    InexactHalving { level: usize },

    #[error("tree size must be at least 1")]
    EmptyTree,

    #[error("index {index} out of range for {count} trees of size {size}")]
    IndexOutOfRange {
        size: usize,
        index: String,
        count: String,
    },

    #[error("not a Motzkin tree word: {0}")]
    MalformedTree(String),

    #[error("unknown statistic `{0}` (expected leaf, balanced, protected:K or balanced-rank:K)")]
    UnknownStatistic(String),

    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("{what} must be at most {max}, got {got}")]
    TooLarge {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("geometric ratio {0} is not below 1")]
    DivergentTail(String),
}

impl Error {
    /// True for errors caused by bad caller input, as opposed to a broken
    /// algebraic invariant.
    pub fn is_usage(&self) -> bool {
        !matches!(
            self,
            Error::NonVanishingTerm { .. } | Error::InexactHalving { .. } | Error::DivergentTail(_)
        )
    }
}
