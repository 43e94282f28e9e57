use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("triple is neither co-Pieri nor of maximal depth")]
    NotApplicable,
    #[error("no stable value up to n = {cap}")]
    BudgetExceeded { cap: usize },
    #[error("swapped path does not exist")]
    SwapUndefined,
    #[error("tableau is not in the Dvir radical")]
    NotDvir,
    #[error("expected exactly one preimage, found {0}")]
    NoUniquePreimage(usize),
    #[error("diagram rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
