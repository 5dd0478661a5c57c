use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("({mu}) is not contained in ({lambda})")]
    NotContained { mu: Partition, lambda: Partition },

    #[error("shift by {power} would leave a negative part in ({lambda})")]
    NegativePart { lambda: Partition, power: u32 },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("geometric series of a degree-zero monomial does not terminate")]
    ZeroDegreeMonomial,

    #[error("no partitions of rank {n} with {k} parts")]
    NoPartitions { k: u32, n: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
