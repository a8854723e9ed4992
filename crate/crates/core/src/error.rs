use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("group of order {order} exceeds the default size limit {limit}; pass the large-computation opt-in")]
    TooLarge { order: u64, limit: u64 },

    #[error("element {0} is not fully commutative")]
    NotFullyCommutative(String),

    #[error("operands do not match: {0}")]
    Mismatch(String),

    #[error("ideal closure fails for {group}: {detail}")]
    IdealClosure { group: String, detail: String },

    #[error("malformed cache file: {0}")]
    CacheFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
