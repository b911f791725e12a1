use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    Empty,
    #[error("entries must be positive integers")]
    ZeroEntry,
    #[error("a solution needs at least 3 entries, got {0}")]
    TooShort(usize),
    #[error("n must be at least 3, got {0}")]
    InvalidN(u64),
    #[error("tail entries must be at least 2, got {0}")]
    TailEntry(u64),
    #[error("prefix product is 1; an all-ones prefix has no completion")]
    AllOnesPrefix,
    #[error("invalid prefix: {0}")]
    InvalidPrefix(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("{what} does not fit in 64 bits")]
    Overflow { what: &'static str },
    #[error("24ab = {0} is a perfect square")]
    SquareDiscriminant(u64),
    #[error("parameters must be positive")]
    NonPositive,
    #[error("no canonical families exist for n = 4")]
    NoCanonicalFamily,
    #[error("ordering x <= y <= z violated: x = {x}, y = {y}, z = {z}")]
    OrderingViolation { x: String, y: String, z: String },
    #[error("tail {0:?} is excluded from the construction")]
    ExcludedTail(Vec<u64>),
    #[error("derived count of ones k = {0} is not positive")]
    NonPositiveOnes(String),
}
