use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    EmptyInput,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the complement in the naturals would be infinite")]
    GcdNotOne(i64),
    #[error("membership sieve would exceed {0} entries")]
    SieveLimit(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("{0} is not a member of the semigroup")]
    NotAMember(i64),
    #[error("ideal chain did not stabilize by level {0}")]
    ReductionBoundExceeded(usize),
    #[error("sequence decreases at index {index}")]
    NotALadder { index: usize },
    #[error("column {column} of the Apery table has no initial landing")]
    MalformedColumn { column: usize },
    #[error("level {level} exceeds the oracle cap {cap}")]
    CapExceeded { level: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
