use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("image list is not a bijection of 0..{degree}")]
    NotBijective { degree: usize },
    #[error("permutations act on different domains ({expected} vs {found})")]
    DomainMismatch { expected: usize, found: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("set is not a subgroup of the given group")]
    NotSubgroup,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the trivial group has no minimal normal subgroups")]
    TrivialGroup,
    #[error("subgroup {lower} is not contained in subgroup {upper}")]
    NotContained { lower: usize, upper: usize },
    #[error("elements live over different groups")]
    GroupMismatch,
    #[error("homomorphism is not {0}")]
    BadHomomorphism(&'static str),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("malformed serialized element: {0}")]
    Format(String),
}
