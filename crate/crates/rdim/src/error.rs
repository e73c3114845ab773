use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("generator {index} is not a bijection on {{0..{degree}}}")]
    NonBijectiveGenerator { index: usize, degree: usize },

    #[error("multiplication table is not a Latin square (row {0})")]
    NotLatinSquare(usize),

    #[error("multiplication table has no identity element")]
    NoIdentity,

    #[error("group axiom violated: {0}")]
    NotAGroup(String),

    #[error("group order exceeds the configured limit of {limit} elements")]
    SizeLimit { limit: usize },

    #[error("unsupported family parameter: {0}")]
    BadFamilyParameter(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not central")]
    NotCentral,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("group is not a p-group")]
    NotPGroup,

    #[error("n - r is {actual}; use the {wanted} variant of the rank theorem")]
    ParityMismatch {
        actual: &'static str,
        wanted: &'static str,
    },

    #[error("solver node limit of {limit} exhausted after {explored} nodes")]
    NodeLimit { limit: u64, explored: u64 },

    #[error("brute-force oracle skipped: {0}")]
    OracleSkipped(String),

    #[error("no Dixon prime q \u{2261} 1 (mod {exponent}) found below {bound}")]
    NoDixonPrime { exponent: u64, bound: u64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("cache file does not match the group it claims to describe")]
    CacheMismatch,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
