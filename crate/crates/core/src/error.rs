use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the engine. Every variant names a precondition that the
/// caller violated or a configured limit that was hit; none of them is a
/// verdict about the mathematics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal simple type {0}")]
    IllegalType(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("weight {0} is not integral")]
    NotIntegral(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("orbit of size {size} exceeds the configured cap {cap}")]
    OrbitTooLarge { size: BigUint, cap: u64 },
    #[error("representation exceeds the Freudenthal cap {cap}")]
    CapExceeded { cap: u64 },
    #[error("illegal parameter: {0}")]
    IllegalParameter(String),
    #[error("pair {0} has no restriction map")]
    NoRestrictionMap(String),
    #[error("pair {0} has no isotropy weight model")]
    NoWeightModel(String),
    #[error("{0}")]
    NotAWeightOf(String),
    #[error("weight counts differ: {left} vs {right}")]
    CountMismatch { left: u64, right: u64 },
    #[error("internal consistency fault: {0}")]
    ConsistencyFault(String),
    #[error("outside the classification table: {0}")]
    OutOfTable(String),
    #[error("empty product of groups")]
    EmptyProduct,
    #[error("ideal simplex volume must be positive, got {0}")]
    NonPositiveVolume(String),
    #[error("k = {0} needs a caller-supplied ideal simplex volume")]
    MissingVolume(u32),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
