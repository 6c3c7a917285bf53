use thiserror::Error;

/// Errors raised by the exact-arithmetic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),
    #[error("group elements belong to different groups ({0} vs {1})")]
    GroupMismatch(String, String),
    #[error("generator images violate a defining relation: {0}")]
    RelationViolated(String),
    #[error("{value} is not coprime to {modulus}")]
    NotCoprime { value: i64, modulus: i64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
    #[error("congruence violated: {0}")]
    CongruenceViolated(String),
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("element lies outside the cyclic subgroup generated by the base")]
    NotInSubgroup,
    #[error("torsion orders incompatible with the homomorphism: {0}")]
    IncompatibleTorsion(String),
    #[error("lattices live in different ambient groups")]
    AmbientMismatch,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
