use thiserror::Error;

/// Errors reported by semigroup construction and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("generator {0} exceeds the supported maximum 2^31")]
    GeneratorTooLarge(i64),
    #[error("generators have gcd {0}; a numerical semigroup needs gcd 1")]
    NotNumerical(i64),
    #[error("cannot parse generator list: {0}")]
    Parse(String),
    #[error("operation requires a semigroup other than N0 (embedding dimension >= 2)")]
    RequiresProperSemigroup,
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAMember(i64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("oracle did not terminate below the cap q = {cap} for u = {element}")]
    CapExceeded { element: i64, cap: i64 },
    #[error("internal consistency check failed: {0}")]
    AssertionFailed(String),
    #[error("table bound {needed} exceeds the configured limit {limit}")]
    TableLimit { needed: i64, limit: i64 },
    #[error("invalid enumeration spec: {0}")]
    InvalidSpec(String),
    #[error("unknown property {0:?}")]
    UnknownProperty(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Shorthand for the cross-checks that guard against implementation bugs.
pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::AssertionFailed(msg()))
    }
}
