use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a supported prime (need a prime in 2..=257)")]
    UnsupportedPrime(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands live in different contexts (p={lhs_p}, N={lhs_n} vs p={rhs_p}, N={rhs_n})")]
    MismatchedContext {
        lhs_p: u32,
        lhs_n: usize,
        rhs_p: u32,
        rhs_n: usize,
    },
    #[error("series is not a unit: constant term is zero")]
    NotAUnit,
    #[error("series must have zero constant term")]
    NonzeroConstant,
    #[error("series has no compositional inverse: needs f0 = 0 and f1 != 0")]
    NotInvertible,
    #[error("operation needs characteristic 2, got p={0}")]
    WrongCharacteristic(u32),
    #[error("root extraction needs constant term 1")]
    BadRoot,
    #[error("{m} is not coprime to p={p}")]
    NotCoprime { m: u64, p: u32 },
    #[error("cannot truncate to {requested}: series only known to precision {available}")]
    BadTruncation { requested: usize, available: usize },
    #[error("precision N={got} is too small (need N >= {min})")]
    BadPrecision { got: usize, min: usize },
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("series is not in the Nottingham group: needs f0 = 0 and f1 = 1")]
    NotGroupElement,
    #[error("malformed series text: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
