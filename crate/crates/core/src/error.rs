use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field GF({p}^{m}) exceeds the supported order 2^16")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("gcd({a}, {b}) = {gcd}, expected 1")]
    NotCoprime { a: u64, b: u64, gcd: u64 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group of order {0} exceeds the supported order 512")]
    GroupTooLarge(usize),
    #[error("not an antiautomorphism: {0}")]
    NotAntiautomorphism(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup order {0} is zero in the field")]
    OrderNotInvertible(usize),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group order {0} is even")]
    EvenOrder(usize),
    #[error("no splitting: {0}")]
    NoSplitting(String),
    #[error("not a duadic pair: {0}")]
    InvalidPair(String),
    #[error("enumeration of {needed} words exceeds the cap {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("code has dimension zero")]
    ZeroCode,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("code is not contained in the ambient code")]
    NotSubcode,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
