use thiserror::Error;

use crate::ring::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring Z/{p}^{e}: {reason}")]
    InvalidRing { p: u64, e: u32, reason: &'static str },

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    #[error("{value} is not a unit in {ring}")]
    NotAUnit { value: u64, ring: RingSpec },

    #[error("constant term of the polynomial is not a unit")]
    NonUnitConstantTerm,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("divisor is not monic")]
    NonMonicDivisor,

    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: u64, b: u64 },

    #[error("no primitive {order}-th root of unity in {ring}")]
    NoSuchRoot { order: u64, ring: RingSpec },

    #[error("no splitting of the nonzero cyclotomic cosets mod {m} exists for q = {q}")]
    EmptyResult { m: u64, q: u64 },

    #[error("polynomial does not divide x^{n} - 1")]
    NotADivisor { n: usize },

    #[error("factors are not pairwise coprime")]
    FactorsNotCoprime,

    #[error("product of the factors is not x^{n} - 1")]
    ProductMismatch { n: usize },

    #[error("invalid code family: {0}")]
    InvalidFamily(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("{what} has {size} elements, above the limit {limit}")]
    TooLarge { what: &'static str, size: u128, limit: u128 },

    #[error("the zero code has no minimum weight")]
    ZeroCode,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
