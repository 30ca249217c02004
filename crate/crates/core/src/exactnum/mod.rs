//! Exact arbitrary-precision number theory.

mod factor;
mod parts;
mod primality;

pub use factor::{factorize, factorize_u64, Factorization};
pub use parts::{
    cyclotomic_value, divisors, mobius, mult_order, qde_rpart, qde_rpart_opposite, rpart,
    valuation, zsigmondy, zsigmondy_exception, PrimePower, Sign,
};
pub use primality::{is_prime, is_prime_u64, jacobi, primality, PrimalityMethod};

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumberError {
    #[error("zero has no r-part")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("{0} is not a prime power")]
    NotPrimePower(BigUint),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("out of range: {0}")]
    Range(String),
}
