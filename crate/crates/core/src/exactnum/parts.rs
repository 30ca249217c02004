//! Valuations, r-parts, multiplicative orders, primitive prime divisors and
//! cyclotomic values.

use super::factor::{factorize, factorize_u64};
use super::primality::is_prime;
use super::NumberError;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The sign ε in expressions like q^d − ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// q − ε as an unsigned integer (q ≥ 2).
fn q_minus(q: &BigUint, eps: Sign) -> BigUint {
    match eps {
        Sign::Plus => q - 1u32,
        Sign::Minus => q + 1u32,
    }
}

fn require_prime(r: &BigUint) -> Result<(), NumberError> {
    if is_prime(r) {
        Ok(())
    } else {
        Err(NumberError::NotPrime(r.clone()))
    }
}

/// Exponent of the prime r in n.
pub fn valuation(n: &BigUint, r: &BigUint) -> Result<u32, NumberError> {
    if n.is_zero() {
        return Err(NumberError::Zero);
    }
    require_prime(r)?;
    Ok(valuation_unchecked(n, r))
}

pub(crate) fn valuation_unchecked(n: &BigUint, r: &BigUint) -> u32 {
    let mut m = n.clone();
    let mut e = 0;
    loop {
        let (q, rem) = m.div_rem(r);
        if !rem.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}

/// The r-part n_r: the largest power of r dividing n.
pub fn rpart(n: &BigUint, r: &BigUint) -> Result<BigUint, NumberError> {
    Ok(r.pow(valuation(n, r)?))
}

/// (q^d − ε)_r for a prime r dividing q − ε, by the closed-form case table
/// (no expansion of q^d).
pub fn qde_rpart(q: &BigUint, d: u64, eps: Sign, r: &BigUint) -> Result<BigUint, NumberError> {
    if *q < BigUint::from(2u32) {
        return Err(NumberError::Range(format!("q = {q} must be at least 2")));
    }
    if d == 0 {
        return Err(NumberError::Range("d must be positive".into()));
    }
    require_prime(r)?;
    let base = q_minus(q, eps);
    if !(&base % r).is_zero() {
        return Err(NumberError::Hypothesis(format!(
            "r = {r} does not divide q - ({eps}1) = {base}"
        )));
    }
    let two = BigUint::from(2u32);
    let d_big = BigUint::from(d);
    let d_even = d.is_multiple_of(2);
    if *r == two {
        if !d_even {
            return rpart(&base, r);
        }
        return Ok(match eps {
            Sign::Plus => rpart(&(q * q - 1u32), r)? * rpart(&BigUint::from(d / 2), r)?,
            Sign::Minus => two,
        });
    }
    if d_even && eps == Sign::Minus {
        return Ok(BigUint::one());
    }
    Ok(rpart(&base, r)? * rpart(&d_big, r)?)
}

/// (q^d + ε)_r for a prime r dividing q − ε (the companion case table).
pub fn qde_rpart_opposite(
    q: &BigUint,
    d: u64,
    eps: Sign,
    r: &BigUint,
) -> Result<BigUint, NumberError> {
    if *r == BigUint::from(2u32) {
        if q.is_even() {
            return Err(NumberError::Hypothesis(format!(
                "r = 2 does not divide q - ({eps}1)"
            )));
        }
        // q odd: q^d + 1 = (q^{2d} − 1)/(q^d − 1)
        let minus = qde_rpart(q, d, Sign::Plus, r)?;
        return Ok(match eps {
            Sign::Plus => qde_rpart(q, 2 * d, Sign::Plus, r)? / minus,
            Sign::Minus => minus,
        });
    }
    let base = q_minus(q, eps);
    require_prime(r)?;
    if !(&base % r).is_zero() {
        return Err(NumberError::Hypothesis(format!(
            "r = {r} does not divide q - ({eps}1) = {base}"
        )));
    }
    if d.is_multiple_of(2) && eps == Sign::Minus {
        Ok(rpart(&base, r)? * rpart(&BigUint::from(d), r)?)
    } else {
        Ok(BigUint::one())
    }
}

/// Order of q modulo the prime r.
pub fn mult_order(q: &BigUint, r: &BigUint) -> Result<u64, NumberError> {
    require_prime(r)?;
    if (q % r).is_zero() {
        return Err(NumberError::Hypothesis(format!("r = {r} divides q = {q}")));
    }
    let group = r - 1u32;
    let mut order = group.clone();
    for (p, &e) in factorize(&group).iter() {
        for _ in 0..e {
            let cand = &order / p;
            if q.modpow(&cand, r).is_one() {
                order = cand;
            } else {
                break;
            }
        }
    }
    order
        .to_u64()
        .ok_or_else(|| NumberError::Range(format!("order {order} exceeds 64 bits")))
}

/// Möbius function for small arguments.
pub fn mobius(n: u64) -> i32 {
    let fac = factorize_u64(n);
    if fac.iter().any(|(_, &e)| e > 1) {
        0
    } else if fac.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Φ_m(q), evaluated exactly via the Möbius product over divisors of m.
pub fn cyclotomic_value(m: u64, q: &BigUint) -> Result<BigUint, NumberError> {
    if m == 0 {
        return Err(NumberError::Range("m must be positive".into()));
    }
    if *q < BigUint::from(2u32) {
        return Err(NumberError::Range(format!("q = {q} must be at least 2")));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in divisors(m) {
        let term = q.pow(d as u32) - 1u32;
        match mobius(m / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (val, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    Ok(val)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Smallest primitive prime divisor of q^n − 1, or `None` when none exists.
pub fn zsigmondy(q: &BigUint, n: u64) -> Result<Option<BigUint>, NumberError> {
    if *q < BigUint::from(2u32) || n < 2 {
        return Err(NumberError::Range(format!(
            "zsigmondy needs q >= 2 and n >= 2 (got q = {q}, n = {n})"
        )));
    }
    let phi = cyclotomic_value(n, q)?;
    for p in factorize(&phi).primes() {
        if (q % p).is_zero() {
            continue;
        }
        if mult_order(q, p)? == n {
            return Ok(Some(p.clone()));
        }
    }
    Ok(None)
}

/// Whether (q, n) is one of the classical exceptions: (2, 6), or n = 2 with
/// q + 1 a power of two.
pub fn zsigmondy_exception(q: &BigUint, n: u64) -> bool {
    (n == 6 && *q == BigUint::from(2u32)) || (n == 2 && (q + 1u32).count_ones() == 1)
}

/// A prime power q = p^f.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    #[serde(with = "crate::bigstr::uint")]
    pub p: BigUint,
    pub f: u32,
    #[serde(with = "crate::bigstr::uint")]
    pub q: BigUint,
}

impl PrimePower {
    pub fn new(p: BigUint, f: u32) -> Result<Self, NumberError> {
        if f == 0 {
            return Err(NumberError::Range("exponent f must be at least 1".into()));
        }
        require_prime(&p)?;
        let q = p.pow(f);
        Ok(PrimePower { p, f, q })
    }

    pub fn from_value(q: &BigUint) -> Result<Self, NumberError> {
        let fac = factorize(q);
        if fac.len() != 1 {
            return Err(NumberError::NotPrimePower(q.clone()));
        }
        let (p, &f) = fac.iter().next().unwrap();
        PrimePower::new(p.clone(), f)
    }

    pub fn from_u64(q: u64) -> Result<Self, NumberError> {
        Self::from_value(&BigUint::from(q))
    }

    /// q as u64 when it fits.
    pub fn q_u64(&self) -> Option<u64> {
        self.q.to_u64()
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}
