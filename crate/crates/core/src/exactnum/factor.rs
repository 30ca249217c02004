//! Integer factorization: trial division to 10^6, then Pollard rho with
//! Brent's cycle finding. Every reported prime passes [`is_prime`].

use super::primality::{is_prime, is_prime_u64};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

const TRIAL_LIMIT: u32 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static P: OnceLock<Vec<u32>> = OnceLock::new();
    P.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                (i * i..=n).step_by(i).for_each(|j| sieve[j] = false);
            }
            i += 1;
        }
        (0..=n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

/// Prime factorization as an ordered map prime -> exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Factorization(BTreeMap<BigUint, u32>);

impl Factorization {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from (prime, exponent) pairs; zero exponents are dropped.
    /// Keys are trusted to be prime.
    pub fn from_pairs<I: IntoIterator<Item = (BigUint, u32)>>(pairs: I) -> Self {
        let mut f = Self::new();
        for (p, e) in pairs {
            f.add(p, e);
        }
        f
    }

    pub fn add(&mut self, p: BigUint, e: u32) {
        if e > 0 {
            *self.0.entry(p).or_insert(0) += e;
        }
    }

    pub fn exponent(&self, p: &BigUint) -> u32 {
        self.0.get(p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.0.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, &u32)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, (p, &e)| acc * p.pow(e))
    }

    pub fn multiply(&mut self, other: &Factorization) {
        for (p, &e) in &other.0 {
            self.add(p.clone(), e);
        }
    }

    /// Divide by `other`; returns `None` when `other` does not divide `self`.
    pub fn divide(&self, other: &Factorization) -> Option<Factorization> {
        let mut out = self.0.clone();
        for (p, &e) in &other.0 {
            let have = out.get_mut(p)?;
            if *have < e {
                return None;
            }
            *have -= e;
            if *have == 0 {
                out.remove(p);
            }
        }
        Some(Factorization(out))
    }

    /// Exact r-part from the stored exponent.
    pub fn part(&self, r: &BigUint) -> BigUint {
        r.pow(self.exponent(r))
    }

    pub fn as_map(&self) -> &BTreeMap<BigUint, u32> {
        &self.0
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, &e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" · "))
    }
}

// Serialized as [["2", 6], ["3", 6], ...] so primes of any size survive JSON.
impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (p, e) in &self.0 {
            seq.serialize_element(&(p.to_string(), e))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Factorization {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Factorization;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of [prime, exponent] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Factorization, A::Error> {
                let mut out = Factorization::new();
                while let Some((p, e)) = seq.next_element::<(String, u32)>()? {
                    let p: BigUint = p.parse().map_err(de::Error::custom)?;
                    out.add(p, e);
                }
                Ok(out)
            }
        }
        d.deserialize_seq(V)
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn rho_u64(n: u64) -> u64 {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    for c in 1..u64::MAX {
        let f = |x: u64| (mul(x, x) + c) % n;
        let (mut y, mut r, mut q, m) = (2u64, 1u64, 1u64, 128u64);
        let (mut g, mut x, mut ys) = (1u64, 0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul(q, x.abs_diff(y));
                }
                g = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho exhausted constants")
}

fn rho_big(n: &BigUint) -> BigUint {
    let abs_diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let m: u64 = 128;
        let mut g = BigUint::one();
        let mut x = BigUint::zero();
        let mut ys = BigUint::zero();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (q * abs_diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

/// If n = b^k with k >= 2, return (b, k) for the largest such k.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    for k in (2..=bits).rev() {
        let b = n.nth_root(k);
        if b > BigUint::one() && b.pow(k) == *n {
            return Some((b, k));
        }
    }
    None
}

fn split(n: BigUint, mult: u32, out: &mut Factorization) {
    if n.is_one() {
        return;
    }
    if let Some(small) = n.to_u64() {
        if is_prime_u64(small) {
            out.add(n, mult);
            return;
        }
    } else if is_prime(&n) {
        out.add(n, mult);
        return;
    }
    if let Some((b, k)) = perfect_power(&n) {
        split(b, mult * k, out);
        return;
    }
    let d = match n.to_u64() {
        Some(small) => BigUint::from(rho_u64(small)),
        None => rho_big(&n),
    };
    let rest = &n / &d;
    split(d, mult, out);
    split(rest, mult, out);
}

/// Complete prime factorization of n >= 1 (factorize(1) is empty).
pub fn factorize(n: &BigUint) -> Factorization {
    let mut out = Factorization::new();
    if n.is_zero() {
        return out;
    }
    let mut m = n.clone();
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        while (&m % p).is_zero() {
            m /= p;
            e += 1;
        }
        out.add(pb, e);
    }
    if m.is_one() {
        return out;
    }
    // Any remainder below TRIAL_LIMIT^2 that survived is prime.
    let limit = BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT);
    if m < limit {
        out.add(m, 1);
        return out;
    }
    // Collect the raw splits, then merge: different branches may meet the
    // same prime.
    let mut tail = Factorization::new();
    split(m, 1, &mut tail);
    out.multiply(&tail);
    out
}

pub fn factorize_u64(n: u64) -> Factorization {
    factorize(&BigUint::from(n))
}
