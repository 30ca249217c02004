use super::QError;
use crate::catalog::OrderFormula;
use crate::exactnum::Sign;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer polynomial in one variable; `coeffs[i]` is the coefficient of q^i.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and `degree()` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPolynomial {
    #[serde(with = "crate::bigstr::int_vec")]
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// c·q^k
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// q^d + c
    pub fn binomial(d: usize, c: i64) -> Self {
        Self::monomial(1, d) + Self::constant(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide every coefficient by `d`, failing unless all divisions are exact.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<Self, QError> {
        if d.is_zero() {
            return Err(QError::NonExact("division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (qt, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(QError::NonExact(format!("{d} does not divide the content of {self}")));
            }
            out.push(qt);
        }
        Ok(Self::new(out))
    }

    /// Exact division by a polynomial with leading coefficient ±1.
    pub fn div_exact(&self, other: &Self) -> Result<Self, QError> {
        let dd = other
            .degree()
            .ok_or_else(|| QError::NonExact("division by the zero polynomial".into()))?;
        let lead = other.leading();
        if lead.abs() != BigInt::one() {
            return Err(QError::NonExact(format!("divisor {other} is not monic")));
        }
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else { return Ok(Self::zero()) };
        if nd < dd {
            return Err(QError::NonExact(format!("{other} does not divide {self}")));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lead;
            if c.is_zero() {
                continue;
            }
            for (j, oc) in other.coeffs.iter().enumerate() {
                rem[i + j] -= &c * oc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(QError::NonExact(format!("{other} does not divide {self}")));
        }
        Ok(Self::new(quot))
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// self(inner(t))
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// Taylor shift: the coefficients of self(q0 + t) in t.
    pub fn shift(&self, q0: &BigInt) -> Self {
        // Horner-style synthetic division, O(n^2) additions.
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * q0;
                a[j] += t;
            }
        }
        Self::new(a)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, "q")
    }
}

impl QPolynomial {
    fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str(var)?,
                _ => write!(f, "{var}^{i}")?,
            }
        }
        Ok(())
    }

    /// Display with a different variable name.
    pub fn to_string_in(&self, var: &str) -> String {
        struct W<'a>(&'a QPolynomial, &'a str);
        impl fmt::Display for W<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_var(f, self.1)
            }
        }
        W(self, var).to_string()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, o: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, o: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, o: &QPolynomial) -> QPolynomial {
        if self.is_zero() || o.is_zero() {
            return QPolynomial::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPolynomial::new(v)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, o: QPolynomial) -> QPolynomial {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        -&self
    }
}

/// q^qexp · Π (q^d + c) · num/den. Each factor is given as (d, c). The
/// division by `den` must be exact on the expanded coefficients.
pub fn poly_from_factors(
    qexp: usize,
    factors: &[(usize, i64)],
    num: i64,
    den: i64,
) -> Result<QPolynomial, QError> {
    let mut p = QPolynomial::monomial(1, qexp);
    for &(d, c) in factors {
        p = &p * &QPolynomial::binomial(d, c);
    }
    p = p.scale(&BigInt::from(num));
    p.div_scalar_exact(&BigInt::from(den))
}

/// The order polynomial of a family without the center divisor, e.g.
/// q^6(q^2-1)(q^6-1) for G2. Negative multiplicities are divided out exactly.
pub fn order_polynomial(formula: &OrderFormula) -> Result<QPolynomial, QError> {
    let mut num = QPolynomial::monomial(1, formula.qexp as usize);
    let mut den = QPolynomial::one();
    for f in &formula.factors {
        let c = match f.sign {
            Sign::Plus => -1,
            Sign::Minus => 1,
        };
        let b = QPolynomial::binomial(f.degree as usize, c);
        let m = f.multiplicity.unsigned_abs();
        if f.multiplicity >= 0 {
            num = &num * &b.pow(m);
        } else {
            den = &den * &b.pow(m);
        }
    }
    num.div_exact(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_and_print() {
        let p = poly_from_factors(1, &[(2, -1)], 1, 1).unwrap();
        assert_eq!(p, QPolynomial::from_i64(&[0, -1, 0, 1]));
        assert_eq!(p.to_string(), "q^3 - q");
        assert_eq!(QPolynomial::zero().degree(), None);
        assert_eq!(QPolynomial::from_i64(&[3, 0, 0]).degree(), Some(0));
        assert_eq!(QPolynomial::from_i64(&[-2, 0, 1]).to_string(), "q^2 - 2");
        assert_eq!(QPolynomial::from_i64(&[1, -1]).to_string_in("s"), "-s + 1");
    }

    #[test]
    fn product_against_schoolbook() {
        let p = poly_from_factors(0, &[(1, -1), (3, 1)], 1, 1).unwrap();
        // (q-1)(q^3+1) = q^4 - q^3 + q - 1
        assert_eq!(p, QPolynomial::from_i64(&[-1, 1, 0, -1, 1]));
    }

    #[test]
    fn inexact_scale_rejected() {
        assert!(poly_from_factors(0, &[(3, -1)], 1, 2).is_err());
        let p = poly_from_factors(0, &[(1, -1), (1, 1)], 1, 1).unwrap();
        assert!(p.div_scalar_exact(&BigInt::from(2)).is_err());
        let ok = poly_from_factors(0, &[(1, -2)], 2, 2).unwrap();
        assert_eq!(ok, QPolynomial::from_i64(&[-2, 1]));
    }

    #[test]
    fn shift_matches_compose() {
        let p = QPolynomial::from_i64(&[5, -3, 0, 2, -1, 7]);
        let q0 = BigInt::from(4);
        let via_compose = p.compose(&QPolynomial::from_i64(&[4, 1]));
        assert_eq!(p.shift(&q0), via_compose);
    }

    #[test]
    fn exact_polynomial_division() {
        let a = poly_from_factors(0, &[(12, -1)], 1, 1).unwrap();
        let b = poly_from_factors(0, &[(4, -1)], 1, 1).unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), QPolynomial::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]));
        assert!(b.div_exact(&QPolynomial::from_i64(&[1, 0, 1, 1])).is_err());
    }

    #[test]
    fn json_uses_strings() {
        let p = QPolynomial::from_i64(&[-1, 0, 2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["-1","0","2"]"#);
        assert_eq!(serde_json::from_str::<QPolynomial>(&s).unwrap(), p);
    }
}
