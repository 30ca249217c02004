//! Order formulas and Sylow r-parts.

use super::{CatalogError, LieFamily, LieGroup};
use crate::exactnum::{
    cyclotomic_value, divisors, factorize, mult_order, qde_rpart, rpart, valuation, Factorization,
    Sign,
};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// (q^degree − sign)^multiplicity. Negative multiplicities divide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicFactor {
    pub degree: u32,
    pub sign: Sign,
    pub multiplicity: i32,
}

impl CyclicFactor {
    pub const fn new(degree: u32, sign: Sign) -> Self {
        CyclicFactor { degree, sign, multiplicity: 1 }
    }

    pub fn value(&self, q: &BigUint) -> BigUint {
        let v = q.pow(self.degree);
        match self.sign {
            Sign::Plus => v - 1u32,
            Sign::Minus => v + 1u32,
        }
    }
}

/// The 1/d in front of an order formula: d = gcd(modulus, q − sign).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CenterDivisor {
    One,
    Gcd { modulus: u32, sign: Sign },
}

impl CenterDivisor {
    pub fn value(&self, q: &BigUint) -> BigUint {
        match *self {
            CenterDivisor::One => BigUint::one(),
            CenterDivisor::Gcd { modulus, sign } => {
                let base = match sign {
                    Sign::Plus => q - 1u32,
                    Sign::Minus => q + 1u32,
                };
                base.gcd(&BigUint::from(modulus))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderFormula {
    pub qexp: u32,
    pub factors: Vec<CyclicFactor>,
    pub center: CenterDivisor,
}

impl OrderFormula {
    fn plus(qexp: u32, degrees: &[u32], center: CenterDivisor) -> Self {
        OrderFormula {
            qexp,
            factors: degrees.iter().map(|&d| CyclicFactor::new(d, Sign::Plus)).collect(),
            center,
        }
    }

    pub fn eval(&self, q: &BigUint) -> BigUint {
        let mut num = q.pow(self.qexp);
        let mut den = self.center.value(q);
        for f in &self.factors {
            let v = f.value(q);
            let m = f.multiplicity.unsigned_abs();
            if f.multiplicity >= 0 {
                num *= v.pow(m);
            } else {
                den *= v.pow(m);
            }
        }
        let (val, rem) = num.div_rem(&den);
        debug_assert!(rem.is_zero(), "order formula not integral");
        val
    }

    /// Human-readable form, e.g. "q^6(q^2-1)(q^6-1)".
    pub fn display(&self) -> String {
        let mut s = String::new();
        if self.center != CenterDivisor::One {
            s.push_str("(1/d)");
        }
        s.push_str(&format!("q^{}", self.qexp));
        for f in &self.factors {
            let op = if f.sign == Sign::Plus { '-' } else { '+' };
            let base = format!("(q^{}{}1)", f.degree, op);
            match f.multiplicity {
                1 => s.push_str(&base),
                m if m > 0 => s.push_str(&format!("{base}^{m}")),
                m => s.push_str(&format!("/{base}^{}", -m)),
            }
        }
        if let CenterDivisor::Gcd { modulus, sign } = self.center {
            let op = if sign == Sign::Plus { '-' } else { '+' };
            s.push_str(&format!(", d = gcd({modulus}, q{op}1)"));
        }
        s
    }
}

pub fn order_formula(family: LieFamily) -> OrderFormula {
    use CenterDivisor::*;
    match family {
        LieFamily::E8 => OrderFormula::plus(120, &[2, 8, 12, 14, 18, 20, 24, 30], One),
        LieFamily::F4 => OrderFormula::plus(24, &[2, 6, 8, 12], One),
        LieFamily::G2 => OrderFormula::plus(6, &[2, 6], One),
        LieFamily::D4tw3 => OrderFormula {
            qexp: 12,
            // q^8 + q^4 + 1 = (q^12 − 1)/(q^4 − 1)
            factors: vec![
                CyclicFactor::new(2, Sign::Plus),
                CyclicFactor::new(6, Sign::Plus),
                CyclicFactor::new(12, Sign::Plus),
                CyclicFactor { degree: 4, sign: Sign::Plus, multiplicity: -1 },
            ],
            center: One,
        },
        LieFamily::E6 { eps } => OrderFormula {
            qexp: 36,
            factors: vec![
                CyclicFactor::new(2, Sign::Plus),
                CyclicFactor::new(5, eps),
                CyclicFactor::new(6, Sign::Plus),
                CyclicFactor::new(8, Sign::Plus),
                CyclicFactor::new(9, eps),
                CyclicFactor::new(12, Sign::Plus),
            ],
            center: Gcd { modulus: 3, sign: eps },
        },
        LieFamily::E7 => OrderFormula::plus(
            63,
            &[2, 6, 8, 10, 12, 14, 18],
            Gcd { modulus: 2, sign: Sign::Plus },
        ),
        LieFamily::B2tw2 => OrderFormula {
            qexp: 2,
            factors: vec![CyclicFactor::new(1, Sign::Plus), CyclicFactor::new(2, Sign::Minus)],
            center: One,
        },
        LieFamily::G2tw2 => OrderFormula {
            qexp: 3,
            factors: vec![CyclicFactor::new(1, Sign::Plus), CyclicFactor::new(3, Sign::Minus)],
            center: One,
        },
        LieFamily::F4tw2 => OrderFormula {
            qexp: 12,
            factors: vec![
                CyclicFactor::new(1, Sign::Plus),
                CyclicFactor::new(3, Sign::Minus),
                CyclicFactor::new(4, Sign::Plus),
                CyclicFactor::new(6, Sign::Minus),
            ],
            center: One,
        },
        LieFamily::Psl { n } => OrderFormula::plus(
            n * (n - 1) / 2,
            &(2..=n).collect::<Vec<_>>(),
            Gcd { modulus: n, sign: Sign::Plus },
        ),
        LieFamily::Psp { n } => OrderFormula::plus(
            n * n,
            &(1..=n).map(|i| 2 * i).collect::<Vec<_>>(),
            Gcd { modulus: 2, sign: Sign::Plus },
        ),
    }
}

/// Exact |H|.
pub fn order(g: &LieGroup) -> BigUint {
    order_formula(g.family).eval(g.q())
}

/// Exponents of Φ_e(q) in q^d − sign.
fn cyclotomic_split(d: u32, sign: Sign) -> Vec<u64> {
    let d = d as u64;
    match sign {
        Sign::Plus => divisors(d),
        Sign::Minus => divisors(2 * d).into_iter().filter(|e| !d.is_multiple_of(*e)).collect(),
    }
}

/// Prime factorization of |H|, assembled from factorizations of the
/// cyclotomic values Φ_e(q) so no large composite is ever factored whole.
pub fn order_factorization(g: &LieGroup) -> Result<Factorization, CatalogError> {
    let formula = order_formula(g.family);
    let mut phi_count: BTreeMap<u64, i64> = BTreeMap::new();
    for f in &formula.factors {
        for e in cyclotomic_split(f.degree, f.sign) {
            *phi_count.entry(e).or_insert(0) += f.multiplicity as i64;
        }
    }
    let mut signed: BTreeMap<BigUint, i64> = BTreeMap::new();
    *signed.entry(g.p().clone()).or_insert(0) += (g.f() * formula.qexp) as i64;
    for (&e, &c) in &phi_count {
        if c == 0 {
            continue;
        }
        let phi = cyclotomic_value(e, g.q())?;
        for (p, &k) in factorize(&phi).iter() {
            *signed.entry(p.clone()).or_insert(0) += c * k as i64;
        }
    }
    for (p, &k) in factorize(&formula.center.value(g.q())).iter() {
        *signed.entry(p.clone()).or_insert(0) -= k as i64;
    }
    let mut out = Factorization::new();
    for (p, k) in signed {
        if k < 0 {
            return Err(CatalogError::Inconsistent(format!(
                "negative exponent for {p} in |{}|",
                g.name()
            )));
        }
        out.add(p, k as u32);
    }
    if out.value() != order(g) {
        return Err(CatalogError::Inconsistent(format!(
            "factorization of |{}| does not reconstruct the order",
            g.name()
        )));
    }
    Ok(out)
}

/// The r-part of |H| in symbolic form, e.g. 2^2 · (q^2-1)_2^7.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowProfile {
    #[serde(with = "crate::bigstr::uint")]
    pub r: BigUint,
    /// d_q(r) for r ≠ p.
    pub j: Option<u64>,
    /// Exponent of the bare power of r (may be negative before the
    /// center is absorbed, never negative overall).
    pub constant: i64,
    /// (label, count, r-exponent of one copy of the term)
    pub terms: Vec<(String, i64, u32)>,
    pub exponent: u32,
    #[serde(with = "crate::bigstr::uint")]
    pub value: BigUint,
    pub trace: String,
}

fn push_term(terms: &mut Vec<(String, i64, u32)>, label: String, count: i64, v: u32) {
    if let Some(t) = terms.iter_mut().find(|t| t.0 == label) {
        t.1 += count;
    } else {
        terms.push((label, count, v));
    }
}

/// Factor-wise Sylow r-part with its formula trace.
pub fn sylow_profile(g: &LieGroup, r: &BigUint) -> Result<SylowProfile, CatalogError> {
    let formula = order_formula(g.family);
    let q = g.q();
    let rv = valuation(&BigUint::one(), r)?; // rejects non-prime r
    debug_assert_eq!(rv, 0);
    let two = BigUint::from(2u32);
    let mut constant: i64 = 0;
    let mut terms: Vec<(String, i64, u32)> = Vec::new();
    let mut j_out = None;

    if r == g.p() {
        let e = g.f() * formula.qexp;
        let trace = format!("|H|_{r} = q^{} = {r}^{e}", formula.qexp);
        return Ok(SylowProfile {
            r: r.clone(),
            j: None,
            constant: e as i64,
            terms,
            exponent: e,
            value: r.pow(e),
            trace,
        });
    }

    if *r == two {
        // q odd
        let v = |x: BigUint| valuation(&x, &two).map(|e| e as i64);
        let vq2 = v(q * q - 1u32)? as u32;
        let vqm = v(q - 1u32)? as u32;
        let vqp = v(q + 1u32)? as u32;
        for f in &formula.factors {
            let m = f.multiplicity as i64;
            let d = f.degree as u64;
            let part = qde_rpart(q, d, Sign::Plus, &two)?;
            match (f.sign, d.is_multiple_of(2)) {
                (Sign::Plus, true) => {
                    // (q^d − 1)_2 = (q^2 − 1)_2 (d/2)_2
                    let c = valuation(&part, &two)? as i64 - vq2 as i64;
                    constant += m * c;
                    push_term(&mut terms, "(q^2-1)_2".into(), m, vq2);
                }
                (Sign::Plus, false) => push_term(&mut terms, "(q-1)_2".into(), m, vqm),
                (Sign::Minus, true) => constant += m,
                (Sign::Minus, false) => push_term(&mut terms, "(q+1)_2".into(), m, vqp),
            }
        }
    } else {
        let j = mult_order(q, r)?;
        j_out = Some(j);
        let qj = q.pow(j as u32);
        let base = rpart(&(&qj - 1u32), r)?;
        let vb = valuation(&base, r)?;
        let label = format!("(q^{j}-1)_{r}");
        for f in &formula.factors {
            let m = f.multiplicity as i64;
            let d = f.degree as u64;
            // r | q^d − 1 iff j | d; r | q^d + 1 iff j ∤ d and j | 2d.
            let span = match f.sign {
                Sign::Plus if d.is_multiple_of(j) => Some(d / j),
                Sign::Minus if !d.is_multiple_of(j) && (2 * d).is_multiple_of(j) => Some(2 * d / j),
                _ => None,
            };
            if let Some(s) = span {
                let part = qde_rpart(&qj, s, Sign::Plus, r)?;
                constant += m * (valuation(&part, r)? as i64 - vb as i64);
                push_term(&mut terms, label.clone(), m, vb);
            }
        }
    }
    let center = formula.center.value(q);
    constant -= valuation(&center, r)? as i64;
    terms.retain(|t| t.1 != 0);

    let total: i64 = constant + terms.iter().map(|t| t.1 * t.2 as i64).sum::<i64>();
    if total < 0 {
        return Err(CatalogError::Inconsistent(format!(
            "negative {r}-exponent for |{}|",
            g.name()
        )));
    }
    let exponent = total as u32;
    let mut pieces = Vec::new();
    if constant != 0 {
        pieces.push(format!("{r}^{constant}"));
    }
    for (label, c, _) in &terms {
        pieces.push(if *c == 1 { label.clone() } else { format!("{label}^{c}") });
    }
    if pieces.is_empty() {
        pieces.push("1".into());
    }
    let trace = format!("|H|_{r} = {} = {r}^{exponent}", pieces.join(" · "));
    Ok(SylowProfile {
        r: r.clone(),
        j: j_out,
        constant,
        terms,
        exponent,
        value: r.pow(exponent),
        trace,
    })
}

/// |H|_r, computed factor-wise and checked against the r-part of the
/// expanded order.
pub fn sylow_order(g: &LieGroup, r: &BigUint) -> Result<BigUint, CatalogError> {
    let prof = sylow_profile(g, r)?;
    let direct = rpart(&order(g), r)?;
    if direct != prof.value {
        return Err(CatalogError::Inconsistent(format!(
            "factor-wise {r}-part {} differs from expanded {direct} for {}",
            prof.value,
            g.name()
        )));
    }
    Ok(prof.value)
}

/// Suzuki order as q^2 (q − 1)(q − 2^{k+1} + 1)(q + 2^{k+1} + 1) with the
/// pairwise coprimality of the last three factors.
pub fn suzuki_factored_order(g: &LieGroup) -> Result<([BigUint; 4], bool), CatalogError> {
    if g.family != LieFamily::B2tw2 {
        return Err(CatalogError::Rejected("factored Suzuki order needs 2B2".into()));
    }
    let q = g.q();
    let k = g.twist_k().unwrap();
    let t = BigUint::one() << (k + 1);
    let parts = [q * q, q - 1u32, q - &t + 1u32, q + &t + 1u32];
    let coprime = parts[1].gcd(&parts[2]).is_one()
        && parts[1].gcd(&parts[3]).is_one()
        && parts[2].gcd(&parts[3]).is_one();
    let prod: BigUint = parts.iter().product();
    if prod != order(g) {
        return Err(CatalogError::Inconsistent("Suzuki factored order mismatch".into()));
    }
    Ok((parts, coprime))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: LieFamily, q: u64) -> LieGroup {
        LieGroup::from_u64(f, q).unwrap()
    }

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(&g(LieFamily::G2, 3)), b(4245696));
        assert_eq!(order(&g(LieFamily::B2tw2, 8)), b(29120));
        assert_eq!(order(&g(LieFamily::Psl { n: 4 }, 3)), b(6065280));
        assert_eq!(order(&g(LieFamily::Psp { n: 2 }, 3)), b(25920));
        assert_eq!(order(&g(LieFamily::Psp { n: 3 }, 2)), b(1451520));
        assert_eq!(order(&g(LieFamily::G2tw2, 27)), b(10073444472));
        assert_eq!(order(&g(LieFamily::D4tw3, 2)), b(211341312));
        assert_eq!(order(&g(LieFamily::F4tw2, 8)).to_string(), "264905352699586176614400");
    }

    #[test]
    fn factorizations_reconstruct() {
        for fam in LieFamily::exceptional() {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 27, 32] {
                if let Ok(grp) = LieGroup::from_u64(fam, q) {
                    let fac = order_factorization(&grp).unwrap();
                    assert_eq!(fac.value(), order(&grp), "{}", grp.name());
                }
            }
        }
    }

    #[test]
    fn e8_two_part() {
        let grp = g(LieFamily::E8, 3);
        assert_eq!(sylow_order(&grp, &b(2)).unwrap(), b(2).pow(30));
        let prof = sylow_profile(&grp, &b(2)).unwrap();
        assert_eq!(prof.trace, "|H|_2 = 2^6 · (q^2-1)_2^8 = 2^30");
    }

    #[test]
    fn e7_two_part_trace() {
        let prof = sylow_profile(&g(LieFamily::E7, 3), &b(2)).unwrap();
        assert_eq!(prof.trace, "|H|_2 = 2^2 · (q^2-1)_2^7 = 2^23");
    }

    #[test]
    fn g2_thirteen_part() {
        assert_eq!(sylow_order(&g(LieFamily::G2, 3), &b(13)).unwrap(), b(13));
        assert_eq!(sylow_order(&g(LieFamily::G2, 3), &b(5)).unwrap(), b(1));
        assert_eq!(sylow_order(&g(LieFamily::G2, 3), &b(3)).unwrap(), b(729));
    }

    #[test]
    fn suzuki_coprime() {
        let (parts, ok) = suzuki_factored_order(&g(LieFamily::B2tw2, 8)).unwrap();
        assert!(ok);
        assert_eq!(parts, [b(64), b(7), b(5), b(13)]);
        let (_, ok) = suzuki_factored_order(&g(LieFamily::B2tw2, 32)).unwrap();
        assert!(ok);
    }

    #[test]
    fn formula_display() {
        assert_eq!(order_formula(LieFamily::G2).display(), "q^6(q^2-1)(q^6-1)");
        assert_eq!(
            order_formula(LieFamily::D4tw3).display(),
            "q^12(q^2-1)(q^6-1)(q^12-1)/(q^4-1)^1"
        );
    }
}
