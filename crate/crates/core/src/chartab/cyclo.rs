use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of Z[z], z a primitive e-th root of unity, as sparse
/// (exponent, coefficient) pairs sorted by exponent. Values produced by
/// [`CycloBasis::reduce`] are normalized, so equality is coordinate
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Cyclo(pub Vec<(u32, i64)>);

impl Cyclo {
    pub fn integer(c: i64) -> Self {
        if c == 0 {
            Cyclo(Vec::new())
        } else {
            Cyclo(vec![(0, c)])
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.0.as_slice() {
            [] => Some(0),
            [(0, c)] => Some(*c),
            _ => None,
        }
    }

    /// Numerical value with z = exp(2πi/e), as (re, im).
    pub fn eval(&self, e: u32) -> (f64, f64) {
        let w = std::f64::consts::TAU / e as f64;
        self.0.iter().fold((0.0, 0.0), |(re, im), &(k, c)| {
            let a = w * k as f64;
            (re + c as f64 * a.cos(), im + c as f64 * a.sin())
        })
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, &(k, c)) in self.0.iter().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "z")?,
                (1, m) => write!(f, "{m}z")?,
                (k, 1) => write!(f, "z^{k}")?,
                (k, m) => write!(f, "{m}z^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
struct Component {
    p: u32,
    pa: u32,
    /// p^(a-1)
    step: u32,
    phi: u32,
    /// e / p^a
    cof: u32,
    /// (e / p^a)^-1 mod p^a
    inv: u32,
}

/// Normal form for Z[z], z of order e. Writing e = Π p^a, Z[z] is the
/// tensor product of the Z[z_p] with z_p = z^(e/p^a), and the basis used is
/// z^k for exactly those k whose components k_p (with
/// k = Σ k_p·e/p^a mod e) satisfy k_p < φ(p^a).
#[derive(Debug, Clone)]
pub struct CycloBasis {
    e: u32,
    comps: Vec<Component>,
}

impl CycloBasis {
    pub fn new(e: u32) -> Self {
        assert!(e >= 1);
        let mut comps = Vec::new();
        let mut m = e;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                let mut pa = 1;
                while m.is_multiple_of(p) {
                    m /= p;
                    pa *= p;
                }
                let cof = e / pa;
                let inv = (1..pa.max(2)).find(|&x| (cof as u64 * x as u64) % pa as u64 == 1 % pa as u64).unwrap_or(1);
                let step = pa / p;
                comps.push(Component { p, pa, step, phi: pa - step, cof, inv });
            }
            p += 1;
        }
        CycloBasis { e, comps }
    }

    pub fn order(&self) -> u32 {
        self.e
    }

    /// Dimension φ(e) of the basis.
    pub fn dimension(&self) -> u32 {
        self.comps.iter().map(|c| c.phi).product()
    }

    fn component(&self, c: &Component, k: u32) -> u32 {
        ((k as u64 * c.inv as u64) % c.pa as u64) as u32
    }

    pub fn is_basis_exponent(&self, k: u32) -> bool {
        self.comps.iter().all(|c| self.component(c, k) < c.phi)
    }

    /// Reduce a dense coefficient vector of length e (coefficient of z^k at
    /// index k) to normal form.
    pub fn reduce(&self, mut dense: Vec<i64>) -> Cyclo {
        assert_eq!(dense.len(), self.e as usize);
        let e = self.e as u64;
        for c in &self.comps {
            for k in 0..self.e {
                let v = dense[k as usize];
                if v == 0 {
                    continue;
                }
                let kp = self.component(c, k);
                if kp < c.phi {
                    continue;
                }
                dense[k as usize] = 0;
                // z_p^(phi + r) = -Σ_{i<p-1} z_p^(r + i·step)
                let r = kp - c.phi;
                for i in 0..c.p - 1 {
                    let nk = r + i * c.step;
                    let shift = (nk as u64 + c.pa as u64 - kp as u64) * c.cof as u64;
                    let k2 = ((k as u64 + shift) % e) as usize;
                    dense[k2] -= v;
                }
            }
        }
        Cyclo(
            dense
                .into_iter()
                .enumerate()
                .filter(|&(_, v)| v != 0)
                .map(|(k, v)| (k as u32, v))
                .collect(),
        )
    }

    pub fn dense(&self, a: &Cyclo) -> Vec<i64> {
        let mut d = vec![0i64; self.e as usize];
        for &(k, c) in &a.0 {
            d[k as usize] += c;
        }
        d
    }

    /// dense += w · a · b, or w · a · conj(b) when `conj_b`.
    pub fn accumulate(&self, dense: &mut [i64], w: i64, a: &Cyclo, b: &Cyclo, conj_b: bool) {
        let e = self.e;
        for &(ka, ca) in &a.0 {
            for &(kb, cb) in &b.0 {
                let kb = if conj_b { (e - kb) % e } else { kb };
                dense[((ka + kb) % e) as usize] += w * ca * cb;
            }
        }
    }

    pub fn add(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        let mut d = self.dense(a);
        for &(k, c) in &b.0 {
            d[k as usize] += c;
        }
        self.reduce(d)
    }

    pub fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        let mut d = vec![0i64; self.e as usize];
        self.accumulate(&mut d, 1, a, b, false);
        self.reduce(d)
    }

    pub fn conj(&self, a: &Cyclo) -> Cyclo {
        let mut d = vec![0i64; self.e as usize];
        for &(k, c) in &a.0 {
            d[((self.e - k) % self.e) as usize] += c;
        }
        self.reduce(d)
    }

    /// z^k in normal form.
    pub fn root_power(&self, k: u32) -> Cyclo {
        let mut d = vec![0i64; self.e as usize];
        d[(k % self.e) as usize] = 1;
        self.reduce(d)
    }
}
