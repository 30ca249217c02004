//! The all-q Step-2 inequalities, one entry per family, prime and j = d_q(r)
//! branch, each proved by a shift certificate.
//!
//! An entry is either direct (lhs is at most scale·2e(H) and rhs at least
//! scale·log_r |H|_r on its domain) or a reduction: a polynomial inequality
//! that the direct comparison follows from by monotonicity.

use super::gates::Step2Record;
use crate::catalog::{LieFamily, LieGroup};
use crate::qsymbolic::{
    prove_dominance, prove_dominance_in, prove_dominance_subst, DominanceProof, QPolynomial,
    Substitution,
};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::ops::RangeInclusive;

/// Ranks covered by the stored PSL corpus; other ranks are generated on demand.
pub const PSL_SWEEP_N: RangeInclusive<u32> = 4..=12;
pub const PSP_SWEEP_N: RangeInclusive<u32> = 2..=8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimeSel {
    Two,
    Odd,
}

/// Which q an entry claims. `TwistedTwo` entries are written in u with
/// q = 2u^2, u = 2^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QDomain {
    All,
    Odd,
    Even,
    OneMod4,
    ThreeMod4,
    TwistedTwo,
}

impl QDomain {
    pub fn contains(self, q: &BigUint) -> bool {
        match self {
            QDomain::All => true,
            QDomain::Odd => q.is_odd(),
            QDomain::Even => q.is_even(),
            QDomain::OneMod4 => (q % 4u32) == BigUint::from(1u32),
            QDomain::ThreeMod4 => (q % 4u32) == BigUint::from(3u32),
            QDomain::TwistedTwo => twisted_u(q).is_some(),
        }
    }
}

/// u with q = 2u^2 and u a power of 2.
fn twisted_u(q: &BigUint) -> Option<BigUint> {
    let bits = q.bits();
    if q.count_ones() != 1 || !bits.is_multiple_of(2) || bits < 2 {
        return None;
    }
    Some(BigUint::from(1u32) << ((bits - 2) / 2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    /// Family id as in `LieFamily::id`.
    pub family: String,
    pub n: Option<u32>,
    pub case: String,
    /// None for auxiliary comparisons that carry no prime.
    pub prime: Option<PrimeSel>,
    /// Admissible j = d_q(r); empty means every j.
    pub j: Vec<u64>,
    pub domain: QDomain,
    /// Smallest q the entry claims.
    pub q_min: u64,
    pub direct: bool,
    pub scale: u32,
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
}

impl CorpusEntry {
    /// Shift certificate for lhs > rhs over the entry's domain.
    pub fn prove(&self) -> DominanceProof {
        let qm = self.q_min as i64;
        let ceil = |a: i64, d: i64| (a + d - 1).div_euclid(d).max(0);
        match self.domain {
            QDomain::All => prove_dominance(&self.lhs, &self.rhs, qm),
            QDomain::Odd => {
                prove_dominance_subst(&self.lhs, &self.rhs, &Substitution::linear(2, 1, "s"), ceil(qm - 1, 2))
            }
            QDomain::Even => {
                prove_dominance_subst(&self.lhs, &self.rhs, &Substitution::linear(2, 0, "s"), ceil(qm, 2))
            }
            QDomain::OneMod4 => {
                prove_dominance_subst(&self.lhs, &self.rhs, &Substitution::linear(4, 1, "s"), ceil(qm - 1, 4))
            }
            QDomain::ThreeMod4 => {
                prove_dominance_subst(&self.lhs, &self.rhs, &Substitution::linear(4, 3, "s"), ceil(qm - 3, 4))
            }
            QDomain::TwistedTwo => {
                let mut u0 = 1i64;
                while 2 * u0 * u0 < qm {
                    u0 *= 2;
                }
                prove_dominance_in(&self.lhs, &self.rhs, "u", Some("u = 2^k, q = 2u^2"), u0)
            }
        }
    }

    fn matches_family(&self, g: &LieGroup) -> bool {
        let n = g.family.is_classical().then(|| g.family.rank_param());
        self.family == g.family.id() && self.n == n
    }

    /// Whether the entry covers the Step-2 instance (g, r, j).
    pub fn applies(&self, g: &LieGroup, r: &BigUint, j: u64) -> bool {
        let prime_ok = match self.prime {
            None => return false,
            Some(PrimeSel::Two) => r == &BigUint::from(2u32),
            Some(PrimeSel::Odd) => r.is_odd(),
        };
        prime_ok
            && self.matches_family(g)
            && (self.j.is_empty() || self.j.contains(&j))
            && self.domain.contains(g.q())
            && g.q() >= &BigUint::from(self.q_min)
    }

    /// The value of the entry's variable at q (u for twisted entries).
    pub fn variable_at(&self, q: &BigUint) -> Option<BigInt> {
        match self.domain {
            QDomain::TwistedTwo => twisted_u(q).map(BigInt::from),
            _ => Some(BigInt::from(q.clone())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicResult {
    pub id: String,
    pub case: String,
    pub proof: DominanceProof,
}

fn poly(c: &[i64]) -> QPolynomial {
    QPolynomial::from_i64(c)
}

fn mono(c: i64, k: usize) -> QPolynomial {
    QPolynomial::monomial(c, k)
}

/// q^a + q^(a+1) + ... + q^b
fn geometric(a: usize, b: usize) -> QPolynomial {
    let mut c = vec![0i64; b + 1];
    for x in c.iter_mut().take(b + 1).skip(a) {
        *x = 1;
    }
    poly(&c)
}

struct Builder {
    family: String,
    n: Option<u32>,
    out: Vec<CorpusEntry>,
}

impl Builder {
    fn new(family: &str, n: Option<u32>) -> Self {
        Builder { family: family.into(), n, out: vec![] }
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        tag: &str,
        case: &str,
        prime: Option<PrimeSel>,
        j: Vec<u64>,
        domain: QDomain,
        q_min: u64,
        direct: bool,
        lhs: QPolynomial,
        rhs: QPolynomial,
    ) -> &mut Self {
        let id = match self.n {
            Some(n) => format!("{}{n}:{tag}", self.family),
            None => format!("{}:{tag}", self.family),
        };
        self.out.push(CorpusEntry {
            id,
            family: self.family.clone(),
            n: self.n,
            case: case.into(),
            prime,
            j,
            domain,
            q_min,
            direct,
            scale: 1,
            lhs,
            rhs,
        });
        self
    }

    fn scaled(&mut self, k: u32) -> &mut Self {
        if let Some(e) = self.out.last_mut() {
            e.scale = k;
        }
        self
    }
}

use PrimeSel::{Odd as ODD, Two as TWO};
use QDomain::{All as ALL, Even as EVEN, Odd as QODD};

fn q2m1() -> QPolynomial {
    poly(&[-1, 0, 1])
}

/// 2·c·q^k·(q^2 − 1)
fn lhs_qk(c: i64, k: usize) -> QPolynomial {
    &mono(2 * c, k) * &q2m1()
}

fn exceptional_entries(fam: LieFamily) -> Vec<CorpusEntry> {
    let id = fam.id();
    let mut b = Builder::new(id, None);
    match fam {
        LieFamily::E8 => {
            let l = lhs_qk(1, 27);
            b.push("r2", "r = 2, q odd", Some(TWO), vec![], QODD, 3, true, l.clone(), mono(8, 2));
            b.push("j1", "j = 1", Some(ODD), vec![1], ALL, 2, true, l.clone(), mono(8, 1));
            b.push("j2-24", "2 <= j <= 24", Some(ODD), (2..=24).collect(), ALL, 2, true, l.clone(), mono(8, 24));
            b.push("j30", "j = 30", Some(ODD), vec![30], ALL, 2, true, l, mono(1, 16));
        }
        LieFamily::F4 => {
            let l = lhs_qk(1, 6);
            let aux = &(&mono(1, 7) * &poly(&[-1, 0, 0, 1])) * &poly(&[-1, 1]);
            b.push("even-bound", "q even: e(H) exceeds the odd-q bound", None, vec![], ALL, 3, false, aux, l.clone());
            b.push("r2", "r = 2, q odd", Some(TWO), vec![], QODD, 3, true, l.clone(), mono(4, 2));
            b.push("j1", "j = 1", Some(ODD), vec![1], ALL, 3, true, l.clone(), poly(&[-2, 4]));
            b.push("j2", "j = 2", Some(ODD), vec![2], ALL, 3, true, l.clone(), poly(&[-2, 0, 4]));
            b.push("j3-6", "j = 3, 4, 6", Some(ODD), vec![3, 4, 6], ALL, 3, true, l, mono(3, 6));
            b.push(
                "j8-12",
                "j = 8, 12",
                Some(ODD),
                vec![8, 12],
                ALL,
                3,
                true,
                &mono(1, 6) * &q2m1(),
                poly(&[1, 0, 0, 0, 0, 0, 1]),
            );
        }
        LieFamily::G2 => {
            let l = lhs_qk(1, 1);
            b.push("r2", "r = 2, q odd", Some(TWO), vec![], QODD, 5, true, l.clone(), poly(&[-2, 0, 2]));
            b.push("j1-2", "j = 1, 2", Some(ODD), vec![1, 2], ALL, 5, true, l.clone(), poly(&[-1, 0, 2]));
            b.push("j3", "j = 3", Some(ODD), vec![3], ALL, 5, true, l.clone(), poly(&[1, 1, 1]));
            b.push("j6", "j = 6", Some(ODD), vec![6], ALL, 5, true, l, poly(&[1, -1, 1]));
        }
        LieFamily::D4tw3 => {
            let l = lhs_qk(1, 3);
            b.push("r2", "r = 2, q odd", Some(TWO), vec![], QODD, 3, true, l.clone(), poly(&[-2, 0, 2]));
            b.push("j1-2", "j = 1, 2", Some(ODD), vec![1, 2], ALL, 2, true, l.clone(), mono(2, 2));
            b.push("j3-6", "j = 3, 6", Some(ODD), vec![3, 6], ALL, 2, true, l.clone(), poly(&[2, 2, 2]));
            b.push("j12", "j = 12", Some(ODD), vec![12], ALL, 2, true, l, poly(&[1, 0, -1, 0, 1]));
        }
        LieFamily::E7 => {
            let l = lhs_qk(1, 15);
            b.push("r2", "r = 2, q odd", Some(TWO), vec![], QODD, 3, true, l.clone(), mono(7, 2));
            b.push("j1-2", "j = 1, 2", Some(ODD), vec![1, 2], ALL, 2, true, l.clone(), mono(7, 2));
            b.push("j3-6", "j = 3, 6", Some(ODD), vec![3, 6], ALL, 2, true, l.clone(), mono(3, 3));
            b.push("j4", "j = 4", Some(ODD), vec![4], ALL, 2, true, l.clone(), mono(4, 2));
            b.push("j5-9", "j = 5, 7, 9", Some(ODD), vec![5, 7, 9], ALL, 2, true, l.clone(), mono(1, 9));
            b.push(
                "j8-18",
                "j even, 8 <= j <= 18",
                Some(ODD),
                vec![8, 10, 12, 14, 18],
                ALL,
                2,
                true,
                l,
                mono(2, 9),
            );
        }
        LieFamily::E6 { .. } => {
            let l = lhs_qk(1, 9);
            b.push("r2", "r = 2, q odd", Some(TWO), vec![], QODD, 3, true, l.clone(), mono(6, 2));
            b.push("j1-6", "1 <= j <= 6", Some(ODD), (1..=6).collect(), ALL, 2, true, l.clone(), mono(6, 6));
            b.push("j9", "j = 9", Some(ODD), vec![9], ALL, 2, true, l.clone(), mono(1, 9));
            b.push(
                "j8-18",
                "j even, 8 <= j <= 18",
                Some(ODD),
                vec![8, 10, 12, 18],
                ALL,
                2,
                true,
                l,
                mono(2, 9),
            );
        }
        LieFamily::B2tw2 => {
            // 2e = 2u(2u^2 - 1) in u = 2^k, q = 2u^2
            b.push(
                "odd",
                "r odd",
                Some(ODD),
                vec![],
                QDomain::TwistedTwo,
                32,
                true,
                poly(&[0, -2, 0, 4]),
                poly(&[1, 2, 2]),
            );
        }
        LieFamily::G2tw2 => {
            let l = poly(&[0, -2, 2]);
            b.push("r2", "r = 2", Some(TWO), vec![], ALL, 27, true, l.clone(), poly(&[3]));
            b.push("odd", "r odd, r != 3", Some(ODD), vec![], ALL, 27, true, l, poly(&[1, -1, 1]));
        }
        LieFamily::F4tw2 => {
            // 2e = 32u^9(2u^2 - 1)
            let l = &mono(32, 9) * &poly(&[-1, 0, 2]);
            let t = QDomain::TwistedTwo;
            b.push("j1-4", "j = 1, 2, 4", Some(ODD), vec![1, 2, 4], t, 8, true, l.clone(), mono(16, 4));
            b.push("j6", "j = 6", Some(ODD), vec![6], t, 8, true, l.clone(), mono(8, 4));
            b.push("j12", "j = 12", Some(ODD), vec![12], t, 8, true, l, mono(32, 8));
        }
        LieFamily::Psl { .. } | LieFamily::Psp { .. } => unreachable!(),
    }
    b.out
}

fn psl_entries(n: u32) -> Vec<CorpusEntry> {
    let nu = n as usize;
    let ni = n as i64;
    let mut b = Builder::new("PSL", Some(n));
    // 2e with κ = 1: 2(q + ... + q^(n-1) - 1)
    let l = &(&geometric(1, nu - 1) - &QPolynomial::one()) * &QPolynomial::constant(2);
    b.push("r2-1mod4", "r = 2, q ≡ 1 (mod 4)", Some(TWO), vec![], QDomain::OneMod4, 5, true, l.clone(), mono(ni, 1));
    b.push("r2-3mod4", "r = 2, q ≡ 3 (mod 4)", Some(TWO), vec![], QDomain::ThreeMod4, 3, true, l.clone(), poly(&[2 * ni, ni]));
    b.push("jn", "j = n", Some(ODD), vec![n as u64], ALL, 2, true, l.clone(), geometric(0, nu - 1));
    let mid: Vec<u64> = ((n / 2 + 1)..n).map(u64::from).collect();
    if !mid.is_empty() {
        b.push("jmid", "n/2 < j <= n - 1", Some(ODD), mid, ALL, 2, true, l, &mono(1, nu - 1) - &QPolynomial::one());
    }
    let q0 = match n {
        4 => 5,
        5..=8 => 3,
        _ => 2,
    };
    b.push(
        "jlow",
        "j <= n/2: q^(n-2) > n^2",
        Some(ODD),
        (1..=(n / 2) as u64).collect(),
        ALL,
        q0,
        false,
        mono(1, nu - 2),
        poly(&[ni * ni]),
    );
    b.out
}

fn psp_entries(n: u32) -> Vec<CorpusEntry> {
    let nu = n as usize;
    let ni = n as i64;
    let mut b = Builder::new("PSp", Some(n));
    let qn1 = &mono(1, nu) - &QPolynomial::one();
    // r = 2, q odd: 2e = q^n - 1 against log_2 < nq^2 - 1
    if n >= 3 {
        b.push("r2", "r = 2, q odd", Some(TWO), vec![], QODD, 3, true, qn1.clone(), poly(&[-2, 0, ni]));
    }
    // j odd
    if n % 2 == 1 {
        b.push("jn", "j = n odd, q > 2", Some(ODD), vec![n as u64], ALL, 3, true, qn1.clone(), geometric(0, nu - 1));
    }
    let mid_odd: Vec<u64> = ((n / 2 + 1)..n).filter(|j| j % 2 == 1).map(u64::from).collect();
    if !mid_odd.is_empty() {
        b.push(
            "jodd-mid",
            "j odd, n/2 < j <= n - 1",
            Some(ODD),
            mid_odd,
            ALL,
            2,
            true,
            qn1.clone(),
            &mono(1, nu - 1) - &QPolynomial::one(),
        );
    }
    let low_odd: Vec<u64> = (1..=n / 2).filter(|j| j % 2 == 1).map(u64::from).collect();
    if !low_odd.is_empty() {
        match n {
            2 => b.push("jodd-low", "j odd, j <= n/2, q >= 3", Some(ODD), low_odd, ALL, 3, true, qn1.clone(), poly(&[-2, 2])),
            3 => b.push("jodd-low", "j odd, j <= n/2, q >= 3", Some(ODD), low_odd, ALL, 3, true, qn1.clone(), poly(&[0, 3])),
            _ => b.push(
                "jodd-low",
                "j odd, j <= n/2, q >= 3: q^n > 4n^2 - 1",
                Some(ODD),
                low_odd,
                ALL,
                3,
                false,
                mono(1, nu),
                poly(&[4 * ni * ni - 1]),
            ),
        };
    }
    // j even
    let qn_plus1 = &mono(1, nu) + &QPolynomial::one();
    b.push(
        "j2n-odd",
        "j = 2n, q odd (doubled)",
        Some(ODD),
        vec![2 * n as u64],
        QODD,
        3,
        true,
        &qn1 * &QPolynomial::constant(2),
        qn_plus1.clone(),
    )
    .scaled(2);
    let qn1m = mono(1, nu - 1);
    let two_e_even = &(&qn1m * &(&qn1m - &QPolynomial::one())) * &poly(&[-1, 1]);
    b.push("j2n-even", "j = 2n, q even, q >= 4", Some(ODD), vec![2 * n as u64], EVEN, 4, true, two_e_even, qn_plus1);
    let high_even: Vec<u64> = ((n + 1)..(2 * n)).filter(|j| j % 2 == 0).map(u64::from).collect();
    if !high_even.is_empty() {
        b.push(
            "jeven-high",
            "j even, n < j < 2n",
            Some(ODD),
            high_even,
            ALL,
            2,
            true,
            qn1.clone(),
            &qn1m + &QPolynomial::one(),
        );
    }
    let low_even: Vec<u64> = (2..=n).filter(|j| j % 2 == 0).map(u64::from).collect();
    if !low_even.is_empty() {
        let q0 = if n >= 4 { 2 } else { 4 };
        b.push(
            "jeven-low-qeven",
            "j even, j <= n, q even: q^n > 4n - 1",
            Some(ODD),
            low_even.clone(),
            EVEN,
            q0,
            false,
            mono(1, nu),
            poly(&[4 * ni - 1]),
        );
        match n {
            2 => {
                b.push("jeven-low-qodd", "j = 2, q odd", Some(ODD), vec![2], QODD, 5, true, qn1.clone(), poly(&[2, 2]));
            }
            3 => {
                b.push("jeven-low-qodd", "j = 2, q odd", Some(ODD), vec![2], QODD, 3, true, qn1.clone(), poly(&[4, 3]));
            }
            4 => {
                b.push("jeven-low-qodd-2", "j = 2, q odd", Some(ODD), vec![2], QODD, 3, true, qn1.clone(), poly(&[5, 4]));
                b.push("jeven-low-qodd-4", "j = 4, q odd", Some(ODD), vec![4], QODD, 3, true, qn1.clone(), poly(&[2, 0, 2]));
            }
            _ => {
                b.push(
                    "jeven-low-qodd",
                    "j even, j <= n, q odd: q^n > 4n^2",
                    Some(ODD),
                    low_even,
                    QODD,
                    3,
                    false,
                    mono(1, nu),
                    poly(&[4 * ni * ni]),
                );
            }
        }
    }
    b.out
}

/// Entries for one family; classical families carry their rank.
pub fn corpus_for(family: LieFamily) -> Vec<CorpusEntry> {
    match family {
        LieFamily::Psl { n } => psl_entries(n),
        LieFamily::Psp { n } => psp_entries(n),
        f => exceptional_entries(f),
    }
}

/// The stored corpus: every exceptional family, PSL_n for n in
/// `PSL_SWEEP_N` and PSp_2n for n in `PSP_SWEEP_N`.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut v: Vec<CorpusEntry> = LieFamily::exceptional().into_iter().flat_map(corpus_for).collect();
    v.extend(PSL_SWEEP_N.flat_map(psl_entries));
    v.extend(PSP_SWEEP_N.flat_map(psp_entries));
    v
}

pub fn prove_entries(entries: &[CorpusEntry]) -> Vec<SymbolicResult> {
    entries
        .par_iter()
        .map(|e| SymbolicResult { id: e.id.clone(), case: e.case.clone(), proof: e.prove() })
        .collect()
}

/// Prove every entry of a family.
pub fn run_symbolic_sweep(family: LieFamily) -> Vec<SymbolicResult> {
    prove_entries(&corpus_for(family))
}

/// One comparison of a symbolic entry against a numeric Step-2 record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub entry: String,
    #[serde(with = "crate::bigstr::uint")]
    pub r: BigUint,
    pub j: u64,
    pub proven: bool,
    pub numeric_pass: bool,
    /// lhs(q) <= scale·2e, for direct entries.
    pub lhs_ok: Option<bool>,
    /// rhs(q) >= scale·log_r |H|_r, for direct entries.
    pub rhs_ok: Option<bool>,
    pub consistent: bool,
}

/// Every entry covering a Step-2 record of g must agree with it: a proven
/// entry forces the numeric gate to pass, and a direct entry's sides must
/// bracket the exact values.
pub fn cross_check(g: &LieGroup, step2: &[Step2Record], entries: &[CorpusEntry], proofs: &[SymbolicResult]) -> Vec<CrossCheck> {
    let mut out = Vec::new();
    for rec in step2.iter().filter(|r| r.sylow_exponent > 0) {
        for e in entries.iter().filter(|e| e.applies(g, &rec.r, rec.j)) {
            let proven = proofs.iter().find(|p| p.id == e.id).map(|p| p.proof.is_proven()).unwrap_or(false);
            let numeric_pass = rec.verdict.passed();
            let (lhs_ok, rhs_ok) = match (e.direct, e.variable_at(g.q())) {
                (true, Some(v)) => {
                    let k = BigInt::from(e.scale);
                    let two_e = BigInt::from(rec.e.clone()) * 2u32 * &k;
                    let exp = BigInt::from(rec.sylow_exponent) * &k;
                    (Some(e.lhs.eval(&v) <= two_e), Some(e.rhs.eval(&v) >= exp))
                }
                (true, None) => (Some(false), Some(false)),
                _ => (None, None),
            };
            let consistent = (!proven || numeric_pass) && lhs_ok != Some(false) && rhs_ok != Some(false);
            out.push(CrossCheck { entry: e.id.clone(), r: rec.r.clone(), j: rec.j, proven, numeric_pass, lhs_ok, rhs_ok, consistent });
        }
    }
    out
}
