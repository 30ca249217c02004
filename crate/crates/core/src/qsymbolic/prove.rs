use super::QPolynomial;
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// Largest gap between the requested threshold and the fallback threshold;
/// every integer in between is checked directly.
pub const FALLBACK_SPAN: i64 = 1 << 12;

/// Reparameterization of q by a polynomial in a new variable, used for
/// parity-constrained domains such as q = 2s + 1 or q = 2u^2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    /// e.g. "q = 2s + 1"
    pub label: String,
    pub var: String,
    /// q as a polynomial in `var`.
    pub q_of: QPolynomial,
}

impl Substitution {
    /// q = a·var + b
    pub fn linear(a: i64, b: i64, var: &str) -> Self {
        let q_of = QPolynomial::from_i64(&[b, a]);
        Substitution { label: format!("q = {}", q_of.to_string_in(var)), var: var.into(), q_of }
    }

    /// q = c·var^k
    pub fn monomial(c: i64, k: usize, var: &str) -> Self {
        let q_of = QPolynomial::monomial(c, k);
        Substitution { label: format!("q = {}", q_of.to_string_in(var)), var: var.into(), q_of }
    }

    /// Attach a note to the label, e.g. the meaning of the new variable.
    pub fn with_note(mut self, note: &str) -> Self {
        self.label = format!("{} ({note})", self.label);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Proven,
    NotProven,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProofMethod {
    /// All coefficients of (lhs − rhs)(q0 + t) are nonnegative.
    Shift,
    /// Shift certificate at `shift_at`, plus direct evaluation at every
    /// integer in [q0, shift_at).
    Fallback { shift_at: i64, checked_from: i64, checked_to: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceProof {
    pub lhs: QPolynomial,
    pub rhs: QPolynomial,
    /// Proof variable ("q" unless a substitution was applied or the
    /// inequality was stated in another variable).
    pub variable: String,
    pub substitution: Option<Substitution>,
    /// Meaning of `variable` when the sides were stated in it directly,
    /// e.g. "u = 2^n, q = 2u^2".
    pub domain: Option<String>,
    /// The polynomial shown positive, in `variable`.
    pub difference: QPolynomial,
    /// Threshold for `variable`.
    pub q0: i64,
    #[serde(with = "crate::bigstr::int_vec")]
    pub shifted_coeffs: Vec<BigInt>,
    pub method: ProofMethod,
    pub verdict: Verdict,
    /// (index, value) of the first negative shifted coefficient when the
    /// proof fails, or of a failing integer point ("point", value).
    pub failure: Option<String>,
}

impl DominanceProof {
    pub fn is_proven(&self) -> bool {
        self.verdict == Verdict::Proven
    }

    /// The threshold at which the shift certificate holds.
    pub fn shift_point(&self) -> i64 {
        match self.method {
            ProofMethod::Shift => self.q0,
            ProofMethod::Fallback { shift_at, .. } => shift_at,
        }
    }

    /// Re-verify the certificate from scratch.
    pub fn recheck(&self) -> bool {
        let expect = match &self.substitution {
            Some(s) => &self.lhs.compose(&s.q_of) - &self.rhs.compose(&s.q_of),
            None => &self.lhs - &self.rhs,
        };
        if expect != self.difference {
            return false;
        }
        let shifted = self.difference.shift(&BigInt::from(self.shift_point()));
        if shifted.coeffs() != self.shifted_coeffs.as_slice() {
            return false;
        }
        let shift_ok = certificate_ok(&self.shifted_coeffs);
        let points_ok = match self.method {
            ProofMethod::Shift => true,
            ProofMethod::Fallback { checked_from, checked_to, .. } => (checked_from..checked_to)
                .all(|x| self.difference.eval_i64(x).is_positive()),
        };
        (shift_ok && points_ok) == self.is_proven()
    }
}

fn certificate_ok(c: &[BigInt]) -> bool {
    !c.is_empty() && c[0].is_positive() && c.iter().all(|x| !x.is_negative())
}

fn first_bad(c: &[BigInt]) -> String {
    if c.is_empty() || !c[0].is_positive() {
        return format!("t^0 coefficient {}", c.first().cloned().unwrap_or_default());
    }
    let (i, v) = c.iter().enumerate().find(|(_, x)| x.is_negative()).unwrap();
    format!("t^{i} coefficient {v}")
}

fn prove_difference(
    lhs: QPolynomial,
    rhs: QPolynomial,
    variable: &str,
    substitution: Option<Substitution>,
    difference: QPolynomial,
    q0: i64,
) -> DominanceProof {
    let shifted = difference.shift(&BigInt::from(q0));
    let coeffs = shifted.coeffs().to_vec();
    let mut proof = DominanceProof {
        lhs,
        rhs,
        variable: variable.into(),
        substitution,
        domain: None,
        difference,
        q0,
        shifted_coeffs: coeffs.clone(),
        method: ProofMethod::Shift,
        verdict: Verdict::Proven,
        failure: None,
    };
    if certificate_ok(&coeffs) {
        return proof;
    }
    let failure = first_bad(&coeffs);
    // Fallback: a larger threshold and direct checks below it. Only worth
    // trying when the difference eventually dominates.
    if proof.difference.leading().is_positive() {
        let mut step = 1i64;
        while step <= FALLBACK_SPAN {
            let q1 = q0 + step;
            let c1 = proof.difference.shift(&BigInt::from(q1));
            if certificate_ok(c1.coeffs()) {
                let bad = (q0..q1).find(|&x| !proof.difference.eval_i64(x).is_positive());
                if let Some(x) = bad {
                    proof.verdict = Verdict::NotProven;
                    proof.failure = Some(format!(
                        "value {} at {variable} = {x}",
                        proof.difference.eval_i64(x)
                    ));
                    return proof;
                }
                proof.shifted_coeffs = c1.coeffs().to_vec();
                proof.method =
                    ProofMethod::Fallback { shift_at: q1, checked_from: q0, checked_to: q1 };
                return proof;
            }
            step *= 2;
        }
    }
    proof.verdict = Verdict::NotProven;
    proof.failure = Some(failure);
    proof
}

/// Certify lhs(q) > rhs(q) for every integer q >= q0.
pub fn prove_dominance(lhs: &QPolynomial, rhs: &QPolynomial, q0: i64) -> DominanceProof {
    let diff = lhs - rhs;
    prove_difference(lhs.clone(), rhs.clone(), "q", None, diff, q0)
}

/// Certify lhs(q) > rhs(q) for every q = subst(s) with integer s >= s0.
pub fn prove_dominance_subst(
    lhs: &QPolynomial,
    rhs: &QPolynomial,
    subst: &Substitution,
    s0: i64,
) -> DominanceProof {
    let diff = &lhs.compose(&subst.q_of) - &rhs.compose(&subst.q_of);
    prove_difference(lhs.clone(), rhs.clone(), &subst.var.clone(), Some(subst.clone()), diff, s0)
}

/// Certify lhs > rhs where both sides are already written in `var`
/// (e.g. u = 2^n for Suzuki groups with q = 2u^2).
pub fn prove_dominance_in(
    lhs: &QPolynomial,
    rhs: &QPolynomial,
    var: &str,
    note: Option<&str>,
    v0: i64,
) -> DominanceProof {
    let diff = lhs - rhs;
    let mut p = prove_difference(lhs.clone(), rhs.clone(), var, None, diff, v0);
    p.domain = note.map(str::to_string);
    p
}

/// The Step-2 gate 2m > log_r(|H|_r): `mbound` is the lower bound for m and
/// `log_bound` an upper bound for log_r(|H|_r).
pub fn prove_log_gate(mbound: &QPolynomial, log_bound: &QPolynomial, q0: i64) -> DominanceProof {
    prove_dominance(&mbound.scale(&BigInt::from(2)), log_bound, q0)
}

pub fn prove_log_gate_subst(
    mbound: &QPolynomial,
    log_bound: &QPolynomial,
    subst: &Substitution,
    s0: i64,
) -> DominanceProof {
    prove_dominance_subst(&mbound.scale(&BigInt::from(2)), log_bound, subst, s0)
}

/// Both halves of 1/2 < Π(q^{a_i} + e_i)/q^{Σa_i} < 2 for q >= 2, with
/// e_i ∈ {+1, −1}.
pub fn tz1_sandwich(exps: &[usize], signs: &[i64]) -> (DominanceProof, DominanceProof) {
    assert_eq!(exps.len(), signs.len());
    let mut prod = QPolynomial::one();
    for (&a, &e) in exps.iter().zip(signs) {
        prod = &prod * &QPolynomial::binomial(a, e);
    }
    let total: usize = exps.iter().sum();
    let qa = QPolynomial::monomial(1, total);
    let two = BigInt::from(2);
    let lower = prove_dominance(&prod.scale(&two), &qa, 2);
    let upper = prove_dominance(&qa.scale(&two), &prod, 2);
    (lower, upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64(c)
    }

    #[test]
    fn e8_example() {
        // 2q^27(q^2-1) > 8q^24
        let lhs = QPolynomial::monomial(2, 27) * p(&[-1, 0, 1]);
        let rhs = QPolynomial::monomial(8, 24);
        let pr = prove_dominance(&lhs, &rhs, 2);
        assert!(pr.is_proven());
        assert!(pr.recheck());
    }

    #[test]
    fn d4_example() {
        let lhs = QPolynomial::monomial(2, 3) * p(&[-1, 0, 1]);
        let rhs = p(&[2, 2, 2]);
        assert!(prove_dominance(&lhs, &rhs, 2).is_proven());
    }

    #[test]
    fn refuses_falsehoods() {
        let q = QPolynomial::q();
        let pr = prove_dominance(&q, &q, 2);
        assert!(!pr.is_proven());
        assert!(pr.recheck());
        let pr = prove_dominance(&p(&[0, 0, 1]), &p(&[0, 0, 0, 1]), 2);
        assert!(!pr.is_proven());
        assert!(pr.failure.is_some());
        // true only from q = 6 on: q^2 > 5q
        let pr = prove_dominance(&p(&[0, 0, 1]), &p(&[0, 5]), 2);
        assert!(!pr.is_proven());
    }

    #[test]
    fn fallback_path() {
        // q^2 - 5q + 7 has no real root, but at q0 = 2 the expansion is
        // t^2 - t + 1.
        let lhs = p(&[7, -5, 1]);
        let pr = prove_dominance(&lhs, &QPolynomial::zero(), 2);
        assert!(pr.is_proven());
        assert!(matches!(pr.method, ProofMethod::Fallback { .. }));
        assert!(pr.recheck());
        // (q-2)^3 + 1 vanishes at q = 1
        let pr = prove_dominance(&p(&[-7, 12, -6, 1]), &QPolynomial::zero(), 1);
        assert!(!pr.is_proven());
    }

    #[test]
    fn odd_substitution() {
        // q^2 - 1 > 7 for odd q >= 3, via q = 2s + 1, s >= 1
        let s = Substitution::linear(2, 1, "s");
        let pr = prove_dominance_subst(&p(&[-1, 0, 1]), &p(&[7]), &s, 1);
        assert!(pr.is_proven());
        assert_eq!(s.label, "q = 2s + 1");
        assert!(pr.recheck());
    }

    #[test]
    fn tampered_certificate_fails_recheck() {
        let mut pr = prove_dominance(&p(&[0, 0, 2]), &p(&[1]), 2);
        assert!(pr.recheck());
        pr.shifted_coeffs[0] += 1;
        assert!(!pr.recheck());
    }
}
