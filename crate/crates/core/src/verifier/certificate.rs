//! Assembling a certificate for one instance and writing it as canonical
//! JSON (sorted keys, big integers as strings, no floats).

use super::corpus::{corpus_for, cross_check, prove_entries, CrossCheck, SymbolicResult};
use super::gates::{
    step1_gate, step2_gate, step3_gate, step4_psl_gate, GateVerdict, Step1Record, Step1Verdict,
    Step2Record, Step3Record, Step3Verdict, Step4Record,
};
use super::VerifyError;
use crate::catalog::{cited_facts_for, order, order_factorization, CitedFact, LieFamily, LieGroup};
use crate::chartab::{Caps, TableCache};
use crate::exactnum::{Factorization, Sign};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: Option<u32>,
    #[serde(with = "crate::bigstr::uint")]
    pub q: BigUint,
    #[serde(with = "crate::bigstr::uint")]
    pub p: BigUint,
    pub f: u32,
    /// "+" or "-" for E6, absent elsewhere.
    pub eps: Option<Sign>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum FactStatus {
    AssumedCited,
}

/// A cited fact as it appears in a certificate. Its status is always
/// ASSUMED-CITED: nothing here is recomputed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedFact {
    pub key: String,
    pub subject: String,
    pub statement: String,
    pub citation: String,
    pub status: FactStatus,
}

impl From<CitedFact> for CertifiedFact {
    fn from(f: CitedFact) -> Self {
        CertifiedFact {
            key: f.key,
            subject: f.subject,
            statement: f.statement,
            citation: f.citation,
            status: FactStatus::AssumedCited,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Pass,
    GateFail,
    /// Every gate passed, but a residual case is left open (PSp natural module).
    PartialPerPaper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub family: String,
    pub name: String,
    pub params: Params,
    #[serde(with = "crate::bigstr::uint")]
    pub order: BigUint,
    pub order_factorization: Factorization,
    pub step1: Vec<Step1Record>,
    pub step2: Vec<Step2Record>,
    pub step3: Step3Record,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step4: Option<Step4Record>,
    pub symbolic: Vec<SymbolicResult>,
    pub cross_checks: Vec<CrossCheck>,
    pub cited_facts: Vec<CertifiedFact>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl Certificate {
    pub fn group(&self) -> Result<LieGroup, VerifyError> {
        let fam = LieFamily::parse(&self.family, self.params.n)?;
        Ok(LieGroup::new(fam, crate::exactnum::PrimePower::from_value(&self.params.q)?)?)
    }

    /// Everything except the timestamp.
    pub fn same_content(&self, other: &Certificate) -> bool {
        let mut a = self.clone();
        let mut b = other.clone();
        a.timestamp = None;
        b.timestamp = None;
        a == b
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub caps: Caps,
    pub cache: Option<TableCache>,
    /// Include the family's symbolic entries and their cross-checks.
    pub symbolic: bool,
    pub timestamp: Option<String>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { caps: Caps::default(), cache: None, symbolic: true, timestamp: None }
    }
}

pub fn run_certificate_for(family: LieFamily, q: u64, opts: &RunOptions) -> Result<Certificate, VerifyError> {
    run_certificate(&LieGroup::from_u64(family, q)?, opts)
}

pub fn run_certificate(g: &LieGroup, opts: &RunOptions) -> Result<Certificate, VerifyError> {
    let ord = order(g);
    let fact = order_factorization(g)?;
    if fact.value() != ord {
        return Err(VerifyError::Precondition(format!("factorization of |{}| does not multiply back", g.name())));
    }
    let step1 = step1_gate(g, &opts.caps, opts.cache.as_ref())?;
    let primes: Vec<BigUint> = fact.primes().filter(|r| *r != g.p()).cloned().collect();
    let mut step2 = primes.par_iter().map(|r| step2_gate(g, r)).collect::<Result<Vec<_>, _>>()?;
    step2.sort_by(|a, b| a.r.cmp(&b.r));
    let covered: BTreeSet<&BigUint> = step2.iter().map(|s| &s.r).collect();
    if covered.len() != primes.len() {
        return Err(VerifyError::Precondition("Step 2 does not cover every prime r != p".into()));
    }
    let step3 = step3_gate(g)?;
    let step4 = match (g.family, step3.verdict) {
        (LieFamily::Psl { n }, Step3Verdict::Residual) => Some(step4_psl_gate(n, &g.q)?),
        _ => None,
    };
    let (symbolic, cross_checks) = if opts.symbolic {
        let entries = corpus_for(g.family);
        let proofs = prove_entries(&entries);
        let cc = cross_check(g, &step2, &entries, &proofs);
        (proofs, cc)
    } else {
        (vec![], vec![])
    };

    let mut notes = Vec::new();
    let mut failed = false;
    for s in &step1 {
        if s.verdict == Step1Verdict::Inconclusive {
            failed = true;
            notes.push(format!("Step 1 inconclusive at r = {}", s.r));
        }
    }
    for s in &step2 {
        if s.verdict == GateVerdict::GateFail {
            failed = true;
            notes.push(format!("Step 2 fails at r = {}: {}", s.r, s.gate));
        }
    }
    if step3.verdict == Step3Verdict::GateFail {
        failed = true;
        notes.push(format!("Step 3 fails: {} <= {}", step3.lhs, step3.rhs));
    }
    if let Some(s4) = &step4 {
        if s4.verdict == GateVerdict::GateFail {
            failed = true;
            notes.push("Step 4 fails".into());
        }
    }
    if let Some(p) = symbolic.iter().find(|p| !p.proof.is_proven()) {
        failed = true;
        notes.push(format!("symbolic entry {} not proven", p.id));
    }
    if let Some(c) = cross_checks.iter().find(|c| !c.consistent) {
        failed = true;
        notes.push(format!("symbolic entry {} disagrees with r = {}", c.entry, c.r));
    }
    let residual_open = step3.verdict == Step3Verdict::Residual && step4.is_none();
    if let Some(r) = &step3.residual {
        notes.push(format!("Step 3 residual: {r}"));
    }
    let verdict = if failed {
        Verdict::GateFail
    } else if residual_open || matches!(g.family, LieFamily::Psp { .. }) {
        Verdict::PartialPerPaper
    } else {
        Verdict::Pass
    };

    let eps = match g.family {
        LieFamily::E6 { eps } => Some(eps),
        _ => None,
    };
    Ok(Certificate {
        family: g.family.id().into(),
        name: g.name(),
        params: Params {
            n: g.family.is_classical().then(|| g.family.rank_param()),
            q: g.q().clone(),
            p: g.p().clone(),
            f: g.f(),
            eps,
        },
        order: ord,
        order_factorization: fact,
        step1,
        step2,
        step3,
        step4,
        symbolic,
        cross_checks,
        cited_facts: cited_facts_for(g).into_iter().map(CertifiedFact::from).collect(),
        notes,
        verdict,
        version: VERSION.into(),
        timestamp: opts.timestamp.clone(),
    })
}

/// Pretty JSON with keys sorted at every level.
pub fn canonical_json(cert: &Certificate) -> String {
    let v = serde_json::to_value(cert).expect("certificate serializes");
    serde_json::to_string_pretty(&v).expect("value serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn no_floats(v: &Value) -> bool {
        match v {
            Value::Number(n) => !n.is_f64(),
            Value::Array(a) => a.iter().all(no_floats),
            Value::Object(o) => o.values().all(no_floats),
            _ => true,
        }
    }

    #[test]
    fn g2_3_certificate() {
        let c = run_certificate_for(LieFamily::G2, 3, &RunOptions::default()).unwrap();
        let rs: Vec<String> = c.step2.iter().map(|s| s.r.to_string()).collect();
        assert_eq!(rs, ["2", "7", "13"]);
        assert_eq!(c.order, BigUint::from(4245696u32));
        assert_eq!(c.verdict, Verdict::Pass);
        assert!(c.cited_facts.iter().any(|f| f.key == "3.G2(3):27"));
        let json = canonical_json(&c);
        let v: Value = serde_json::from_str(&json).unwrap();
        assert!(no_floats(&v));
        assert!(!json.contains("VERIFIED"));
        assert!(v.get("timestamp").is_none());
    }

    #[test]
    fn suzuki_8_certificate() {
        let c = run_certificate_for(LieFamily::B2tw2, 8, &RunOptions::default()).unwrap();
        let rs: Vec<String> = c.step2.iter().map(|s| s.r.to_string()).collect();
        assert_eq!(rs, ["5", "7", "13"]);
        assert_eq!(c.step1.len(), 1);
        assert_eq!(c.step1[0].witness.as_deref(), Some("40"));
        assert_eq!(c.verdict, Verdict::Pass);
    }

    #[test]
    fn rejected_instance() {
        let e = run_certificate_for(LieFamily::Psl { n: 4 }, 2, &RunOptions::default()).unwrap_err();
        assert!(matches!(e, VerifyError::Catalog(_)));
    }

    #[test]
    fn psp_is_partial() {
        for (n, q) in [(2, 5), (3, 3), (4, 3)] {
            let c = run_certificate_for(LieFamily::Psp { n }, q, &RunOptions::default()).unwrap();
            assert_eq!(c.verdict, Verdict::PartialPerPaper, "PSp {n} {q}: {:?}", c.notes);
        }
    }

    #[test]
    fn psl_residual_goes_to_step4() {
        let c = run_certificate_for(LieFamily::Psl { n: 5 }, 2, &RunOptions::default()).unwrap();
        assert_eq!(c.step3.verdict, Step3Verdict::Residual);
        assert_eq!(c.step4.as_ref().unwrap().degree, BigUint::from(434u32));
        assert_eq!(c.verdict, Verdict::Pass, "{:?}", c.notes);
        let c = run_certificate_for(LieFamily::Psl { n: 4 }, 3, &RunOptions::default()).unwrap();
        assert!(c.step4.is_none());
    }

    #[test]
    fn replay_is_deterministic() {
        let opts = RunOptions { timestamp: Some("2026-01-01T00:00:00Z".into()), ..RunOptions::default() };
        let c = run_certificate_for(LieFamily::F4, 3, &opts).unwrap();
        let json = canonical_json(&c);
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let again = run_certificate(&back.group().unwrap(), &RunOptions::default()).unwrap();
        assert!(again.same_content(&back));
        assert_ne!(again, back);
        assert_eq!(canonical_json(&again), canonical_json(&run_certificate(&c.group().unwrap(), &RunOptions::default()).unwrap()));
    }

    #[test]
    fn step2_covers_all_primes() {
        let c = run_certificate_for(LieFamily::E7, 3, &RunOptions::default()).unwrap();
        let want: Vec<BigUint> = c.order_factorization.primes().filter(|r| *r != &c.params.p).cloned().collect();
        let got: Vec<BigUint> = c.step2.iter().map(|s| s.r.clone()).collect();
        assert_eq!(want, got);
        assert!(c.step1.iter().all(|s| s.verdict != Step1Verdict::Inconclusive));
    }
}
