//! Per-instance certificates for the four gates (covers, cross
//! characteristic, defining characteristic, natural-module residue) and the
//! symbolic all-q sweep.

mod certificate;
mod corpus;
mod gates;
mod report;

pub use certificate::{
    canonical_json, run_certificate, run_certificate_for, CertifiedFact, Certificate, FactStatus, Params,
    RunOptions, Verdict, VERSION,
};
pub use corpus::{
    corpus, corpus_for, cross_check, prove_entries, run_symbolic_sweep, CorpusEntry, CrossCheck, PrimeSel,
    QDomain, SymbolicResult, PSL_SWEEP_N, PSP_SWEEP_N,
};
pub use gates::{
    step1_gate, step2_gate, step3_gate, step3_tensor_ledger, step4_arith, step4_psl_gate,
    Check, GateVerdict, LedgerCase, LedgerVerdict, Step1Mode, Step1Record, Step1Verdict, Step2Record,
    Step3Record, Step3Verdict, Step4Record,
};
pub use report::markdown_report;

use crate::catalog::CatalogError;
use crate::chartab::ChartabError;
use crate::exactnum::NumberError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl VerifyError {
    /// Bad parameters as opposed to a resource cap or an internal failure.
    pub fn is_bad_params(&self) -> bool {
        matches!(
            self,
            VerifyError::Catalog(CatalogError::Inadmissible(_) | CatalogError::UnknownFamily(_))
                | VerifyError::Precondition(_)
                | VerifyError::Number(NumberError::NotPrimePower(_) | NumberError::NotPrime(_))
        )
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, VerifyError::Chartab(e) if e.is_cap())
    }
}
