//! Integer polynomials in q and a shift-certificate prover for
//! inequalities p(q) > s(q) over all integers q >= q0.

mod poly;
mod prove;

pub use poly::{order_polynomial, poly_from_factors, QPolynomial};
pub use prove::{
    prove_dominance, prove_dominance_in, prove_dominance_subst, prove_log_gate,
    prove_log_gate_subst, tz1_sandwich, DominanceProof, ProofMethod, Substitution, Verdict,
    FALLBACK_SPAN,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QError {
    #[error("inexact division: {0}")]
    NonExact(String),
}
