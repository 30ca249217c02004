//! Exact character tables of small permutation groups (Dixon–Schneider over
//! a prime field, lifted to cyclotomic integers) and the codegree sets
//! derived from them.

mod cache;
mod classes;
mod codegree;
mod cyclo;
mod group;
pub mod library;
pub mod modp;
mod parse;
mod perm;
mod quotient;
mod table;

pub use cache::{cached_character_table, TableCache, CACHE_ENV};
pub use classes::{conjugacy_classes, ConjugacyClasses};
pub use codegree::{
    character_degrees, codegrees, faithful_degrees, kernel_classes, kernel_order, step1_witness_check,
    witness_from_table, CharacterCodegree, CodegreeSet, FaithfulDegreeCheck, WitnessReport,
    WitnessVerdict,
};
pub use cyclo::{Cyclo, CycloBasis};
pub use group::PermGroup;
pub use parse::{parse_cycles, GroupInput};
pub use perm::Perm;
pub use quotient::{block_action, center_elements, central_quotient, coset_action};
pub use table::{character_table, class_matrix, table_from_classes, CharacterTable};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Desk-scale limits. Groups beyond them are refused, never truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_order: u64,
    pub max_classes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_order: 200_000, max_classes: 120 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChartabError {
    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCap { order: String, cap: u64 },
    #[error("more than {cap} conjugacy classes (class cap {cap})")]
    ClassCap { cap: usize },
    #[error("group file: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal failure: {0}")]
    Internal(String),
    #[error("cache: {0}")]
    Cache(String),
}

impl ChartabError {
    pub fn is_cap(&self) -> bool {
        matches!(self, ChartabError::OrderCap { .. } | ChartabError::ClassCap { .. })
    }
}
