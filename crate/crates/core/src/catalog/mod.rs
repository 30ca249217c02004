//! Family data for the simple groups of Lie type handled by the verifier:
//! order formulas, Sylow parts, dimension bounds, Schur multipliers and
//! cited facts that are not recomputed here.

mod bounds;
mod cited;
mod dump;
mod order;

pub use bounds::{
    exceptional_degree_d, kappa, lsz_bound, min_module_dim, schur_order, schur_structure,
    second_min_dim, DegreeData,
};
pub use cited::{
    cited_cover_witness, cited_fact, cited_facts, cited_facts_for, CitedFact, FactKind, FactScope,
    FactSource,
};
pub use dump::{catalog_families, catalog_json, family_record, FamilyRecord};
pub use order::{
    order, order_factorization, order_formula, sylow_order, sylow_profile, suzuki_factored_order,
    CenterDivisor, CyclicFactor, OrderFormula, SylowProfile,
};

use crate::exactnum::{NumberError, PrimePower, Sign};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("rejected: {0}")]
    Rejected(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Number(#[from] NumberError),
}

/// A family of simple groups of Lie type. Rank parameters are carried only
/// by the classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum LieFamily {
    E8,
    F4,
    G2,
    D4tw3,
    E6 { eps: Sign },
    E7,
    B2tw2,
    G2tw2,
    F4tw2,
    Psl { n: u32 },
    Psp { n: u32 },
}

impl LieFamily {
    /// Short identifier used in file names and on the command line.
    pub fn id(&self) -> &'static str {
        match self {
            LieFamily::E8 => "E8",
            LieFamily::F4 => "F4",
            LieFamily::G2 => "G2",
            LieFamily::D4tw3 => "3D4",
            LieFamily::E6 { eps: Sign::Plus } => "E6",
            LieFamily::E6 { eps: Sign::Minus } => "2E6",
            LieFamily::E7 => "E7",
            LieFamily::B2tw2 => "2B2",
            LieFamily::G2tw2 => "2G2",
            LieFamily::F4tw2 => "2F4",
            LieFamily::Psl { .. } => "PSL",
            LieFamily::Psp { .. } => "PSp",
        }
    }

    /// Rank-type parameter: n for PSL_n / PSp_2n, the Lie rank otherwise.
    pub fn rank_param(&self) -> u32 {
        match *self {
            LieFamily::E8 => 8,
            LieFamily::F4 | LieFamily::D4tw3 | LieFamily::F4tw2 => 4,
            LieFamily::G2 | LieFamily::B2tw2 | LieFamily::G2tw2 => 2,
            LieFamily::E6 { .. } => 6,
            LieFamily::E7 => 7,
            LieFamily::Psl { n } | LieFamily::Psp { n } => n,
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, LieFamily::Psl { .. } | LieFamily::Psp { .. })
    }

    /// All exceptional families (both signs of E6).
    pub fn exceptional() -> Vec<LieFamily> {
        vec![
            LieFamily::E8,
            LieFamily::F4,
            LieFamily::G2,
            LieFamily::D4tw3,
            LieFamily::E6 { eps: Sign::Plus },
            LieFamily::E6 { eps: Sign::Minus },
            LieFamily::E7,
            LieFamily::B2tw2,
            LieFamily::G2tw2,
            LieFamily::F4tw2,
        ]
    }

    /// Parse a family id; `n` is required for PSL and PSp.
    pub fn parse(id: &str, n: Option<u32>) -> Result<LieFamily, CatalogError> {
        let need_n = || {
            n.ok_or_else(|| CatalogError::Inadmissible(format!("family {id} needs a rank n")))
        };
        let fam = match id.to_ascii_uppercase().as_str() {
            "E8" => LieFamily::E8,
            "F4" => LieFamily::F4,
            "G2" => LieFamily::G2,
            "3D4" | "D4TW3" => LieFamily::D4tw3,
            "E6" | "E6+" => LieFamily::E6 { eps: Sign::Plus },
            "2E6" | "E6-" => LieFamily::E6 { eps: Sign::Minus },
            "E7" => LieFamily::E7,
            "2B2" | "B2TW2" | "SZ" => LieFamily::B2tw2,
            "2G2" | "G2TW2" | "REE" => LieFamily::G2tw2,
            "2F4" | "F4TW2" => LieFamily::F4tw2,
            "PSL" | "PSLN" | "L" => LieFamily::Psl { n: need_n()? },
            "PSP" | "PSP2N" | "S" => LieFamily::Psp { n: need_n()? },
            _ => return Err(CatalogError::UnknownFamily(id.to_string())),
        };
        Ok(fam)
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LieFamily::Psl { n } => write!(f, "PSL_{n}"),
            LieFamily::Psp { n } => write!(f, "PSp_{}", 2 * n),
            _ => f.write_str(self.id()),
        }
    }
}

impl FromStr for LieFamily {
    type Err = CatalogError;
    /// Accepts "E8", "2B2", "PSL6", "PSL_6", "PSp4" (rank n = 2), ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.to_ascii_uppercase();
        for (prefix, symplectic) in [("PSL", false), ("PSP", true)] {
            if let Some(rest) = up.strip_prefix(prefix) {
                let rest = rest.trim_start_matches('_');
                if rest.is_empty() {
                    break;
                }
                let v: u32 = rest
                    .parse()
                    .map_err(|_| CatalogError::UnknownFamily(s.to_string()))?;
                return Ok(if symplectic {
                    if !v.is_multiple_of(2) {
                        return Err(CatalogError::UnknownFamily(s.to_string()));
                    }
                    LieFamily::Psp { n: v / 2 }
                } else {
                    LieFamily::Psl { n: v }
                });
            }
        }
        LieFamily::parse(s, None)
    }
}

/// An admissible (family, q) pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieGroup {
    pub family: LieFamily,
    pub q: PrimePower,
}

fn two() -> BigUint {
    BigUint::from(2u32)
}

fn three() -> BigUint {
    BigUint::from(3u32)
}

impl LieGroup {
    pub fn new(family: LieFamily, q: PrimePower) -> Result<Self, CatalogError> {
        check_admissible(family, &q)?;
        Ok(LieGroup { family, q })
    }

    pub fn from_u64(family: LieFamily, q: u64) -> Result<Self, CatalogError> {
        let pp = PrimePower::from_u64(q).map_err(|e| match e {
            NumberError::NotPrimePower(_) => {
                CatalogError::Inadmissible(format!("q = {q} is not a prime power"))
            }
            other => other.into(),
        })?;
        LieGroup::new(family, pp)
    }

    pub fn p(&self) -> &BigUint {
        &self.q.p
    }

    pub fn f(&self) -> u32 {
        self.q.f
    }

    pub fn q(&self) -> &BigUint {
        &self.q.q
    }

    /// Conventional name like "G2(3)" or "PSL_6(2)".
    pub fn name(&self) -> String {
        format!("{}({})", self.family, self.q.q)
    }

    /// Certificate stem `<family>_<n>_<q>`.
    pub fn file_stem(&self) -> String {
        format!("{}_{}_{}", self.family.id(), self.family.rank_param(), self.q.q)
    }

    /// For Suzuki and Ree groups q = p^{2k+1}; returns k.
    pub fn twist_k(&self) -> Option<u32> {
        match self.family {
            LieFamily::B2tw2 | LieFamily::G2tw2 | LieFamily::F4tw2 => Some((self.f() - 1) / 2),
            _ => None,
        }
    }

    pub fn is_q(&self, v: u64) -> bool {
        self.q.q == BigUint::from(v)
    }
}

fn check_admissible(family: LieFamily, q: &PrimePower) -> Result<(), CatalogError> {
    let bad = |msg: String| Err(CatalogError::Inadmissible(msg));
    match family {
        LieFamily::B2tw2 | LieFamily::F4tw2 => {
            if q.p != two() || q.f.is_multiple_of(2) || q.f < 3 {
                return bad(format!(
                    "{} needs q = 2^(2k+1) >= 8, got q = {}",
                    family.id(),
                    q.q
                ));
            }
        }
        LieFamily::G2tw2 => {
            if q.p != three() || q.f.is_multiple_of(2) || q.f < 3 {
                return bad(format!("2G2 needs q = 3^(2k+1) >= 27, got q = {}", q.q));
            }
        }
        LieFamily::G2 => {
            if q.q == two() {
                return bad("G2 needs q > 2 (G2(2) is not simple)".into());
            }
        }
        LieFamily::Psl { n } => {
            if n < 4 {
                return bad(format!("PSL_n needs n >= 4, got n = {n}"));
            }
            if n == 4 && q.q == two() {
                return bad("PSL_4(2) is excluded (isomorphic to A8)".into());
            }
        }
        LieFamily::Psp { n } => {
            if n < 2 {
                return bad(format!("PSp_2n needs n >= 2, got n = {n}"));
            }
            if n == 2 && q.q == two() {
                return bad("PSp_4(2) is excluded (not simple)".into());
            }
        }
        _ => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility() {
        assert!(LieGroup::from_u64(LieFamily::Psl { n: 4 }, 2).is_err());
        assert!(LieGroup::from_u64(LieFamily::Psl { n: 4 }, 3).is_ok());
        assert!(LieGroup::from_u64(LieFamily::Psl { n: 3 }, 3).is_err());
        assert!(LieGroup::from_u64(LieFamily::Psp { n: 2 }, 2).is_err());
        assert!(LieGroup::from_u64(LieFamily::Psp { n: 2 }, 3).is_ok());
        assert!(LieGroup::from_u64(LieFamily::B2tw2, 2).is_err());
        assert!(LieGroup::from_u64(LieFamily::B2tw2, 8).is_ok());
        assert!(LieGroup::from_u64(LieFamily::B2tw2, 16).is_err());
        assert!(LieGroup::from_u64(LieFamily::F4tw2, 2).is_err());
        assert!(LieGroup::from_u64(LieFamily::F4tw2, 32).is_ok());
        assert!(LieGroup::from_u64(LieFamily::G2tw2, 3).is_err());
        assert!(LieGroup::from_u64(LieFamily::G2tw2, 27).is_ok());
        assert!(LieGroup::from_u64(LieFamily::G2tw2, 81).is_err());
        assert!(LieGroup::from_u64(LieFamily::G2, 2).is_err());
        assert!(LieGroup::from_u64(LieFamily::G2, 3).is_ok());
        assert!(LieGroup::from_u64(LieFamily::E8, 6).is_err());
    }

    #[test]
    fn parse_ids() {
        assert_eq!("PSL6".parse::<LieFamily>().unwrap(), LieFamily::Psl { n: 6 });
        assert_eq!("PSp_8".parse::<LieFamily>().unwrap(), LieFamily::Psp { n: 4 });
        assert_eq!("2e6".parse::<LieFamily>().unwrap(), LieFamily::E6 { eps: Sign::Minus });
        assert!("PSp7".parse::<LieFamily>().is_err());
        assert!("X9".parse::<LieFamily>().is_err());
        assert_eq!(LieFamily::parse("PSL", Some(5)).unwrap(), LieFamily::Psl { n: 5 });
        assert!(LieFamily::parse("PSL", None).is_err());
    }

    #[test]
    fn stems() {
        let g = LieGroup::from_u64(LieFamily::E8, 2).unwrap();
        assert_eq!(g.file_stem(), "E8_8_2");
        let g = LieGroup::from_u64(LieFamily::Psp { n: 3 }, 5).unwrap();
        assert_eq!(g.file_stem(), "PSp_3_5");
        assert_eq!(g.name(), "PSp_6(5)");
    }
}
