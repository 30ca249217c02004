//! JSON export of the family data (`catalog.json`).

use super::{
    cited_facts, min_module_dim, order_formula, second_min_dim, CitedFact, LieFamily,
    OrderFormula,
};
use crate::exactnum::Sign;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub id: String,
    pub name: String,
    pub family: LieFamily,
    pub order_formula: OrderFormula,
    pub order_text: String,
    /// D for p = 2, 3 and any other p.
    pub min_module_dim: [u32; 3],
    pub second_min_dim_p2: Option<u32>,
    pub second_min_dim_odd: Option<u32>,
    pub lsz_bound_text: String,
    pub multiplier_text: String,
    pub admissible: String,
    pub cited_facts: Vec<CitedFact>,
}

fn lsz_text(f: LieFamily) -> &'static str {
    match f {
        LieFamily::E8 => "q^27(q^2-1)",
        LieFamily::F4 => "52 if q = 2; q^6(q^2-1) if q odd; q^7(q^3-1)(q-1)/2 if q even",
        LieFamily::G2 => "14 if q = 3; 12 if q = 4; q(q^2-1) otherwise",
        LieFamily::D4tw3 => "q^3(q^2-1)",
        LieFamily::E7 => "q^15(q^2-1)",
        LieFamily::E6 { .. } => "q^9(q^2-1)",
        LieFamily::B2tw2 => "8 if q = 8; 2^n(q-1) for q = 2^(2n+1)",
        LieFamily::G2tw2 => "q(q-1)",
        LieFamily::F4tw2 => "2^n q^4(q-1) for q = 2^(2n+1)",
        LieFamily::Psl { .. } => {
            "(q^n-q)/(q-1) - kappa_n; 62 - kappa_6 for PSL_6(2); 363 - kappa_6 for PSL_6(3)"
        }
        LieFamily::Psp { .. } => {
            "7 for PSp_6(2); (q^n-1)/2 if q odd; q^(n-1)(q^(n-1)-1)(q-1)/2 if q even"
        }
    }
}

fn multiplier_text(f: LieFamily) -> &'static str {
    match f {
        LieFamily::E8 | LieFamily::D4tw3 | LieFamily::G2tw2 => "1",
        LieFamily::F4 => "1; Z2 for q = 2",
        LieFamily::G2 => "1; Z3 for q = 3; Z2 for q = 4",
        LieFamily::E7 => "gcd(2, q-1)",
        LieFamily::E6 { eps: Sign::Plus } => "gcd(3, q-1)",
        LieFamily::E6 { eps: Sign::Minus } => "gcd(3, q+1); Z2 x Z6 for q = 2",
        LieFamily::B2tw2 => "1; Z2 x Z2 for q = 8",
        LieFamily::F4tw2 => "1",
        LieFamily::Psl { .. } => "gcd(n, q-1)",
        LieFamily::Psp { .. } => "gcd(2, q-1); Z2 for PSp_6(2)",
    }
}

fn admissible_text(f: LieFamily) -> &'static str {
    match f {
        LieFamily::B2tw2 | LieFamily::F4tw2 => "q = 2^(2k+1) >= 8",
        LieFamily::G2tw2 => "q = 3^(2k+1) >= 27",
        LieFamily::G2 => "q > 2",
        LieFamily::Psl { .. } => "n >= 4, (n, q) != (4, 2)",
        LieFamily::Psp { .. } => "n >= 2, (n, q) != (2, 2)",
        _ => "any prime power q",
    }
}

pub fn family_record(family: LieFamily) -> FamilyRecord {
    let b = BigUint::from;
    let formula = order_formula(family);
    FamilyRecord {
        id: family.id().to_string(),
        name: family.to_string(),
        family,
        order_text: formula.display(),
        order_formula: formula,
        min_module_dim: [
            min_module_dim(family, &b(2u32)),
            min_module_dim(family, &b(3u32)),
            min_module_dim(family, &b(5u32)),
        ],
        second_min_dim_p2: second_min_dim(family, &b(2u32)),
        second_min_dim_odd: second_min_dim(family, &b(3u32)),
        lsz_bound_text: lsz_text(family).to_string(),
        multiplier_text: multiplier_text(family).to_string(),
        admissible: admissible_text(family).to_string(),
        cited_facts: cited_facts()
            .into_iter()
            .filter(|c| {
                c.scope.family == family.id()
                    && c.scope.n.is_none_or(|n| n == family.rank_param())
            })
            .collect(),
    }
}

/// Families in the dump: all exceptional ones, PSL_n for 4 <= n <= 8 and
/// PSp_2n for 2 <= n <= 6.
pub fn catalog_families() -> Vec<LieFamily> {
    let mut v = LieFamily::exceptional();
    v.extend((4..=8).map(|n| LieFamily::Psl { n }));
    v.extend((2..=6).map(|n| LieFamily::Psp { n }));
    v
}

/// Pretty JSON with one record per family.
pub fn catalog_json() -> String {
    let records: Vec<FamilyRecord> = catalog_families().into_iter().map(family_record).collect();
    serde_json::to_string_pretty(&records).expect("catalog records serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_round_trip() {
        let s = catalog_json();
        let back: Vec<FamilyRecord> = serde_json::from_str(&s).unwrap();
        assert_eq!(back.len(), 20);
        assert_eq!(back[0].id, "E8");
        assert_eq!(back[0].order_formula.qexp, 120);
        let f4 = back.iter().find(|r| r.id == "F4").unwrap();
        assert_eq!(f4.min_module_dim, [26, 25, 26]);
        assert!(f4.cited_facts.iter().any(|c| c.key == "2.F4(2):52"));
    }
}
