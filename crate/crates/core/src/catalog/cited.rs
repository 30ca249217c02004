//! Facts taken from the literature or from GAP's libraries that are too
//! large to recompute here. Certificates surface them as ASSUMED-CITED.

use super::{LieFamily, LieGroup};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactSource {
    /// Character table or group library data computed with GAP.
    GapLibrary,
    /// A theorem or table in the literature.
    Literature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactKind {
    /// A faithful degree χ(1) of a central extension by Z_r with χ(1)/r ∉ cd(H).
    CoverWitness,
    /// Cross-characteristic degree bound e(H).
    DegreeBound,
    /// Defining-characteristic module dimension.
    ModuleDimension,
    /// Φ-product degrees and multiplicities for E6/2E6/E7 covers.
    DegreeTable,
    /// Second cohomology input for the PSL residual case.
    Cohomology,
    /// Nonsplit extension handled by a character degree.
    Extension,
    /// Existence of a Weil-type character degree.
    WeilDegree,
}

/// Which instances a fact applies to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactScope {
    /// Family id as in `LieFamily::id`.
    pub family: String,
    /// Exact q, if the fact is about one group.
    pub q: Option<u64>,
    /// Exact rank parameter.
    pub n: Option<u32>,
    /// Minimal rank parameter.
    pub n_min: Option<u32>,
    pub q_odd_only: bool,
}

impl FactScope {
    fn family(id: &str) -> Self {
        FactScope { family: id.into(), q: None, n: None, n_min: None, q_odd_only: false }
    }

    fn at(id: &str, n: Option<u32>, q: u64) -> Self {
        FactScope { family: id.into(), q: Some(q), n, n_min: None, q_odd_only: false }
    }

    pub fn matches(&self, g: &LieGroup) -> bool {
        if self.family != g.family.id() {
            return false;
        }
        if let Some(q) = self.q {
            if !g.is_q(q) {
                return false;
            }
        }
        if self.q_odd_only && g.p() == &num_bigint::BigUint::from(2u32) {
            return false;
        }
        let n = g.family.rank_param();
        if self.n.is_some_and(|v| v != n) || self.n_min.is_some_and(|v| n < v) {
            return false;
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitedFact {
    /// Stable key, e.g. "2.F4(2):52".
    pub key: String,
    pub kind: FactKind,
    pub scope: FactScope,
    /// The group the fact is about (cover, extension or H itself).
    pub subject: String,
    pub statement: String,
    pub source: FactSource,
    pub citation: String,
    /// r = |Z| for cover witnesses.
    pub prime: Option<u32>,
    pub degree: Option<u64>,
}

const GAP: &str = "The GAP Group, GAP - Groups, Algorithms, and Programming, Version 4 (character table library CTblLib)";
const KL_53A: &str = "P. Kleidman, M. Liebeck, The Subgroup Structure of the Finite Classical Groups, LMS Lecture Note Series 129, CUP 1990, Table 5.3.A and Theorem 5.3.9";
const KL_54C: &str = "P. Kleidman, M. Liebeck, The Subgroup Structure of the Finite Classical Groups, LMS Lecture Note Series 129, CUP 1990, Table 5.4.C; R. Guralnick, P. H. Tiep, Lemma 4.2 (2005)";
const HISS_MALLE: &str = "G. Hiss, G. Malle, Low-dimensional representations of quasi-simple groups, LMS J. Comput. Math. 4 (2001)";
const GT99: &str = "R. Guralnick, P. H. Tiep, Low-dimensional representations of special linear groups in cross characteristics, Proc. London Math. Soc. 78 (1999), Theorem 1.1";
const LUBECK: &str = "F. Lübeck, Data for finite groups of Lie type and related algebraic groups (online character degree tables)";
const BELL: &str = "G. W. Bell, On the cohomology of the finite special linear groups I, J. Algebra 54 (1978), Table I";
const TZ2: &str = "P. H. Tiep, A. E. Zalesskii, Some characterizations of the Weil representations of the symplectic and unitary groups, J. Algebra 192 (1997), Lemma 2.6";

#[allow(clippy::too_many_arguments)]
fn fact(
    key: &str,
    kind: FactKind,
    scope: FactScope,
    subject: &str,
    statement: &str,
    source: FactSource,
    citation: &str,
    prime: Option<u32>,
    degree: Option<u64>,
) -> CitedFact {
    CitedFact {
        key: key.into(),
        kind,
        scope,
        subject: subject.into(),
        statement: statement.into(),
        source,
        citation: citation.into(),
        prime,
        degree,
    }
}

/// Every cited fact the verifier may attach.
pub fn cited_facts() -> Vec<CitedFact> {
    use FactKind::*;
    use FactSource::*;
    let mut v = vec![
        fact(
            "2.F4(2):52",
            CoverWitness,
            FactScope::at("F4", None, 2),
            "2.F4(2)",
            "faithful irreducible degree 52; 26 is not a degree of F4(2), whose smallest nontrivial degree is 833",
            GapLibrary,
            GAP,
            Some(2),
            Some(52),
        ),
        fact(
            "3.G2(3):27",
            CoverWitness,
            FactScope::at("G2", None, 3),
            "3.G2(3)",
            "faithful irreducible degree 27; 9 is not a degree of G2(3)",
            GapLibrary,
            GAP,
            Some(3),
            Some(27),
        ),
        fact(
            "2.G2(4):12",
            CoverWitness,
            FactScope::at("G2", None, 4),
            "2.G2(4)",
            "faithful irreducible degree 12; 6 is not a degree of G2(4)",
            GapLibrary,
            GAP,
            Some(2),
            Some(12),
        ),
        fact(
            "3.2E6(2):46683",
            CoverWitness,
            FactScope::at("2E6", None, 2),
            "3.2E6(2)",
            "faithful irreducible degree 46683; 15561 is not a degree of 2E6(2), whose smallest nontrivial degree is 1938",
            GapLibrary,
            GAP,
            Some(3),
            Some(46683),
        ),
        fact(
            "2.2E6(2):2432",
            CoverWitness,
            FactScope::at("2E6", None, 2),
            "2.2E6(2)",
            "faithful irreducible degree 2432; 1216 is not a degree of 2E6(2)",
            GapLibrary,
            GAP,
            Some(2),
            Some(2432),
        ),
        fact(
            "SL4(3):40",
            CoverWitness,
            FactScope::at("PSL", Some(4), 3),
            "SL_4(3)",
            "faithful irreducible degree 40; 20 is not a degree of PSL_4(3)",
            GapLibrary,
            GAP,
            Some(2),
            Some(40),
        ),
        fact(
            "2.S6(2):8",
            CoverWitness,
            FactScope::at("PSp", Some(3), 2),
            "2.PSp_6(2)",
            "faithful irreducible degree 8; 4 is not a degree of PSp_6(2)",
            GapLibrary,
            GAP,
            Some(2),
            Some(8),
        ),
        fact(
            "Dempwolff:248",
            Extension,
            FactScope::at("PSL", Some(5), 2),
            "2^5.GL_5(2)",
            "the nonsplit extension 2^5.GL_5(2) has a faithful irreducible degree 248 = 2^3 · 31, not divisible by 2^5",
            GapLibrary,
            GAP,
            Some(2),
            Some(248),
        ),
        fact(
            "H2(SLn(q),V)",
            Cohomology,
            FactScope { n_min: Some(5), ..FactScope::family("PSL") },
            "SL_n(q) on its natural module V",
            "H^2(SL_n(q), V) = 0 for n >= 5 except SL_5(2)",
            Literature,
            BELL,
            None,
            None,
        ),
        fact(
            "Sp-weil",
            WeilDegree,
            FactScope { q_odd_only: true, ..FactScope::family("PSp") },
            "Sp_2n(q), q odd",
            "Sp_2n(q) has a faithful irreducible degree (q^n - a)/2 with a = ±1 and 4 | q^n - a",
            Literature,
            TZ2,
            Some(2),
            None,
        ),
        fact(
            "e(H):F4(2)",
            DegreeBound,
            FactScope::at("F4", None, 2),
            "F4(2)",
            "e(F4(2)) >= 52",
            Literature,
            HISS_MALLE,
            None,
            Some(52),
        ),
        fact(
            "e(H):PSL",
            DegreeBound,
            FactScope::family("PSL"),
            "PSL_n(q)",
            "e(H) >= (q^n - q)/(q - 1) - kappa_n, with 62 - kappa_6 for PSL_6(2) and 363 - kappa_6 for PSL_6(3)",
            Literature,
            GT99,
            None,
            None,
        ),
    ];
    for fam in LieFamily::exceptional() {
        let id = fam.id();
        v.push(fact(
            &format!("e(H):{id}"),
            DegreeBound,
            FactScope::family(id),
            id,
            "cross-characteristic degree bound e(H)",
            Literature,
            KL_53A,
            None,
            None,
        ));
    }
    v.push(fact(
        "e(H):PSp",
        DegreeBound,
        FactScope::family("PSp"),
        "PSp_2n(q)",
        "e(H) >= (q^n - 1)/2 for q odd and q^(n-1)(q^(n-1) - 1)(q - 1)/2 for q even; e(PSp_6(2)) >= 7",
        Literature,
        KL_53A,
        None,
        None,
    ));
    for id in ["E8", "F4", "G2", "3D4", "E6", "2E6", "E7", "2B2", "2G2", "2F4", "PSL", "PSp"] {
        v.push(fact(
            &format!("D:{id}"),
            ModuleDimension,
            FactScope::family(id),
            id,
            "minimal nontrivial module dimension D in defining characteristic and |N| >= p^(Df)",
            Literature,
            KL_54C,
            None,
            None,
        ));
    }
    for (id, stmt) in [
        ("E7", "E7(q)_sc has the degree Φ1^4Φ3^2Φ4Φ5Φ6Φ7Φ8Φ9Φ12Φ18 with multiplicity (q-1)/2; the adjoint group has it with multiplicity (q-1)/2, or (q-3)/2 when 3 | q-1, and no degree 2D"),
        ("E6", "E6(q)_sc has the degree Φ3^2Φ6Φ9Φ12 with multiplicity q-2 and no degree D/3; the adjoint group has multiplicity q-4 and no degree 3D"),
        ("2E6", "2E6(q)_sc has the degree Φ3Φ6^2Φ12Φ18 with multiplicity q and no degree D/3; the adjoint group has multiplicity q-2 and no degree 3D"),
    ] {
        let mut scope = FactScope::family(id);
        if id == "E7" {
            scope.q_odd_only = true;
        }
        v.push(fact(
            &format!("Phi-degree:{id}"),
            DegreeTable,
            scope,
            &format!("{id}(q)_sc"),
            stmt,
            Literature,
            LUBECK,
            None,
            None,
        ));
    }
    v
}

/// Facts whose scope contains `g`.
pub fn cited_facts_for(g: &LieGroup) -> Vec<CitedFact> {
    cited_facts().into_iter().filter(|f| f.scope.matches(g)).collect()
}

/// The cover witness for (g, r), if one is cited.
pub fn cited_cover_witness(g: &LieGroup, r: u32) -> Option<CitedFact> {
    cited_facts_for(g)
        .into_iter()
        .find(|f| f.kind == FactKind::CoverWitness && f.prime == Some(r))
}

/// Look a fact up by key.
pub fn cited_fact(key: &str) -> Option<CitedFact> {
    cited_facts().into_iter().find(|f| f.key == key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Sign;

    #[test]
    fn keys_unique() {
        let facts = cited_facts();
        let mut keys: Vec<_> = facts.iter().map(|f| f.key.clone()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), facts.len());
    }

    #[test]
    fn scopes() {
        let g = LieGroup::from_u64(LieFamily::E6 { eps: Sign::Minus }, 2).unwrap();
        assert!(cited_cover_witness(&g, 3).is_some_and(|f| f.degree == Some(46683)));
        assert!(cited_cover_witness(&g, 2).is_some_and(|f| f.degree == Some(2432)));
        let g = LieGroup::from_u64(LieFamily::G2, 5).unwrap();
        assert!(cited_cover_witness(&g, 3).is_none());
        let g = LieGroup::from_u64(LieFamily::Psl { n: 5 }, 2).unwrap();
        let keys: Vec<_> = cited_facts_for(&g).into_iter().map(|f| f.key).collect();
        assert!(keys.contains(&"Dempwolff:248".to_string()));
        assert!(keys.contains(&"H2(SLn(q),V)".to_string()));
        let g = LieGroup::from_u64(LieFamily::Psl { n: 4 }, 5).unwrap();
        assert!(!cited_facts_for(&g).iter().any(|f| f.key == "H2(SLn(q),V)"));
        let g = LieGroup::from_u64(LieFamily::E7, 4).unwrap();
        assert!(!cited_facts_for(&g).iter().any(|f| f.kind == FactKind::DegreeTable));
    }

    #[test]
    fn every_fact_has_citation() {
        for f in cited_facts() {
            assert!(!f.citation.is_empty(), "{}", f.key);
            assert!(!f.statement.is_empty(), "{}", f.key);
        }
    }
}
