use super::cyclo::Cyclo;
use super::group::PermGroup;
use super::table::{character_table, CharacterTable};
use super::{Caps, ChartabError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterCodegree {
    pub degree: u64,
    pub kernel_order: u64,
    pub codegree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodegreeSet {
    /// Distinct codegrees, ascending.
    pub values: Vec<u64>,
    /// One record per character, in table order.
    pub characters: Vec<CharacterCodegree>,
}

/// Kernel order of character i: the total size of the classes where the
/// value equals the degree exactly.
pub fn kernel_order(t: &CharacterTable, i: usize) -> u64 {
    let deg = Cyclo::integer(t.degrees[i] as i64);
    t.values[i].iter().zip(&t.class_sizes).filter(|(v, _)| **v == deg).map(|(_, s)| s).sum()
}

pub fn kernel_classes(t: &CharacterTable, i: usize) -> Vec<usize> {
    let deg = Cyclo::integer(t.degrees[i] as i64);
    (0..t.num_classes()).filter(|&c| t.values[i][c] == deg).collect()
}

/// cod(χ) = |G : ker χ| / χ(1) for every χ.
pub fn codegrees(t: &CharacterTable) -> Result<CodegreeSet, ChartabError> {
    let mut characters = Vec::with_capacity(t.num_classes());
    for (i, &d) in t.degrees.iter().enumerate() {
        let ko = kernel_order(t, i);
        if !t.group_order.is_multiple_of(ko) || !(t.group_order / ko).is_multiple_of(d) {
            return Err(ChartabError::Internal(format!(
                "non-integral codegree for character {i}: |G| = {}, kernel {ko}, degree {d}",
                t.group_order
            )));
        }
        characters.push(CharacterCodegree { degree: d, kernel_order: ko, codegree: t.group_order / ko / d });
    }
    let values: BTreeSet<u64> = characters.iter().map(|c| c.codegree).collect();
    Ok(CodegreeSet { values: values.into_iter().collect(), characters })
}

/// Degrees of the faithful characters, as a sorted multiset.
pub fn faithful_degrees(t: &CharacterTable) -> Vec<u64> {
    let mut v: Vec<u64> =
        (0..t.num_classes()).filter(|&i| kernel_order(t, i) == 1).map(|i| t.degrees[i]).collect();
    v.sort_unstable();
    v
}

/// cd(G), the set of character degrees.
pub fn character_degrees(t: &CharacterTable) -> BTreeSet<u64> {
    t.degrees.iter().copied().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WitnessVerdict {
    Refuted,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaithfulDegreeCheck {
    pub degree: u64,
    pub divisible_by_r: bool,
    /// Whether degree/r is a character degree of the quotient (false when
    /// r does not divide the degree).
    pub quotient_degree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub cover_order: u64,
    pub r: u64,
    pub quotient_order: u64,
    pub quotient_degrees: Vec<u64>,
    pub faithful: Vec<FaithfulDegreeCheck>,
    /// Smallest faithful degree d with d/r not a degree of the quotient.
    pub witness: Option<u64>,
    pub verdict: WitnessVerdict,
}

/// Look for a faithful χ of the cover with χ(1)/r not a degree of
/// cover/Z, Z the center of order r.
pub fn step1_witness_check(cover: &PermGroup, r: u64, caps: &Caps) -> Result<WitnessReport, ChartabError> {
    let t = character_table(cover, caps)?;
    witness_from_table(&t, r)
}

pub fn witness_from_table(t: &CharacterTable, r: u64) -> Result<WitnessReport, ChartabError> {
    let center: u64 = t.class_sizes.iter().filter(|&&s| s == 1).count() as u64;
    if center != r {
        return Err(ChartabError::Precondition(format!("center has order {center}, expected {r}")));
    }
    let center_classes: Vec<usize> = (0..t.num_classes()).filter(|&c| t.class_sizes[c] == 1).collect();
    let over_center: Vec<usize> = (0..t.num_classes())
        .filter(|&i| center_classes.iter().all(|c| kernel_classes(t, i).contains(c)))
        .collect();
    // cover/Z is simple and nonabelian iff every nontrivial character of it
    // has kernel exactly Z, and some has degree > 1
    let simple = over_center.iter().all(|&i| i == 0 || kernel_order(t, i) == r)
        && over_center.iter().any(|&i| t.degrees[i] > 1);
    if !simple {
        return Err(ChartabError::Precondition("cover/center is not a nonabelian simple group".into()));
    }
    let qdeg: BTreeSet<u64> = over_center.iter().map(|&i| t.degrees[i]).collect();
    Ok(judge(t.group_order, r, &faithful_degrees(t), qdeg))
}

fn judge(cover_order: u64, r: u64, faithful: &[u64], qdeg: BTreeSet<u64>) -> WitnessReport {
    let faithful: Vec<FaithfulDegreeCheck> = faithful
        .iter()
        .map(|&d| FaithfulDegreeCheck {
            degree: d,
            divisible_by_r: d % r == 0,
            quotient_degree: d % r == 0 && qdeg.contains(&(d / r)),
        })
        .collect();
    let witness = faithful.iter().find(|f| !f.quotient_degree).map(|f| f.degree);
    WitnessReport {
        cover_order,
        r,
        quotient_order: cover_order / r,
        quotient_degrees: qdeg.into_iter().collect(),
        faithful,
        witness,
        verdict: if witness.is_some() { WitnessVerdict::Refuted } else { WitnessVerdict::Inconclusive },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rule() {
        let q: BTreeSet<u64> = [1, 3, 4, 5].into_iter().collect();
        let rep = judge(120, 2, &[2, 6, 8, 10], q.clone());
        assert_eq!(rep.verdict, WitnessVerdict::Inconclusive);
        assert_eq!(rep.witness, None);
        let rep = judge(120, 2, &[2, 2, 4, 6], q.clone());
        assert_eq!(rep.verdict, WitnessVerdict::Refuted);
        assert_eq!(rep.witness, Some(4));
        // an odd degree cannot be r times a degree
        let rep = judge(120, 2, &[3], q);
        assert!(!rep.faithful[0].divisible_by_r);
        assert_eq!(rep.witness, Some(3));
    }
}
