//! Cross-characteristic degree bounds e(H), defining-characteristic module
//! dimensions, Schur multiplier orders and the Φ-product degrees used for
//! the E6/2E6/E7 covers.

use super::{CatalogError, LieFamily, LieGroup};
use crate::exactnum::{cyclotomic_value, factorize, Factorization, Sign};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

/// κ_n for PSL_n: true iff r divides (q^n − 1)/(q − 1). Always false for
/// the other families.
pub fn kappa(g: &LieGroup, r: &BigUint) -> bool {
    match g.family {
        LieFamily::Psl { n } => {
            let q = g.q();
            let s = (q.pow(n) - 1u32) / (q - 1u32);
            (s % r) == BigUint::ZERO
        }
        _ => false,
    }
}

/// Lower bound e(H) for the degree of a nontrivial cross-characteristic
/// projective representation. `kappa` only matters for PSL.
pub fn lsz_bound(g: &LieGroup, kappa: bool) -> BigUint {
    let q = g.q().clone();
    let one = BigUint::one();
    let k = if kappa { 1u32 } else { 0 };
    let qm1 = &q - 1u32;
    let q2m1 = &q * &q - 1u32;
    let q_even = q.is_even();
    match g.family {
        LieFamily::E8 => q.pow(27) * q2m1,
        LieFamily::F4 => {
            if g.is_q(2) {
                BigUint::from(52u32)
            } else if q_even {
                q.pow(7) * (q.pow(3) - 1u32) * qm1 / 2u32
            } else {
                q.pow(6) * q2m1
            }
        }
        LieFamily::G2 => {
            if g.is_q(3) {
                BigUint::from(14u32)
            } else if g.is_q(4) {
                BigUint::from(12u32)
            } else {
                &q * q2m1
            }
        }
        LieFamily::D4tw3 => q.pow(3) * q2m1,
        LieFamily::E7 => q.pow(15) * q2m1,
        LieFamily::E6 { .. } => q.pow(9) * q2m1,
        LieFamily::B2tw2 => {
            if g.is_q(8) {
                BigUint::from(8u32)
            } else {
                // q = 2^{2n+1}
                let n = g.twist_k().unwrap();
                (one << n) * qm1
            }
        }
        LieFamily::G2tw2 => &q * qm1,
        LieFamily::F4tw2 => {
            let n = g.twist_k().unwrap();
            (one << n) * q.pow(4) * qm1
        }
        LieFamily::Psl { n } => {
            if n == 6 && g.is_q(2) {
                BigUint::from(62u32 - k)
            } else if n == 6 && g.is_q(3) {
                BigUint::from(363u32 - k)
            } else {
                (q.pow(n) - &q) / qm1 - k
            }
        }
        LieFamily::Psp { n } => {
            if n == 3 && g.is_q(2) {
                BigUint::from(7u32)
            } else if q_even {
                q.pow(n - 1) * (q.pow(n - 1) - 1u32) * qm1 / 2u32
            } else {
                (q.pow(n) - 1u32) / 2u32
            }
        }
    }
}

/// Smallest dimension D of a nontrivial irreducible module in the defining
/// characteristic p.
pub fn min_module_dim(family: LieFamily, p: &BigUint) -> u32 {
    let is = |v: u32| *p == BigUint::from(v);
    match family {
        LieFamily::E8 => 248,
        LieFamily::F4 => 26 - u32::from(is(3)),
        LieFamily::G2 => 7 - u32::from(is(2)),
        LieFamily::D4tw3 => 8,
        LieFamily::E7 => 56,
        LieFamily::E6 { .. } => 27,
        LieFamily::B2tw2 => 4,
        LieFamily::G2tw2 => 7,
        LieFamily::F4tw2 => 26,
        LieFamily::Psl { n } => n,
        LieFamily::Psp { n } => 2 * n,
    }
}

/// Lower bound for the next restricted dimension above the natural module
/// (classical families only).
pub fn second_min_dim(family: LieFamily, p: &BigUint) -> Option<u32> {
    match family {
        LieFamily::Psl { n } => Some(n * (n - 1) / 2),
        LieFamily::Psp { n } => {
            let generic = 2 * n * n - n - 2;
            if p.is_even() && (4..=6).contains(&n) {
                // spin module
                Some(generic.min(1 << n))
            } else {
                Some(generic)
            }
        }
        _ => None,
    }
}

/// Order of the Schur multiplier M(H), with the exceptional cases.
pub fn schur_order(g: &LieGroup) -> Factorization {
    let q = g.q();
    let gcd_with = |m: u32, base: BigUint| base.gcd(&BigUint::from(m));
    let v: BigUint = match g.family {
        LieFamily::F4 if g.is_q(2) => 2u32.into(),
        LieFamily::G2 if g.is_q(3) => 3u32.into(),
        LieFamily::G2 if g.is_q(4) => 2u32.into(),
        LieFamily::B2tw2 if g.is_q(8) => 4u32.into(),
        LieFamily::E6 { eps: Sign::Minus } if g.is_q(2) => 12u32.into(),
        LieFamily::Psp { n: 3 } if g.is_q(2) => 2u32.into(),
        LieFamily::E6 { eps: Sign::Plus } => gcd_with(3, q - 1u32),
        LieFamily::E6 { eps: Sign::Minus } => gcd_with(3, q + 1u32),
        LieFamily::E7 | LieFamily::Psp { .. } => gcd_with(2, q - 1u32),
        LieFamily::Psl { n } => gcd_with(n, q - 1u32),
        _ => BigUint::one(),
    };
    factorize(&v)
}

/// Group structure of M(H) when it is not cyclic.
pub fn schur_structure(g: &LieGroup) -> Option<&'static str> {
    match g.family {
        LieFamily::B2tw2 if g.is_q(8) => Some("Z2 x Z2"),
        LieFamily::E6 { eps: Sign::Minus } if g.is_q(2) => Some("Z2 x Z6"),
        _ => None,
    }
}

/// A Φ-product character degree D of the simply connected cover, with the
/// multiplicities recorded for L and its adjoint dual L*.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeData {
    /// (m, exponent) pairs of Φ_m(q)^exponent.
    pub phi: Vec<(u64, u32)>,
    #[serde(with = "crate::bigstr::uint")]
    pub value: BigUint,
    #[serde(with = "crate::bigstr::uint")]
    pub multiplicity_l: BigUint,
    #[serde(with = "crate::bigstr::uint")]
    pub multiplicity_adjoint: BigUint,
    /// Congruence that makes the multiplier nontrivial, e.g. "q ≡ 1,4 (mod 6)".
    pub condition: String,
    pub condition_holds: bool,
}

/// D for E6(q), 2E6(q) (q > 2) and E7(q) with nontrivial multiplier.
pub fn exceptional_degree_d(g: &LieGroup) -> Result<DegreeData, CatalogError> {
    let q = g.q();
    let q6 = (q % 6u32).to_u32().unwrap();
    let (phi, ml, ma, condition, holds): (Vec<(u64, u32)>, BigUint, BigUint, &str, bool) =
        match g.family {
            LieFamily::E7 => {
                if q.is_even() {
                    return Err(CatalogError::Rejected(format!(
                        "{} has trivial multiplier (q even)",
                        g.name()
                    )));
                }
                let half = (q - 1u32) / 2u32;
                let adj = if ((q - 1u32) % 3u32) == BigUint::ZERO {
                    (q - 3u32) / 2u32
                } else {
                    half.clone()
                };
                (
                    vec![(1, 4), (3, 2), (4, 1), (5, 1), (6, 1), (7, 1), (8, 1), (9, 1), (12, 1), (18, 1)],
                    half,
                    adj,
                    "q odd",
                    true,
                )
            }
            LieFamily::E6 { eps: Sign::Plus } => {
                if q6 != 1 && q6 != 4 {
                    return Err(CatalogError::Rejected(format!(
                        "{} has trivial multiplier (3 does not divide q-1)",
                        g.name()
                    )));
                }
                (
                    vec![(3, 2), (6, 1), (9, 1), (12, 1)],
                    q - 2u32,
                    q - 4u32,
                    "q ≡ 1,4 (mod 6)",
                    true,
                )
            }
            LieFamily::E6 { eps: Sign::Minus } => {
                if g.is_q(2) {
                    return Err(CatalogError::Rejected(
                        "2E6(2) has an exceptional multiplier and is handled by cited data".into(),
                    ));
                }
                if q6 != 2 && q6 != 5 {
                    return Err(CatalogError::Rejected(format!(
                        "{} has trivial multiplier (3 does not divide q+1)",
                        g.name()
                    )));
                }
                (
                    vec![(3, 1), (6, 2), (12, 1), (18, 1)],
                    q.clone(),
                    q - 2u32,
                    "q ≡ 2,5 (mod 6), q > 2",
                    true,
                )
            }
            _ => {
                return Err(CatalogError::Rejected(format!(
                    "Φ-product degree is only defined for E6, 2E6 and E7, not {}",
                    g.family
                )))
            }
        };
    let mut value = BigUint::one();
    for &(m, e) in &phi {
        value *= cyclotomic_value(m, q)?.pow(e);
    }
    Ok(DegreeData {
        phi,
        value,
        multiplicity_l: ml,
        multiplicity_adjoint: ma,
        condition: condition.to_string(),
        condition_holds: holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: LieFamily, q: u64) -> LieGroup {
        LieGroup::from_u64(f, q).unwrap()
    }

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn lsz_examples() {
        assert_eq!(lsz_bound(&g(LieFamily::E8, 2), false), b(402653184));
        assert_eq!(lsz_bound(&g(LieFamily::G2, 3), false), b(14));
        assert_eq!(lsz_bound(&g(LieFamily::G2, 4), false), b(12));
        assert_eq!(lsz_bound(&g(LieFamily::G2, 5), false), b(120));
        assert_eq!(lsz_bound(&g(LieFamily::Psl { n: 5 }, 2), false), b(30));
        assert_eq!(lsz_bound(&g(LieFamily::Psl { n: 5 }, 2), true), b(29));
        assert_eq!(lsz_bound(&g(LieFamily::Psl { n: 6 }, 2), true), b(61));
        assert_eq!(lsz_bound(&g(LieFamily::Psl { n: 6 }, 3), false), b(363));
        assert_eq!(lsz_bound(&g(LieFamily::F4, 2), false), b(52));
        assert_eq!(lsz_bound(&g(LieFamily::F4, 3), false), b(729 * 8));
        assert_eq!(lsz_bound(&g(LieFamily::F4, 4), false), b(16384 * 63 * 3 / 2));
        assert_eq!(lsz_bound(&g(LieFamily::B2tw2, 8), false), b(8));
        assert_eq!(lsz_bound(&g(LieFamily::B2tw2, 32), false), b(4 * 31));
        assert_eq!(lsz_bound(&g(LieFamily::F4tw2, 8), false), b(2 * 4096 * 7));
        assert_eq!(lsz_bound(&g(LieFamily::G2tw2, 27), false), b(27 * 26));
        assert_eq!(lsz_bound(&g(LieFamily::Psp { n: 3 }, 2), false), b(7));
        assert_eq!(lsz_bound(&g(LieFamily::Psp { n: 3 }, 3), false), b(13));
        assert_eq!(lsz_bound(&g(LieFamily::Psp { n: 3 }, 4), false), b(16 * 15 * 3 / 2));
        assert_eq!(lsz_bound(&g(LieFamily::D4tw3, 2), false), b(24));
        assert_eq!(lsz_bound(&g(LieFamily::E7, 2), false), b(3 << 15));
        assert_eq!(lsz_bound(&g(LieFamily::E6 { eps: Sign::Minus }, 2), false), b(3 << 9));
    }

    #[test]
    fn kappa_flag() {
        // (2^5 − 1)/(2 − 1) = 31
        let grp = g(LieFamily::Psl { n: 5 }, 2);
        assert!(kappa(&grp, &b(31)));
        assert!(!kappa(&grp, &b(3)));
        assert!(!kappa(&g(LieFamily::E8, 2), &b(31)));
    }

    #[test]
    fn module_dims() {
        assert_eq!(min_module_dim(LieFamily::F4, &b(3)), 25);
        assert_eq!(min_module_dim(LieFamily::F4, &b(2)), 26);
        assert_eq!(min_module_dim(LieFamily::G2, &b(2)), 6);
        assert_eq!(min_module_dim(LieFamily::G2, &b(5)), 7);
        assert_eq!(min_module_dim(LieFamily::E8, &b(7)), 248);
        assert_eq!(min_module_dim(LieFamily::Psp { n: 4 }, &b(3)), 8);
        assert_eq!(second_min_dim(LieFamily::Psl { n: 6 }, &b(2)), Some(15));
        assert_eq!(second_min_dim(LieFamily::Psp { n: 4 }, &b(2)), Some(16));
        assert_eq!(second_min_dim(LieFamily::Psp { n: 4 }, &b(3)), Some(26));
        assert_eq!(second_min_dim(LieFamily::Psp { n: 7 }, &b(2)), Some(89));
        assert_eq!(second_min_dim(LieFamily::E8, &b(2)), None);
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_order(&g(LieFamily::B2tw2, 8)).to_string(), "2^2");
        assert_eq!(schur_structure(&g(LieFamily::B2tw2, 8)), Some("Z2 x Z2"));
        assert!(schur_order(&g(LieFamily::B2tw2, 32)).is_empty());
        assert!(schur_order(&g(LieFamily::Psl { n: 5 }, 4)).is_empty());
        assert_eq!(schur_order(&g(LieFamily::E6 { eps: Sign::Plus }, 4)).to_string(), "3");
        assert_eq!(schur_order(&g(LieFamily::E6 { eps: Sign::Minus }, 2)).value(), b(12));
        assert_eq!(schur_order(&g(LieFamily::G2, 3)).to_string(), "3");
        assert_eq!(schur_order(&g(LieFamily::G2, 4)).to_string(), "2");
        assert!(schur_order(&g(LieFamily::G2, 5)).is_empty());
        assert_eq!(schur_order(&g(LieFamily::F4, 2)).to_string(), "2");
        assert_eq!(schur_order(&g(LieFamily::Psp { n: 3 }, 2)).to_string(), "2");
        assert_eq!(schur_order(&g(LieFamily::Psl { n: 6 }, 7)).to_string(), "2 · 3");
        assert_eq!(schur_order(&g(LieFamily::E7, 3)).to_string(), "2");
        assert!(schur_order(&g(LieFamily::E7, 4)).is_empty());
    }

    #[test]
    fn phi_degrees() {
        let d = exceptional_degree_d(&g(LieFamily::E6 { eps: Sign::Plus }, 4)).unwrap();
        assert_eq!(d.value, b(21 * 21 * 13 * 4161 * 241));
        assert_eq!(d.multiplicity_l, b(2));
        assert!(exceptional_degree_d(&g(LieFamily::E6 { eps: Sign::Minus }, 2)).is_err());
        assert!(exceptional_degree_d(&g(LieFamily::E6 { eps: Sign::Plus }, 3)).is_err());
        let d = exceptional_degree_d(&g(LieFamily::E6 { eps: Sign::Minus }, 5)).unwrap();
        assert_eq!(d.multiplicity_adjoint, b(3));
        // direct polynomial evaluation at q = 3
        let q: u128 = 3;
        let phi = |m: u32| -> u128 {
            match m {
                1 => q - 1,
                3 => q * q + q + 1,
                4 => q * q + 1,
                5 => q.pow(4) + q.pow(3) + q * q + q + 1,
                6 => q * q - q + 1,
                7 => (q.pow(7) - 1) / (q - 1),
                8 => q.pow(4) + 1,
                9 => q.pow(6) + q.pow(3) + 1,
                12 => q.pow(4) - q * q + 1,
                18 => q.pow(6) - q.pow(3) + 1,
                _ => unreachable!(),
            }
        };
        let expect = phi(1).pow(4) * phi(3).pow(2) * [4, 5, 6, 7, 8, 9, 12, 18].iter().map(|&m| phi(m)).product::<u128>();
        let d = exceptional_degree_d(&g(LieFamily::E7, 3)).unwrap();
        assert_eq!(d.value.to_string(), expect.to_string());
        assert_eq!(d.multiplicity_l, b(1));
        assert!(exceptional_degree_d(&g(LieFamily::E7, 8)).is_err());
        assert!(exceptional_degree_d(&g(LieFamily::E8, 3)).is_err());
    }
}
