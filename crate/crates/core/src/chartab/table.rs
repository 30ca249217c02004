use super::classes::{conjugacy_classes, ConjugacyClasses};
use super::cyclo::{Cyclo, CycloBasis};
use super::group::PermGroup;
use super::modp::{
    addm, charpoly, dixon_prime, invm, left_kernel, mulm, powm, rref, root_of_unity, subm,
};
use super::{Caps, ChartabError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Exact character table. Rows are characters, columns classes; entries
/// lie in Z[z] with z a primitive `exponent`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub group_order: u64,
    pub exponent: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    /// Class representatives in cycle notation.
    pub class_reps: Vec<String>,
    pub inverse: Vec<usize>,
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<Cyclo>>,
    /// The prime used for the modular computation.
    pub prime: u64,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn basis(&self) -> CycloBasis {
        CycloBasis::new(self.exponent as u32)
    }

    /// Check Σχ(1)^2 = |G|, degrees dividing |G|, and both orthogonality
    /// relations, all exactly.
    pub fn validate(&self) -> Result<(), ChartabError> {
        let k = self.num_classes();
        let n = self.group_order;
        let bad = |m: String| Err(ChartabError::Internal(m));
        if self.values.len() != k || self.degrees.len() != k || self.values.iter().any(|r| r.len() != k) {
            return bad("table is not square".into());
        }
        if self.class_sizes.iter().sum::<u64>() != n || self.class_sizes[0] != 1 {
            return bad("class sizes do not sum to the group order".into());
        }
        if self.degrees.iter().map(|d| d * d).sum::<u64>() != n {
            return bad("sum of squared degrees differs from the group order".into());
        }
        for (i, &d) in self.degrees.iter().enumerate() {
            if !n.is_multiple_of(d) || self.values[i][0] != Cyclo::integer(d as i64) {
                return bad(format!("degree {d} of character {i} is inconsistent"));
            }
        }
        let b = self.basis();
        let e = self.exponent as usize;
        let rows_ok = (0..k).into_par_iter().all(|i| {
            (i..k).all(|j| {
                let mut acc = vec![0i64; e];
                for c in 0..k {
                    let w = self.class_sizes[c] as i64;
                    b.accumulate(&mut acc, w, &self.values[i][c], &self.values[j][c], true);
                }
                let expect = if i == j { n as i64 } else { 0 };
                b.reduce(acc) == Cyclo::integer(expect)
            })
        });
        if !rows_ok {
            return bad("row orthogonality fails".into());
        }
        let cols_ok = (0..k).into_par_iter().all(|c| {
            (c..k).all(|d| {
                let mut acc = vec![0i64; e];
                for row in &self.values {
                    b.accumulate(&mut acc, 1, &row[c], &row[d], true);
                }
                let expect = if c == d { (n / self.class_sizes[c]) as i64 } else { 0 };
                b.reduce(acc) == Cyclo::integer(expect)
            })
        });
        if !cols_ok {
            return bad("column orthogonality fails".into());
        }
        Ok(())
    }
}

/// Structure constants for class j: entry [k][l] counts x in C_j with
/// x^-1·g_l in C_k, where g_l represents class l. An irreducible
/// character gives a right eigenvector (ω_χ(C_1), .., ω_χ(C_k)) with
/// eigenvalue ω_χ(C_j) = |C_j|χ(g_j)/χ(1).
pub fn class_matrix(cc: &ConjugacyClasses, base: &[u32], j: usize) -> Vec<Vec<u64>> {
    let k = cc.len();
    let mut m = vec![vec![0u64; k]; k];
    let pre: Vec<Vec<u32>> = cc
        .class_elements(j)
        .iter()
        .map(|x| {
            let inv = x.inverse();
            base.iter().map(|&b| inv.apply(b)).collect()
        })
        .collect();
    let mut key = vec![0u32; base.len()];
    for l in 0..k {
        let g = &cc.reps[l];
        for p in &pre {
            for (slot, &x) in key.iter_mut().zip(p) {
                *slot = g.apply(x);
            }
            m[cc.class_of_key(&key)][l] += 1;
        }
    }
    m
}

/// Character table of G by the Dixon–Schneider method.
pub fn character_table(g: &PermGroup, caps: &Caps) -> Result<CharacterTable, ChartabError> {
    let cc = conjugacy_classes(g, caps)?;
    table_from_classes(g, &cc)
}

pub fn table_from_classes(g: &PermGroup, cc: &ConjugacyClasses) -> Result<CharacterTable, ChartabError> {
    let k = cc.len();
    let n = cc.group_order;
    let e = cc.exponent;
    let l = dixon_prime(e, n);
    let base = g.base();

    // Split F_l^k into common eigenspaces, smallest classes first.
    let mut spaces: Vec<Vec<Vec<u64>>> =
        vec![(0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect()];
    let mut order: Vec<usize> = (1..k).collect();
    order.sort_by_key(|&j| (cc.sizes[j], j));
    for &j in &order {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m: Vec<Vec<u64>> =
            class_matrix(cc, &base, j).into_iter().map(|r| r.into_iter().map(|x| x % l).collect()).collect();
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
            } else {
                next.extend(split_space(s, &m, l)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(ChartabError::Internal("class matrices failed to split an eigenspace".into()));
    }
    if spaces.len() != k {
        return Err(ChartabError::Internal(format!("found {} characters for {k} classes", spaces.len())));
    }

    let z = root_of_unity(e, l);
    let basis = CycloBasis::new(e as u32);
    let powers: Vec<Vec<usize>> = (0..k).map(|c| cc.power_classes(c)).collect();
    let mut rows = Vec::with_capacity(k);
    for s in &spaces {
        let w = &s[0];
        if w[0] == 0 {
            return Err(ChartabError::Internal("eigenvector vanishes at the identity".into()));
        }
        let w0 = invm(w[0], l);
        let w: Vec<u64> = w.iter().map(|&x| mulm(x, w0, l)).collect();
        // Σ ω_k ω_k* / |C_k| = |G| / χ(1)^2
        let mut s = 0u64;
        for c in 0..k {
            let t = mulm(w[c], w[cc.inverse[c]], l);
            s = addm(s, mulm(t, invm(cc.sizes[c] % l, l), l), l);
        }
        if s == 0 {
            return Err(ChartabError::Internal("degenerate norm".into()));
        }
        let d2 = mulm(n % l, invm(s, l), l);
        let d = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| n.is_multiple_of(d) && mulm(d, d, l) == d2)
            .ok_or_else(|| ChartabError::Internal("no integral degree".into()))?;
        let vals: Vec<u64> =
            (0..k).map(|c| mulm(mulm(w[c], d % l, l), invm(cc.sizes[c] % l, l), l)).collect();
        let mut row = Vec::with_capacity(k);
        for c in 0..k {
            row.push(lift_value(&vals, &powers[c], d, e, z, l, &basis)?);
        }
        rows.push((d, row));
    }
    // trivial character first, then by degree and values
    rows.sort_by(|a, b| {
        let ta = a.1.iter().any(|v| *v != Cyclo::integer(1));
        let tb = b.1.iter().any(|v| *v != Cyclo::integer(1));
        (ta, a.0, &a.1).cmp(&(tb, b.0, &b.1))
    });
    let table = CharacterTable {
        group_order: n,
        exponent: e,
        class_sizes: cc.sizes.clone(),
        class_orders: cc.orders.clone(),
        class_reps: cc.reps.iter().map(|r| r.to_string()).collect(),
        inverse: cc.inverse.clone(),
        power_maps: cc.power_maps.clone(),
        degrees: rows.iter().map(|r| r.0).collect(),
        values: rows.into_iter().map(|r| r.1).collect(),
        prime: l,
    };
    table.validate()?;
    Ok(table)
}

/// Recover χ(g) exactly from χ(g^t) mod l: the multiplicity of the
/// eigenvalue z_o^i of g is (1/o)·Σ_t χ(g^t)·z_o^(-it).
fn lift_value(
    vals: &[u64],
    powers: &[usize],
    d: u64,
    e: u64,
    z: u64,
    l: u64,
    basis: &CycloBasis,
) -> Result<Cyclo, ChartabError> {
    let o = powers.len() as u64;
    let zo = powm(z, e / o, l);
    let zinv = invm(zo, l);
    let oinv = invm(o % l, l);
    let mut dense = vec![0i64; e as usize];
    let mut total = 0u64;
    for i in 0..o {
        let step = powm(zinv, i, l);
        let mut acc = 0u64;
        let mut f = 1u64;
        for &c in powers {
            acc = addm(acc, mulm(vals[c], f, l), l);
            f = mulm(f, step, l);
        }
        let mu = mulm(acc, oinv, l);
        if mu > d {
            return Err(ChartabError::Internal(format!("eigenvalue multiplicity {mu} exceeds degree {d}")));
        }
        total += mu;
        dense[(i * (e / o)) as usize] += mu as i64;
    }
    if total != d {
        return Err(ChartabError::Internal("eigenvalue multiplicities do not sum to the degree".into()));
    }
    Ok(basis.reduce(dense))
}

/// Split the row space `s` (reduced echelon basis) into eigenspaces of the
/// matrix m acting on column vectors.
fn split_space(s: Vec<Vec<u64>>, m: &[Vec<u64>], l: u64) -> Result<Vec<Vec<Vec<u64>>>, ChartabError> {
    let d = s.len();
    let k = m.len();
    let pivots: Vec<usize> = s.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
    // r[i][t] = coefficient of basis vector t in m·s_i
    let r: Vec<Vec<u64>> = s
        .iter()
        .map(|v| {
            let img: Vec<u64> = (0..k)
                .map(|row| m[row].iter().zip(v).fold(0u64, |acc, (&a, &b)| addm(acc, mulm(a, b, l), l)))
                .collect();
            pivots.iter().map(|&p| img[p]).collect()
        })
        .collect();
    let cp = charpoly(&r, l);
    let lambdas = super::modp::roots(&cp, l);
    let mut out = Vec::new();
    let mut dim = 0;
    for lam in lambdas {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { subm(r[i][j], lam, l) } else { r[i][j] }).collect())
            .collect();
        let ker = left_kernel(&shifted, l);
        let mut rows: Vec<Vec<u64>> = ker
            .iter()
            .map(|v| {
                let mut w = vec![0u64; k];
                for (c, b) in v.iter().zip(&s) {
                    if *c != 0 {
                        for (x, &y) in w.iter_mut().zip(b) {
                            *x = addm(*x, mulm(*c, y, l), l);
                        }
                    }
                }
                w
            })
            .collect();
        rref(&mut rows, l);
        dim += rows.len();
        out.push(rows);
    }
    if dim != d {
        return Err(ChartabError::Internal("class matrix is not diagonalizable on an eigenspace".into()));
    }
    Ok(out)
}
