//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use codegree::catalog::{LieFamily, LieGroup};
use codegree::chartab::{class_matrix, conjugacy_classes, CharacterTable, Caps, PermGroup};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;

/// Burnside's method in floating point: eigenvectors of a random real
/// combination of class matrices over C.
pub const CORPUS: [&str; 30] = [
    "C1", "C2", "C7", "C12", "D4", "D5", "D6", "Q8", "S3", "S4", "S5", "A4", "A5", "A6", "SL2(3)",
    "GL2(3)", "SL2(5)", "PSL2(7)", "PSL2(11)", "AGL1(5,4)", "AGL1(7,3)", "AGL1(11,10)", "C2xS3",
    "C3xC3", "A4xC2", "S3xS3", "SL2(7)", "S6", "PSL2(13)", "C2xA5",
];

pub struct Oracle {
    pub degrees: Vec<u64>,
    pub rows: Vec<Vec<Complex64>>,
    pub codegrees: BTreeSet<u64>,
}

pub fn burnside(g: &PermGroup, seed: u64) -> Oracle {
    let cc = conjugacy_classes(g, &Caps::default()).unwrap();
    let k = cc.len();
    let n = cc.group_order as f64;
    let base = g.base();
    let mats: Vec<Vec<Vec<u64>>> = (0..k).map(|j| class_matrix(&cc, &base, j)).collect();
    let mut rng = StdRng::seed_from_u64(seed);
    'retry: loop {
        let coef: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let a = DMatrix::from_fn(k, k, |r, c| (0..k).map(|j| coef[j] * mats[j][r][c] as f64).sum::<f64>());
        let lams: Vec<Complex64> = a.complex_eigenvalues().iter().copied().collect();
        for i in 0..k {
            for j in 0..i {
                if (lams[i] - lams[j]).norm() < 1e-6 * (1.0 + lams[i].norm()) {
                    continue 'retry;
                }
            }
        }
        let ac: DMatrix<Complex64> = a.map(|x| Complex64::new(x, 0.0));
        let mut rows = Vec::new();
        let mut degrees = Vec::new();
        let mut cods = BTreeSet::new();
        for lam in lams {
            let b = &ac - DMatrix::identity(k, k) * lam;
            let svd = b.svd(false, true);
            let (imin, _) = svd
                .singular_values
                .iter()
                .enumerate()
                .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
                .unwrap();
            let vt = svd.v_t.unwrap();
            let w: Vec<Complex64> = (0..k).map(|c| vt[(imin, c)].conj()).collect();
            let w: Vec<Complex64> = w.iter().map(|x| x / w[0]).collect();
            let s: Complex64 =
                (0..k).map(|c| w[c] * w[cc.inverse[c]] / cc.sizes[c] as f64).sum();
            let d = (n / s.re).sqrt();
            let deg = d.round();
            assert!((d - deg).abs() < 1e-6, "degree {d} not integral");
            let row: Vec<Complex64> = (0..k).map(|c| w[c] * deg / cc.sizes[c] as f64).collect();
            let ker: u64 = (0..k)
                .filter(|&c| (row[c] - Complex64::new(deg, 0.0)).norm() < 1e-6)
                .map(|c| cc.sizes[c])
                .sum();
            cods.insert(cc.group_order / ker / deg as u64);
            degrees.push(deg as u64);
            rows.push(row);
        }
        degrees.sort_unstable();
        return Oracle { degrees, rows, codegrees: cods };
    }
}

pub fn numeric_rows(t: &CharacterTable) -> Vec<Vec<Complex64>> {
    t.values
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| {
                    let (re, im) = v.eval(t.exponent as u32);
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect()
}


pub const Q_SMALL: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];
pub const Q_CLASSICAL: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

pub fn sweep_groups() -> Vec<LieGroup> {
    let mut v = Vec::new();
    for fam in LieFamily::exceptional() {
        let qs: &[u64] = match fam {
            LieFamily::B2tw2 | LieFamily::F4tw2 => &[8, 32],
            LieFamily::G2tw2 => &[27, 243],
            _ => &Q_SMALL,
        };
        v.extend(qs.iter().filter_map(|&q| LieGroup::from_u64(fam, q).ok()));
    }
    for n in 4..=8 {
        v.extend(Q_CLASSICAL.iter().filter_map(|&q| LieGroup::from_u64(LieFamily::Psl { n }, q).ok()));
    }
    for n in 2..=6 {
        v.extend(Q_CLASSICAL.iter().filter_map(|&q| LieGroup::from_u64(LieFamily::Psp { n }, q).ok()));
    }
    v
}
