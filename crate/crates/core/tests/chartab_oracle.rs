//! Dixon–Schneider tables against a floating-point Burnside computation:
//! eigenvectors of a random real combination of class matrices over C.

mod common;

use codegree::chartab::library::by_name;
use codegree::chartab::{character_table, codegrees, conjugacy_classes, coset_action, Caps, PermGroup};
use common::{burnside, numeric_rows, CORPUS};
use num_complex::Complex64;
use std::collections::BTreeSet;

#[test]
fn dixon_matches_burnside_on_corpus() {
    let mut count = 0;
    for name in CORPUS {
        let g = by_name(name).unwrap();
        assert!(g.order_u64().unwrap() <= 2000, "{name}");
        let t = character_table(&g, &Caps::default()).unwrap();
        let o = burnside(&g, 7);
        let mut degs = t.degrees.clone();
        degs.sort_unstable();
        assert_eq!(degs, o.degrees, "{name}: degrees");
        let cod: BTreeSet<u64> = codegrees(&t).unwrap().values.into_iter().collect();
        assert_eq!(cod, o.codegrees, "{name}: codegrees");
        // every oracle row equals a distinct table row
        let mut free: Vec<Vec<Complex64>> = numeric_rows(&t);
        for row in &o.rows {
            let pos = free
                .iter()
                .position(|f| f.iter().zip(row).all(|(a, b)| (a - b).norm() < 1e-6))
                .unwrap_or_else(|| panic!("{name}: oracle row {row:?} missing"));
            free.swap_remove(pos);
        }
        count += 1;
    }
    assert!(count >= 20);
}

/// Subgroup generated by the elements of the given classes.
fn normal_closure_of_classes(g: &PermGroup, classes: &[usize]) -> PermGroup {
    let cc = conjugacy_classes(g, &Caps::default()).unwrap();
    let mut h = PermGroup::new(g.degree(), vec![]);
    for &c in classes {
        for x in cc.class_elements(c) {
            if !h.contains(&x) {
                let mut gens = h.generators().to_vec();
                gens.push(x);
                h = PermGroup::new(g.degree(), gens);
            }
        }
    }
    h
}

#[test]
fn quotient_codegrees_are_codegrees() {
    let mut checked = 0;
    for name in ["S4", "SL2(3)", "GL2(3)", "SL2(5)", "D6", "A4xC2", "S3xS3", "AGL1(5,4)", "C2xA5", "Q8"] {
        let g = by_name(name).unwrap();
        let t = character_table(&g, &Caps::default()).unwrap();
        let cod: BTreeSet<u64> = codegrees(&t).unwrap().values.into_iter().collect();
        let mut kernels: BTreeSet<Vec<usize>> = BTreeSet::new();
        for i in 0..t.num_classes() {
            kernels.insert(codegree::chartab::kernel_classes(&t, i));
        }
        for ker in kernels {
            if ker.len() == 1 || ker.len() == t.num_classes() {
                continue;
            }
            let nsub = normal_closure_of_classes(&g, &ker);
            let q = coset_action(&g, &nsub).unwrap();
            assert_eq!(q.order() * nsub.order(), g.order());
            let tq = character_table(&q, &Caps::default()).unwrap();
            let qcod: BTreeSet<u64> = codegrees(&tq).unwrap().values.into_iter().collect();
            assert!(qcod.is_subset(&cod), "{name}: {qcod:?} not in {cod:?}");
            checked += 1;
        }
    }
    assert!(checked >= 10, "only {checked} quotients");
}
