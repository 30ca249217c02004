use codegree::chartab::library::{alternating, cover_2sz8, COVER_2SZ8};
use codegree::chartab::{
    cached_character_table, center_elements, central_quotient, character_table, codegrees,
    step1_witness_check, Caps, GroupInput, TableCache, WitnessVerdict,
};
use std::collections::BTreeSet;

#[test]
fn suzuki_cover_witness() {
    let g = cover_2sz8();
    assert_eq!(g.order_u64(), Some(58240));
    let rep = step1_witness_check(&g, 2, &Caps::default()).unwrap();
    assert_eq!(rep.verdict, WitnessVerdict::Refuted);
    assert_eq!(rep.witness, Some(40));
    assert!(rep.faithful.iter().any(|f| f.degree == 40 && f.divisible_by_r && !f.quotient_degree));
    assert_eq!(rep.quotient_degrees, vec![1, 14, 35, 64, 65, 91]);

    // the quotient on the 560 orbits of the center, computed on its own
    let z = center_elements(&g);
    assert_eq!(z.len(), 2);
    let q = central_quotient(&g, &z[1..]).unwrap();
    assert_eq!(q.degree(), 560);
    assert_eq!(q.order_u64(), Some(29120));
    let tq = character_table(&q, &Caps::default()).unwrap();
    let cd: BTreeSet<u64> = tq.degrees.iter().copied().collect();
    assert_eq!(cd.into_iter().collect::<Vec<_>>(), rep.quotient_degrees);
    let tg = character_table(&g, &Caps::default()).unwrap();
    let cod_g: BTreeSet<u64> = codegrees(&tg).unwrap().values.into_iter().collect();
    let cod_q: BTreeSet<u64> = codegrees(&tq).unwrap().values.into_iter().collect();
    assert!(cod_q.is_subset(&cod_g));
    assert!(cod_g.len() > cod_q.len());
}

#[test]
fn cache_roundtrip() {
    let dir = std::env::temp_dir().join(format!("codegree-cache-test-{}", std::process::id()));
    let cache = TableCache::new(&dir);
    let a5 = alternating(5);
    let input = GroupInput::new(5, a5.generators().to_vec());
    let (_, t1) = cached_character_table(&input, &Caps::default(), Some(&cache)).unwrap();
    let path = dir.join(format!("{}.table.json", input.content_hash()));
    assert!(path.exists());
    let (_, t2) = cached_character_table(&input, &Caps::default(), Some(&cache)).unwrap();
    assert_eq!(t1, t2);
    // a corrupted entry is recomputed, not trusted
    std::fs::write(&path, "{}").unwrap();
    let (_, t3) = cached_character_table(&input, &Caps::default(), Some(&cache)).unwrap();
    assert_eq!(t1, t3);
    // caps are enforced before the cache is consulted
    let small = Caps { max_order: 10, max_classes: 120 };
    assert!(cached_character_table(&input, &small, Some(&cache)).unwrap_err().is_cap());
    std::fs::remove_dir_all(&dir).unwrap();

    let parsed = GroupInput::parse(COVER_2SZ8).unwrap();
    assert_eq!(parsed.degree, 1120);
}
