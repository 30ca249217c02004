use super::group::PermGroup;
use super::perm::Perm;
use super::ChartabError;
use num_bigint::BigUint;
use std::collections::HashMap;

/// Action of G on a block system given as a partition of the points.
/// Fails if the partition is not G-invariant.
pub fn block_action(g: &PermGroup, blocks: &[Vec<u32>]) -> Result<PermGroup, ChartabError> {
    let mut which = vec![u32::MAX; g.degree()];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            which[x as usize] = i as u32;
        }
    }
    if which.contains(&u32::MAX) {
        return Err(ChartabError::Precondition("blocks do not cover every point".into()));
    }
    let mut gens = Vec::new();
    for s in g.generators() {
        let mut img = Vec::with_capacity(blocks.len());
        for b in blocks {
            let t = which[s.apply(b[0]) as usize];
            if b.iter().any(|&x| which[s.apply(x) as usize] != t) {
                return Err(ChartabError::Precondition("partition is not a block system".into()));
            }
            img.push(t);
        }
        gens.push(Perm::from_images(img).expect("block images form a permutation"));
    }
    Ok(PermGroup::new(blocks.len(), gens))
}

/// G/Z for a central subgroup Z = <zgens> acting semiregularly, realized
/// on the Z-orbits. The result is checked to have order |G|/|Z|.
pub fn central_quotient(g: &PermGroup, zgens: &[Perm]) -> Result<PermGroup, ChartabError> {
    for z in zgens {
        if !g.contains(z) || g.generators().iter().any(|s| s.mul(z) != z.mul(s)) {
            return Err(ChartabError::Precondition("subgroup is not central".into()));
        }
    }
    let z = PermGroup::new(g.degree(), zgens.to_vec());
    let blocks = z.orbits();
    let q = block_action(g, &blocks)?;
    if q.order() * z.order() != g.order() {
        return Err(ChartabError::Precondition(
            "kernel of the action on orbits of the central subgroup is larger than it".into(),
        ));
    }
    Ok(q)
}

/// Elements of the center of G, found among elements commuting with all
/// generators.
pub fn center_elements(g: &PermGroup) -> Vec<Perm> {
    let mut out = Vec::new();
    g.for_each_element(|x| {
        if g.generators().iter().all(|s| s.mul(x) == x.mul(s)) {
            out.push(x.clone());
        }
    });
    out
}

/// Action of G on the right cosets of a subgroup H. A coset Hx is keyed
/// by the least base image over its elements.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<PermGroup, ChartabError> {
    if h.degree() != g.degree() || h.generators().iter().any(|s| !g.contains(s)) {
        return Err(ChartabError::Precondition("H is not a subgroup of G".into()));
    }
    let hel = h.elements();
    let base = g.base();
    let key = |x: &Perm| -> Vec<u32> {
        hel.iter().map(|y| base.iter().map(|&b| x.apply(y.apply(b))).collect::<Vec<u32>>()).min().unwrap()
    };
    let index = g.order() / h.order();
    let mut reps: Vec<Perm> = vec![g.identity()];
    let mut pos: HashMap<Vec<u32>, u32> = HashMap::new();
    pos.insert(key(&reps[0]), 0);
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); g.generators().len()];
    let mut i = 0;
    while i < reps.len() {
        for (gi, s) in g.generators().iter().enumerate() {
            let y = reps[i].mul(s);
            let k = key(&y);
            let j = match pos.get(&k) {
                Some(&j) => j,
                None => {
                    let j = reps.len() as u32;
                    pos.insert(k, j);
                    reps.push(y);
                    j
                }
            };
            images[gi].push(j);
        }
        i += 1;
    }
    if BigUint::from(reps.len()) != index {
        return Err(ChartabError::Internal("coset enumeration miscounted".into()));
    }
    let gens = images.into_iter().map(|im| Perm::from_images(im).expect("coset action")).collect();
    Ok(PermGroup::new(reps.len(), gens))
}
