use super::group::PermGroup;
use super::perm::Perm;
use super::{Caps, ChartabError};
use num_integer::Integer;
use std::collections::{BTreeMap, HashMap, HashSet};

/// Conjugacy classes with a lookup from element to class index.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    pub group_order: u64,
    pub reps: Vec<Perm>,
    pub sizes: Vec<u64>,
    /// Element orders of the representatives.
    pub orders: Vec<u64>,
    /// Class of the inverses.
    pub inverse: Vec<usize>,
    /// p -> (class -> class of p-th powers), for each prime p dividing the
    /// exponent.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub exponent: u64,
    gens: Vec<Perm>,
    base: Vec<u32>,
    lookup: HashMap<Box<[u32]>, u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    fn key(&self, g: &Perm) -> Box<[u32]> {
        self.base.iter().map(|&b| g.apply(b)).collect()
    }

    /// Index of the class containing g, which must lie in the group.
    pub fn class_of(&self, g: &Perm) -> usize {
        self.lookup[&self.key(g)] as usize
    }

    /// Class index from the images of the base points.
    pub fn class_of_key(&self, key: &[u32]) -> usize {
        self.lookup[key] as usize
    }

    pub fn centralizer_order(&self, i: usize) -> u64 {
        self.group_order / self.sizes[i]
    }

    /// All elements of class i, regenerated by conjugation.
    pub fn class_elements(&self, i: usize) -> Vec<Perm> {
        conj_orbit(&self.reps[i], &self.gens, &self.base)
    }

    /// Classes of rep_i^t for t = 0, .., ord(rep_i) - 1.
    pub fn power_classes(&self, i: usize) -> Vec<usize> {
        let g = &self.reps[i];
        let mut out = Vec::with_capacity(self.orders[i] as usize);
        let mut h = Perm::identity(g.degree());
        for _ in 0..self.orders[i] {
            out.push(self.class_of(&h));
            h = h.mul(g);
        }
        out
    }
}

/// Conjugation orbit of x; elements are told apart by their base images.
fn conj_orbit(x: &Perm, gens: &[Perm], base: &[u32]) -> Vec<Perm> {
    let key = |h: &Perm| -> Box<[u32]> { base.iter().map(|&b| h.apply(b)).collect() };
    let mut seen = HashSet::new();
    let mut orb = vec![x.clone()];
    seen.insert(key(x));
    let mut i = 0;
    while i < orb.len() {
        for s in gens {
            let y = orb[i].conj(s);
            if seen.insert(key(&y)) {
                orb.push(y);
            }
        }
        i += 1;
    }
    orb
}

pub(super) fn check_order_cap(g: &PermGroup, caps: &Caps) -> Result<u64, ChartabError> {
    match g.order_u64() {
        Some(n) if n <= caps.max_order => Ok(n),
        _ => Err(ChartabError::OrderCap { order: g.order().to_string(), cap: caps.max_order }),
    }
}

/// Conjugacy classes of G, refusing groups beyond the caps. Classes are
/// ordered by element order, then size, then discovery.
pub fn conjugacy_classes(g: &PermGroup, caps: &Caps) -> Result<ConjugacyClasses, ChartabError> {
    let n = check_order_cap(g, caps)?;
    let base = g.base();
    let gens: Vec<Perm> = g.generators().iter().filter(|s| !s.is_identity()).cloned().collect();
    let key = |h: &Perm| -> Box<[u32]> { base.iter().map(|&b| h.apply(b)).collect() };
    let mut lookup: HashMap<Box<[u32]>, u32> = HashMap::with_capacity(n as usize);
    let mut found: Vec<(Perm, u64)> = Vec::new();
    let mut err = None;
    g.for_each_element(|x| {
        if err.is_some() || lookup.contains_key(&key(x)) {
            return;
        }
        if found.len() == caps.max_classes {
            err = Some(ChartabError::ClassCap { cap: caps.max_classes });
            return;
        }
        let orb = conj_orbit(x, &gens, &base);
        let idx = found.len() as u32;
        for y in &orb {
            lookup.insert(key(y), idx);
        }
        found.push((x.clone(), orb.len() as u64));
    });
    if let Some(e) = err {
        return Err(e);
    }
    debug_assert_eq!(found.iter().map(|c| c.1).sum::<u64>(), n);

    let orders: Vec<u64> = found.iter().map(|c| c.0.order()).collect();
    let mut perm: Vec<usize> = (0..found.len()).collect();
    perm.sort_by_key(|&i| (orders[i], found[i].1, i));
    let mut new_index = vec![0u32; found.len()];
    for (new, &old) in perm.iter().enumerate() {
        new_index[old] = new as u32;
    }
    for v in lookup.values_mut() {
        *v = new_index[*v as usize];
    }
    let reps: Vec<Perm> = perm.iter().map(|&i| found[i].0.clone()).collect();
    let sizes: Vec<u64> = perm.iter().map(|&i| found[i].1).collect();
    let orders: Vec<u64> = perm.iter().map(|&i| orders[i]).collect();
    let exponent = orders.iter().fold(1u64, |a, &o| a.lcm(&o));

    let mut cc = ConjugacyClasses {
        group_order: n,
        reps,
        sizes,
        orders,
        inverse: Vec::new(),
        power_maps: BTreeMap::new(),
        exponent,
        gens,
        base: base.clone(),
        lookup,
    };
    cc.inverse = cc.reps.iter().map(|r| cc.class_of(&r.inverse())).collect();
    let mut primes = Vec::new();
    let mut e = exponent;
    let mut p = 2;
    while e > 1 {
        if e % p == 0 {
            primes.push(p);
            while e % p == 0 {
                e /= p;
            }
        }
        p += 1;
    }
    for p in primes {
        let map = cc.reps.iter().map(|r| cc.class_of(&r.pow(p))).collect();
        cc.power_maps.insert(p, map);
    }
    Ok(cc)
}
