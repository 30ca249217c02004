use super::perm::Perm;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use std::collections::HashSet;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// point -> position in `orbit`, NONE if outside.
    index: Vec<u32>,
    /// reps[i] maps the base point to orbit[i].
    reps: Vec<Perm>,
    reps_inv: Vec<Perm>,
    checked: HashSet<(u32, u32)>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        let mut l = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            index: vec![NONE; degree],
            reps: Vec::new(),
            reps_inv: Vec::new(),
            checked: HashSet::new(),
        };
        l.rebuild(degree);
        l
    }

    fn rebuild(&mut self, degree: usize) {
        self.orbit.clear();
        self.reps.clear();
        self.index.iter_mut().for_each(|x| *x = NONE);
        let id = Perm::identity(degree);
        self.orbit.push(self.base);
        self.index[self.base as usize] = 0;
        self.reps.push(id);
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.apply(b);
                if self.index[c as usize] == NONE {
                    self.index[c as usize] = self.orbit.len() as u32;
                    self.orbit.push(c);
                    let r = self.reps[i].mul(s);
                    self.reps.push(r);
                }
            }
            i += 1;
        }
        self.reps_inv = self.reps.iter().map(Perm::inverse).collect();
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    /// Run deterministic Schreier–Sims on the given generators. All
    /// generators must have the same degree.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Self {
        assert!(gens.iter().all(|g| g.degree() == degree), "generator degree mismatch");
        let mut grp = PermGroup { degree, gens, levels: Vec::new() };
        for g in grp.gens.clone() {
            let (res, _) = grp.sift(&g, 0);
            if !res.is_identity() {
                grp.add_strong(0, res);
            }
        }
        grp.schreier_sims();
        grp
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit lengths along the chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * l.orbit.len())
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// Images of the base points; they determine the element.
    pub fn base_image(&self, g: &Perm) -> Vec<u32> {
        self.levels.iter().map(|l| g.apply(l.base)).collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Strip g through the chain from `from`. Returns the residue and the
    /// level where stripping stopped (levels.len() if it went through).
    fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (l, lev) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(lev.base);
            let i = lev.index[b as usize];
            if i == NONE {
                return (h, l);
            }
            h = h.mul(&lev.reps_inv[i as usize]);
        }
        (h, self.levels.len())
    }

    /// Add a strong generator fixing the first `from` base points.
    fn add_strong(&mut self, from: usize, g: Perm) {
        let mut l = from;
        loop {
            if l == self.levels.len() {
                let moved = (0..self.degree as u32).find(|&x| g.apply(x) != x).unwrap();
                self.levels.push(Level::new(self.degree, moved));
            }
            self.levels[l].gens.push(g.clone());
            self.levels[l].rebuild(self.degree);
            if g.apply(self.levels[l].base) != self.levels[l].base {
                break;
            }
            l += 1;
        }
    }

    fn schreier_sims(&mut self) {
        'outer: loop {
            for i in (0..self.levels.len()).rev() {
                let lev = &self.levels[i];
                let mut todo = None;
                'scan: for (pi, &b) in lev.orbit.iter().enumerate() {
                    for (si, s) in lev.gens.iter().enumerate() {
                        if lev.checked.contains(&(b, si as u32)) {
                            continue;
                        }
                        let c = s.apply(b);
                        let h = lev.reps[pi].mul(s).mul(&lev.reps_inv[lev.index[c as usize] as usize]);
                        todo = Some((b, si as u32, h));
                        break 'scan;
                    }
                }
                let Some((b, si, h)) = todo else { continue };
                self.levels[i].checked.insert((b, si));
                let (res, _) = self.sift(&h, i + 1);
                if !res.is_identity() {
                    self.add_strong(i + 1, res);
                }
                continue 'outer;
            }
            break;
        }
        for l in &mut self.levels {
            l.checked = HashSet::new();
        }
    }

    /// Visit every element once, starting with the identity. The order is
    /// fixed by the chain, hence by the generator list.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm)) {
        let id = self.identity();
        if self.levels.is_empty() {
            f(&id);
            return;
        }
        self.walk(self.levels.len() - 1, &id, &mut f);
    }

    fn walk(&self, l: usize, acc: &Perm, f: &mut impl FnMut(&Perm)) {
        for r in &self.levels[l].reps {
            let g = acc.mul(r);
            if l == 0 {
                f(&g);
            } else {
                self.walk(l - 1, &g, f);
            }
        }
    }

    pub fn elements(&self) -> Vec<Perm> {
        let mut v = Vec::new();
        self.for_each_element(|g| v.push(g.clone()));
        v
    }

    /// Orbits of the group on points, each sorted, listed by least point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orb = vec![s as u32];
            let mut i = 0;
            while i < orb.len() {
                for g in &self.gens {
                    let c = g.apply(orb[i]);
                    if !seen[c as usize] {
                        seen[c as usize] = true;
                        orb.push(c);
                    }
                }
                i += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let c: Vec<u32> = (0..n as u32).collect();
        PermGroup::new(
            n,
            vec![Perm::from_cycles(n, &[c]).unwrap(), Perm::from_cycles(n, &[vec![0, 1]]).unwrap()],
        )
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(sym(5).order(), BigUint::from(120u32));
        assert_eq!(sym(8).order(), BigUint::from(40320u32));
        assert_eq!(sym(12).order(), BigUint::from(479001600u64));
        assert_eq!(PermGroup::new(4, vec![]).order(), BigUint::one());
    }

    #[test]
    fn enumeration_and_membership() {
        let g = sym(5);
        let els = g.elements();
        assert_eq!(els.len(), 120);
        assert!(els[0].is_identity());
        let set: HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 120);
        // A5 inside S5
        let a5 = PermGroup::new(
            5,
            vec![
                Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap(),
                Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
            ],
        );
        assert_eq!(a5.order_u64(), Some(60));
        assert!(!a5.contains(&Perm::from_cycles(5, &[vec![0, 1]]).unwrap()));
        assert!(a5.contains(&Perm::from_cycles(5, &[vec![0, 1], vec![2, 3]]).unwrap()));
    }
}
