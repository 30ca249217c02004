//! Small groups as permutation groups, for tests and examples.

use super::group::PermGroup;
use super::parse::GroupInput;
use super::perm::Perm;

/// 2·Sz(8), order 58240, on 1120 points.
pub const COVER_2SZ8: &str = include_str!("../../data/groups/2sz8.grp");

fn cyc(n: usize, cycles: &[&[u32]]) -> Perm {
    let cs: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
    Perm::from_cycles(n, &cs).expect("valid cycles")
}

pub fn cyclic(n: usize) -> PermGroup {
    let c: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![cyc(n, &[&c])])
}

/// Dihedral group of order 2n on n points.
pub fn dihedral(n: usize) -> PermGroup {
    let c: Vec<u32> = (0..n as u32).collect();
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    PermGroup::new(n, vec![cyc(n, &[&c]), Perm::from_images(refl).unwrap()])
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::new(n.max(1), vec![]);
    }
    let c: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![cyc(n, &[&c]), cyc(n, &[&[0, 1]])])
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::new(n.max(1), vec![]);
    }
    // 3-cycles (1 2 k) generate A_n
    let gens = (2..n as u32).map(|k| cyc(n, &[&[0, 1, k]])).collect();
    PermGroup::new(n, gens)
}

/// Quaternion group in its regular representation.
pub fn quaternion8() -> PermGroup {
    // elements ±1, ±i, ±j, ±k numbered 1,-1,i,-i,j,-j,k,-k = 0..7
    let i = cyc(8, &[&[0, 2, 1, 3], &[4, 7, 5, 6]]);
    let j = cyc(8, &[&[0, 4, 1, 5], &[2, 6, 3, 7]]);
    PermGroup::new(8, vec![i, j])
}

/// Direct product acting on the disjoint union of the point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (na, nb) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for s in a.generators() {
        let mut im: Vec<u32> = s.images().to_vec();
        im.extend((na..na + nb).map(|x| x as u32));
        gens.push(Perm::from_images(im).unwrap());
    }
    for s in b.generators() {
        let mut im: Vec<u32> = (0..na as u32).collect();
        im.extend(s.images().iter().map(|&x| x + na as u32));
        gens.push(Perm::from_images(im).unwrap());
    }
    PermGroup::new(na + nb, gens)
}

/// Matrix group over F_p acting on the nonzero row vectors of F_p^2.
fn linear_on_vectors(p: u32, mats: &[[[u32; 2]; 2]]) -> PermGroup {
    let n = (p * p - 1) as usize;
    let idx = |x: u32, y: u32| (x * p + y - 1) as usize;
    let gens = mats
        .iter()
        .map(|m| {
            let mut im = vec![0u32; n];
            for x in 0..p {
                for y in 0..p {
                    if x == 0 && y == 0 {
                        continue;
                    }
                    let nx = (x * m[0][0] + y * m[1][0]) % p;
                    let ny = (x * m[0][1] + y * m[1][1]) % p;
                    im[idx(x, y)] = idx(nx, ny) as u32;
                }
            }
            Perm::from_images(im).unwrap()
        })
        .collect();
    PermGroup::new(n, gens)
}

/// SL(2, p) on the p^2 - 1 nonzero vectors, p prime.
pub fn sl2(p: u32) -> PermGroup {
    linear_on_vectors(p, &[[[1, 1], [0, 1]], [[0, 1], [p - 1, 0]]])
}

/// GL(2, p) on the p^2 - 1 nonzero vectors, p prime.
pub fn gl2(p: u32) -> PermGroup {
    let g = (2..p).find(|&g| (1..p - 1).all(|k| (0..k).fold(1, |a, _| a * g % p) != 1)).unwrap_or(1);
    linear_on_vectors(p, &[[[1, 1], [0, 1]], [[0, 1], [p - 1, 0]], [[g, 0], [0, 1]]])
}

/// PSL(2, p) on the projective line, p an odd prime; ∞ is point p.
pub fn psl2(p: u32) -> PermGroup {
    let n = (p + 1) as usize;
    let inf = p;
    let t: Vec<u32> = (0..=p).map(|x| if x == inf { inf } else { (x + 1) % p }).collect();
    // x -> -1/x
    let s: Vec<u32> = (0..=p)
        .map(|x| {
            if x == inf {
                0
            } else if x == 0 {
                inf
            } else {
                let inv = (1..p).find(|&y| x * y % p == 1).unwrap();
                (p - inv) % p
            }
        })
        .collect();
    PermGroup::new(n, vec![Perm::from_images(t).unwrap(), Perm::from_images(s).unwrap()])
}

/// Affine maps x -> ax + b on F_p with a in the subgroup of order k of F_p^*.
pub fn affine(p: u32, k: u32) -> PermGroup {
    assert_eq!((p - 1) % k, 0);
    let g = (2..p).find(|&g| (1..p - 1).all(|j| (0..j).fold(1, |a, _| a * g % p) != 1)).unwrap_or(1);
    let a = (0..(p - 1) / k).fold(1, |acc, _| acc * g % p);
    let n = p as usize;
    let shift = Perm::from_images((0..p).map(|x| (x + 1) % p).collect()).unwrap();
    let scale = Perm::from_images((0..p).map(|x| x * a % p).collect()).unwrap();
    PermGroup::new(n, vec![shift, scale])
}

/// The shipped permutation presentation of 2·Sz(8).
pub fn cover_2sz8() -> PermGroup {
    let inp = GroupInput::parse(COVER_2SZ8).expect("shipped group file parses");
    PermGroup::new(inp.degree, inp.gens)
}

/// Look up a group by a short name: C<n>, D<n> (order 2n), S<n>, A<n>,
/// Q8, SL2(p), GL2(p), PSL2(p), AGL1(p,k), 2Sz8, or products joined by
/// "x".
pub fn by_name(name: &str) -> Option<PermGroup> {
    let name = name.trim();
    if let Some((a, b)) = name.split_once('x') {
        return Some(direct_product(&by_name(a)?, &by_name(b)?));
    }
    let num = |s: &str| s.parse::<u32>().ok();
    let paren = |s: &str, pre: &str| s.strip_prefix(pre).and_then(|r| r.strip_suffix(')')).map(str::to_string);
    if name == "Q8" {
        return Some(quaternion8());
    }
    if name == "2Sz8" {
        return Some(cover_2sz8());
    }
    if let Some(p) = paren(name, "SL2(").and_then(|s| num(&s)) {
        return Some(sl2(p));
    }
    if let Some(p) = paren(name, "GL2(").and_then(|s| num(&s)) {
        return Some(gl2(p));
    }
    if let Some(p) = paren(name, "PSL2(").and_then(|s| num(&s)) {
        return (p > 2).then(|| psl2(p));
    }
    if let Some(s) = paren(name, "AGL1(") {
        let (p, k) = s.split_once(',')?;
        return Some(affine(num(p.trim())?, num(k.trim())?));
    }
    let (head, rest) = name.split_at(1);
    let n = num(rest)? as usize;
    match head {
        "C" if n >= 1 => Some(cyclic(n)),
        "D" if n >= 3 => Some(dihedral(n)),
        "S" if n >= 1 => Some(symmetric(n)),
        "A" if n >= 1 => Some(alternating(n)),
        _ => None,
    }
}
