//! Arithmetic, linear algebra and polynomial root finding over F_l for a
//! word-sized prime l.

use crate::exactnum::is_prime;
use num_bigint::BigUint;

#[inline]
pub fn mulm(a: u64, b: u64, l: u64) -> u64 {
    ((a as u128 * b as u128) % l as u128) as u64
}

#[inline]
pub fn addm(a: u64, b: u64, l: u64) -> u64 {
    let s = a + b;
    if s >= l {
        s - l
    } else {
        s
    }
}

#[inline]
pub fn subm(a: u64, b: u64, l: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + l - b
    }
}

pub fn powm(mut a: u64, mut e: u64, l: u64) -> u64 {
    let mut r = 1 % l;
    a %= l;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, l);
        }
        a = mulm(a, a, l);
        e >>= 1;
    }
    r
}

pub fn invm(a: u64, l: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(l));
    powm(a, l - 2, l)
}

/// Smallest prime l ≡ 1 (mod e) with l^2 > 4n, so that l > 2·sqrt(n).
pub fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut l = e + 1;
    while (l as u128) * (l as u128) <= 4 * n as u128 || !is_prime(&BigUint::from(l)) {
        l += e;
    }
    l
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Least primitive root mod l raised to (l-1)/e, an element of order e.
pub fn root_of_unity(e: u64, l: u64) -> u64 {
    assert_eq!((l - 1) % e, 0);
    let fs = prime_factors(l - 1);
    let g = (2..l).find(|&g| fs.iter().all(|&f| powm(g, (l - 1) / f, l) != 1)).unwrap_or(1);
    powm(g, (l - 1) / e, l)
}

/// Reduce rows to reduced echelon form in place, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, l: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = invm(rows[r][c], l);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, inv, l);
        }
        let piv = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&piv) {
                *x = subm(*x, mulm(f, y, l), l);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of {v : v·A = 0} for a square matrix A.
pub fn left_kernel(a: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    // v·A = 0  <=>  A^T v^T = 0
    let mut t: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
    let pivots = rref(&mut t, l);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in t.iter().zip(&pivots) {
            v[pc] = subm(0, row[free], l);
        }
        out.push(v);
    }
    out
}

/// Characteristic polynomial det(xI - A), coefficients from degree 0 up,
/// via reduction to Hessenberg form.
pub fn charpoly(a: &[Vec<u64>], l: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = invm(h[j + 1][j], l);
        for i in j + 2..n {
            let u = mulm(h[i][j], inv, l);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let t = mulm(u, h[j + 1][c], l);
                h[i][c] = subm(h[i][c], t, l);
            }
            for row in h.iter_mut() {
                let t = mulm(u, row[i], l);
                row[j + 1] = addm(row[j + 1], t, l);
            }
        }
    }
    let mut ps: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let col = m - 1;
        // (x - h[col][col]) * p_{m-1}
        let prev = &ps[m - 1];
        let mut p = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            p[k + 1] = addm(p[k + 1], c, l);
            p[k] = subm(p[k], mulm(c, h[col][col], l), l);
        }
        let mut t = 1u64;
        for i in (0..col).rev() {
            t = mulm(t, h[i + 1][i], l);
            let f = mulm(h[i][col], t, l);
            if f == 0 {
                continue;
            }
            for (k, &c) in ps[i].iter().enumerate() {
                p[k] = subm(p[k], mulm(f, c, l), l);
            }
        }
        ps.push(p);
    }
    ps.pop().unwrap()
}

fn trim(p: &mut Vec<u64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn poly_rem(a: &[u64], m: &[u64], l: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let inv = invm(m[dm], l);
    while r.len() > dm {
        let d = r.len() - 1;
        let f = mulm(r[d], inv, l);
        if f != 0 {
            for (i, &c) in m.iter().enumerate() {
                let k = d - dm + i;
                r[k] = subm(r[k], mulm(f, c, l), l);
            }
        }
        r.pop();
    }
    if r.is_empty() {
        r.push(0);
    }
    trim(&mut r);
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], l: u64) -> Vec<u64> {
    let mut p = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            p[i + j] = addm(p[i + j], mulm(x, y, l), l);
        }
    }
    poly_rem(&p, m, l)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], l: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = poly_rem(base, m, l);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &b, m, l);
        }
        b = poly_mulmod(&b, &b, m, l);
        e >>= 1;
    }
    r
}

fn is_zero(p: &[u64]) -> bool {
    p.iter().all(|&c| c == 0)
}

fn poly_gcd(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !is_zero(&b) {
        let r = poly_rem(&a, &b, l);
        a = b;
        b = r;
    }
    let inv = invm(*a.last().unwrap(), l);
    a.iter().map(|&c| mulm(c, inv, l)).collect()
}

fn poly_sub_x(p: &[u64], l: u64) -> Vec<u64> {
    let mut q = p.to_vec();
    if q.len() < 2 {
        q.resize(2, 0);
    }
    q[1] = subm(q[1], 1, l);
    trim(&mut q);
    q
}

fn poly_div(a: &[u64], m: &[u64], l: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv = invm(m[dm], l);
    let mut q = vec![0u64; r.len() - dm];
    for d in (dm..r.len()).rev() {
        let f = mulm(r[d], inv, l);
        q[d - dm] = f;
        if f != 0 {
            for (i, &c) in m.iter().enumerate() {
                let k = d - dm + i;
                r[k] = subm(r[k], mulm(f, c, l), l);
            }
        }
    }
    q
}

/// Distinct roots in F_l of a monic polynomial, sorted.
pub fn roots(f: &[u64], l: u64) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    // product of the distinct linear factors: gcd(f, x^l - x)
    let xl = poly_powmod(&[0, 1], l, &f, l);
    let g = poly_gcd(&f, &poly_sub_x(&xl, l), l);
    let mut out = Vec::new();
    split(&g, l, &mut out, 0);
    out.sort_unstable();
    out
}

fn split(g: &[u64], l: u64, out: &mut Vec<u64>, mut a: u64) {
    let d = g.len() - 1;
    if d == 0 {
        return;
    }
    if d == 1 {
        out.push(subm(0, mulm(g[0], invm(g[1], l), l), l));
        return;
    }
    if l == 2 {
        for x in 0..2 {
            if g.iter().rev().fold(0, |acc, &c| addm(mulm(acc, x, l), c, l)) == 0 {
                out.push(x);
            }
        }
        return;
    }
    loop {
        // gcd(g, (x + a)^((l-1)/2) - 1) splits g for most a
        let h = poly_powmod(&[a % l, 1], (l - 1) / 2, g, l);
        let mut h1 = h.clone();
        h1[0] = subm(h1[0], 1, l);
        trim(&mut h1);
        let c = poly_gcd(g, &h1, l);
        let dc = c.len() - 1;
        a += 1;
        if dc > 0 && dc < d {
            let other = poly_div(g, &c, l);
            split(&c, l, out, a);
            split(&other, l, out, a);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots_of_unity() {
        let l = dixon_prime(30, 60);
        assert_eq!(l, 31);
        let z = root_of_unity(30, l);
        assert_eq!(powm(z, 30, l), 1);
        assert!([2, 3, 5, 6, 10, 15].iter().all(|&d| powm(z, d, l) != 1));
        assert_eq!(dixon_prime(4, 10_000), 229);
    }

    #[test]
    fn charpoly_and_roots() {
        let l = 101;
        // companion-like matrix with eigenvalues 2, 3, 3, 7
        let a = vec![
            vec![2, 1, 0, 5],
            vec![0, 3, 0, 9],
            vec![0, 0, 3, 4],
            vec![0, 0, 0, 7],
        ];
        let cp = charpoly(&a, l);
        // (x-2)(x-3)^2(x-7)
        let expect = [(2 * 9 * 7) % l, 0, 0, 0, 1];
        assert_eq!(cp[4], 1);
        assert_eq!(cp[0], expect[0]);
        assert_eq!(roots(&cp, l), vec![2, 3, 7]);
        // invariant under similarity
        let b = vec![vec![1, 0, 0, 0], vec![4, 1, 0, 0], vec![0, 6, 1, 0], vec![9, 0, 2, 1]];
        let binv = {
            let mut m: Vec<Vec<u64>> = b.iter().cloned().enumerate().map(|(i, mut r)| {
                r.extend((0..4).map(|j| u64::from(i == j)));
                r
            }).collect();
            rref(&mut m, l);
            m.into_iter().map(|r| r[4..].to_vec()).collect::<Vec<_>>()
        };
        let mm = |x: &Vec<Vec<u64>>, y: &Vec<Vec<u64>>| -> Vec<Vec<u64>> {
            (0..4)
                .map(|i| (0..4).map(|j| (0..4).fold(0, |s, k| addm(s, mulm(x[i][k], y[k][j], l), l))).collect())
                .collect()
        };
        let c = mm(&mm(&binv, &a), &b);
        assert_eq!(charpoly(&c, l), cp);
        let ker = left_kernel(&[vec![1, 2], vec![2, 4]], l);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        assert_eq!(addm(v[0], mulm(2, v[1], l), l), 0);
    }
}
