use codegree::catalog::{
    lsz_bound, min_module_dim, order, order_factorization, sylow_order, LieFamily, LieGroup,
};
use codegree::exactnum::{factorize, rpart};
use num_bigint::BigUint;
use num_traits::One;

fn fam_list() -> Vec<LieFamily> {
    let mut v = LieFamily::exceptional();
    v.extend((4..=8).map(|n| LieFamily::Psl { n }));
    v.extend((2..=6).map(|n| LieFamily::Psp { n }));
    v
}

#[test]
fn printed_factorizations() {
    let cases: [(LieFamily, u64, &str); 7] = [
        (LieFamily::G2, 3, "2^6 · 3^6 · 7 · 13"),
        (LieFamily::G2, 4, "2^12 · 3^3 · 5^2 · 7 · 13"),
        (LieFamily::F4, 2, "2^24 · 3^6 · 5^2 · 7^2 · 13 · 17"),
        (LieFamily::B2tw2, 8, "2^6 · 5 · 7 · 13"),
        (LieFamily::Psl { n: 6 }, 2, "2^15 · 3^4 · 5 · 7^2 · 31"),
        (LieFamily::Psl { n: 6 }, 3, "2^11 · 3^15 · 5 · 7 · 11^2 · 13^2"),
        (LieFamily::Psp { n: 3 }, 2, "2^9 · 3^4 · 5 · 7"),
    ];
    for (f, q, want) in cases {
        let g = LieGroup::from_u64(f, q).unwrap();
        assert_eq!(factorize(&order(&g)).to_string(), want, "{}", g.name());
        assert_eq!(order_factorization(&g).unwrap().to_string(), want);
    }
}

#[test]
fn sylow_product_is_order() {
    let limit = BigUint::from(10u32).pow(40);
    let mut checked = 0;
    for f in fam_list() {
        for q in 2..=64u64 {
            let Ok(g) = LieGroup::from_u64(f, q) else { continue };
            let n = order(&g);
            if n > limit {
                continue;
            }
            let fac = order_factorization(&g).unwrap();
            let mut prod = BigUint::one();
            for r in fac.primes() {
                let s = sylow_order(&g, r).unwrap();
                assert_eq!(s, rpart(&n, r).unwrap());
                prod *= s;
            }
            assert_eq!(prod, n, "{}", g.name());
            // a prime not dividing |H|
            let mut r = BigUint::from(2u32);
            while fac.exponent(&r) > 0 || !codegree::exactnum::is_prime(&r) {
                r += 1u32;
            }
            assert!(sylow_order(&g, &r).unwrap().is_one());
            checked += 1;
        }
    }
    assert!(checked > 60, "only {checked} instances");
}

#[test]
fn large_orders_factor_wise() {
    // |E8(9)| has large cyclotomic cofactors
    for (f, q) in [(LieFamily::E8, 9u64), (LieFamily::E8, 13), (LieFamily::E7, 11), (LieFamily::F4tw2, 32)] {
        let g = LieGroup::from_u64(f, q).unwrap();
        let fac = order_factorization(&g).unwrap();
        assert_eq!(fac.value(), order(&g));
        for r in fac.primes().take(6) {
            sylow_order(&g, r).unwrap();
        }
    }
}

#[test]
fn rejections() {
    assert!(LieGroup::from_u64(LieFamily::Psl { n: 4 }, 2).is_err());
    assert!(LieGroup::from_u64(LieFamily::Psp { n: 2 }, 2).is_err());
    assert!(LieGroup::from_u64(LieFamily::G2, 2).is_err());
    assert!(LieGroup::from_u64(LieFamily::G2tw2, 3).is_err());
    assert!(LieGroup::from_u64(LieFamily::F4tw2, 2).is_err());
    assert!(LieGroup::from_u64(LieFamily::B2tw2, 2).is_err());
    assert!(LieGroup::from_u64(LieFamily::E8, 12).is_err());
    // every accepted instance yields a bound and a dimension
    for f in fam_list() {
        for q in [2u64, 3, 4, 5, 8, 27] {
            if let Ok(g) = LieGroup::from_u64(f, q) {
                assert!(lsz_bound(&g, false) > BigUint::from(1u32));
                assert!(min_module_dim(f, g.p()) >= 4);
            }
        }
    }
}
