use codegree::qsymbolic::{prove_dominance, tz1_sandwich, QPolynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-50i64..50, 0..7).prop_map(|v| QPolynomial::from_i64(&v))
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly(), x in -20i64..20) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).eval_i64(x), a.eval_i64(x) * b.eval_i64(x));
        prop_assert_eq!((&a - &b).eval_i64(x), a.eval_i64(x) - b.eval_i64(x));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn proven_means_true(l in poly(), r in poly(), q0 in 2i64..10) {
        let pr = prove_dominance(&l, &r, q0);
        prop_assert!(pr.recheck());
        if pr.is_proven() {
            for q in q0..=q0 + 50 {
                prop_assert!(l.eval_i64(q) > r.eval_i64(q));
            }
        }
    }

    #[test]
    fn shift_reexpands(a in poly(), q0 in -5i64..12) {
        let shifted = a.shift(&BigInt::from(q0));
        let back = shifted.compose(&QPolynomial::from_i64(&[-q0, 1]));
        prop_assert_eq!(back, a);
    }
}

#[test]
fn tz1_sandwich_all_signs() {
    let tuples: [&[usize]; 3] = [&[2, 3], &[2, 4, 6], &[2, 6, 8, 12]];
    for exps in tuples {
        for mask in 0..(1u32 << exps.len()) {
            let signs: Vec<i64> =
                (0..exps.len()).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect();
            let (lo, hi) = tz1_sandwich(exps, &signs);
            assert!(lo.is_proven(), "lower {exps:?} {signs:?}: {:?}", lo.failure);
            assert!(hi.is_proven(), "upper {exps:?} {signs:?}: {:?}", hi.failure);
            assert!(lo.recheck() && hi.recheck());
        }
    }
}
