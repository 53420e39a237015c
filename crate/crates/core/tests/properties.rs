//! Randomized algebraic identities for the exact-arithmetic substrate.

use factstat::{QPoly, Rat};
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rat::ratio(n, d))
}

fn poly_strategy() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rat_strategy(), 0..6).prop_map(QPoly::new)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QPoly::zero());
        prop_assert_eq!(&a * &QPoly::one(), a.clone());
    }

    #[test]
    fn eval_commutes_with_ring_ops(a in poly_strategy(), b in poly_strategy(), r in rat_strategy()) {
        prop_assert_eq!((&a * &b).eval(&r), a.eval(&r) * b.eval(&r));
        prop_assert_eq!((&a + &b).eval(&r), a.eval(&r) + b.eval(&r));
        prop_assert_eq!((&a - &b).eval(&r), a.eval(&r) - b.eval(&r));
    }

    #[test]
    fn pascal_identity_for_polynomial_binomials(p in poly_strategy(), m in 1u32..=6) {
        // binom(p, m) = binom(p-1, m) + binom(p-1, m-1)
        let shifted = &p - &QPoly::one();
        let lhs = p.binomial(m);
        let rhs = &shifted.binomial(m) + &shifted.binomial(m - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multichoose_matches_shifted_binomial(p in poly_strategy(), m in 0u32..=5) {
        // multichoose(p, m) = binom(p + m - 1, m)
        let shift = QPoly::constant(Rat::from_int(m as i64)) - QPoly::one();
        prop_assert_eq!(p.multichoose(m), (&p + &shift).binomial(m));
    }

    #[test]
    fn division_reconstructs(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        if !r.is_zero() {
            prop_assert!(r.degree().unwrap() < b.degree().unwrap());
        }
    }

    #[test]
    fn produced_rationals_stay_normalized(a in rat_strategy(), b in rat_strategy()) {
        for value in [&a + &b, &a * &b, &a - &b] {
            prop_assert!(value.denom().is_positive());
            prop_assert_eq!(value.numer().gcd(value.denom()), num_bigint::BigInt::from(1));
        }
    }
}
