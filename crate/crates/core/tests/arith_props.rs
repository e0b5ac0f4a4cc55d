use farhi_core::arith::{big_gcd, big_lcm, divisors, factorize_u64, is_prime, v_p};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn factorization_reconstructs(n in 1u64..=1_000_000_000_000) {
        let f = factorize_u64(n).unwrap();
        prop_assert_eq!(f.value(), BigUint::from(n));
        for (p, e) in f.factors() {
            prop_assert!(is_prime(p));
            prop_assert!(*e >= 1);
        }
    }

    #[test]
    fn valuation_is_additive(a in 1i64..1_000_000, b in -1_000_000i64..1_000_000, p in prop::sample::select(vec![2u32, 3, 5, 7, 11, 13, 97])) {
        prop_assume!(b != 0);
        let p = BigUint::from(p);
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(
            v_p(&(&a * &b), &p).unwrap(),
            v_p(&a, &p).unwrap() + v_p(&b, &p).unwrap()
        );
    }

    #[test]
    fn gcd_times_lcm(a in -1_000_000_000i64..1_000_000_000, b in -1_000_000_000i64..1_000_000_000) {
        prop_assume!(a != 0 && b != 0);
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let g = big_gcd(&[a.clone(), b.clone()]).unwrap();
        let l = big_lcm(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(g * l, (a * b).magnitude().clone());
    }

    #[test]
    fn divisor_count(n in 1u64..2_000_000) {
        let f = factorize_u64(n).unwrap();
        let ds = divisors(&f);
        let expected: usize = f.factors().iter().map(|(_, e)| *e as usize + 1).product();
        prop_assert_eq!(ds.len(), expected);
        let n = BigUint::from(n);
        prop_assert!(ds.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(ds.iter().all(|d| (&n % d).is_zero()));
    }
}
