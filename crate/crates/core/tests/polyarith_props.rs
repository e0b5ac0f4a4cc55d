use farhi_core::polyarith::{ideal_int_generator, perfect_power_decompose, poly_parse, rat_gcd, resultant};
use farhi_core::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small_poly(max_len: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonconstant(max_len: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    small_poly(max_len, bound).prop_filter("nonconstant", |f| !f.is_constant())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shift_then_eval(f in small_poly(6, 20), s in -50i64..50, n in prop::collection::vec(-1000i64..1000, 100)) {
        let shifted = f.shift_i64(s);
        for n in n {
            prop_assert_eq!(shifted.eval_i64(n), f.eval_i64(n + s));
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(f in nonconstant(4, 4), g in nonconstant(4, 4), h in small_poly(3, 3)) {
        // mix coprime pairs with pairs sharing h
        for (a, b) in [(f.clone(), g.clone()), (&f * &h, &g * &h)] {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let res = resultant(&a, &b).unwrap();
            let d = rat_gcd(&a, &b).unwrap();
            prop_assert_eq!(res.is_zero(), d.degree().unwrap_or(0) >= 1, "{} / {}", a, b);
        }
    }

    #[test]
    fn generator_certificate_divides_resultant(f in nonconstant(4, 6), g in nonconstant(4, 6)) {
        let res = resultant(&f, &g).unwrap();
        prop_assume!(!res.is_zero());
        let cert = ideal_int_generator(&f, &g).unwrap();
        prop_assert!(cert.verify(&f, &g));
        let lhs = &(&cert.a * &f) + &(&cert.b * &g);
        prop_assert_eq!(lhs, IntPoly::constant(cert.c.clone()));
        prop_assert!(cert.c.is_positive());
        prop_assert!(res.abs().is_multiple_of(&cert.c), "c = {} res = {}", cert.c, res);
    }

    #[test]
    fn shifted_pairs_generate(f in nonconstant(4, 6), i in 1i64..6) {
        let g = f.shift_i64(i);
        let res = resultant(&f, &g).unwrap();
        prop_assume!(!res.is_zero());
        let cert = ideal_int_generator(&f, &g).unwrap();
        prop_assert!(cert.verify(&f, &g));
        prop_assert!(res.abs().is_multiple_of(&cert.c));
    }

    #[test]
    fn perfect_power_is_exact_and_maximal(base in nonconstant(3, 5), r in 1u32..=3) {
        let f = base.pow(r);
        let (b, s) = perfect_power_decompose(&f).unwrap();
        prop_assert_eq!(b.pow(s), f.clone());
        prop_assert!(s % r == 0);
        // maximal exactly when the base is not itself a proper power
        prop_assert_eq!(perfect_power_decompose(&b).unwrap().1, 1);
    }

    #[test]
    fn parse_print_round_trip(f in small_poly(8, 1_000_000)) {
        let text = f.to_string();
        prop_assert_eq!(poly_parse(&text).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_print_round_trip_wide(c in prop::collection::vec(any::<i64>(), 1..=7)) {
        let f = IntPoly::new(c.into_iter().map(BigInt::from).collect());
        prop_assert_eq!(poly_parse(&f.to_string()).unwrap(), f);
    }
}
