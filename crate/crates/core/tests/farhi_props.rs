use farhi_core::farhi::{
    criterion_max_period, criterion_trivial_period, least_period, oracle_least_period, prime_least_period,
};
use farhi_core::polyarith::poly_parse;
use farhi_core::{FarhiInstance, IntPoly};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const POLYS: &[&str] = &[
    "x",
    "x+1",
    "2*x+1",
    "3*x-2",
    "5*x+3",
    "x^2",
    "x^2+1",
    "x^2+2",
    "x^2+3",
    "x^2+5",
    "x^2+x+1",
    "x^2-2",
    "2*x^2+1",
    "x^2+x-1",
    "x^3+1",
    "x^3+2",
    "x^3-x+1",
    "x^3+x+1",
    "x^3+2*x+3",
    "x^3-2",
    "x^2-4",
];

fn corpus() -> Vec<FarhiInstance> {
    let mut out = Vec::new();
    for f in POLYS {
        for k in 1..=4 {
            if let Ok(inst) = FarhiInstance::new(poly_parse(f).unwrap(), k) {
                if inst.c() <= &BigUint::from(200_000u32) {
                    out.push(inst);
                }
            }
        }
    }
    out
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(7)
}

fn small_primes() -> Vec<u64> {
    (2..60u64).filter(|&p| (2..p).all(|d| p % d != 0)).collect()
}

#[test]
fn corpus_has_cheap_instances_of_every_degree() {
    let cheap: Vec<_> = corpus().into_iter().filter(|i| i.c() <= &BigUint::from(10_000u32)).collect();
    assert!(cheap.len() >= 30, "{}", cheap.len());
    for d in 1..=3 {
        assert!(cheap.iter().any(|i| i.f().degree() == Some(d)));
    }
}

#[test]
fn engine_matches_oracle() {
    for inst in corpus() {
        if inst.c() > &BigUint::from(10_000u32) {
            continue;
        }
        let report = least_period(&inst).unwrap();
        let oracle = oracle_least_period(&inst, 10_000).unwrap();
        assert_eq!(report.t, oracle, "f = {}, k = {}", inst.f(), inst.k());
    }
}

#[test]
fn period_divides_c() {
    for inst in corpus() {
        let t = least_period(&inst).unwrap().t;
        assert!(inst.c().is_multiple_of(&t), "f = {}, k = {}", inst.f(), inst.k());
    }
}

#[test]
fn extension_is_periodic() {
    let mut rng = rng();
    for inst in corpus() {
        let t = BigInt::from(least_period(&inst).unwrap().t);
        let mut points: Vec<BigInt> = inst.zero_set().iter().cloned().collect();
        points.extend((0..500).map(|_| BigInt::from(rng.gen_range(-10_000i64..10_000))));
        for n in points {
            assert_eq!(inst.g_eval_ext(&n), inst.g_eval_ext(&(&n + &t)), "f = {}, n = {n}", inst.f());
        }
    }
}

#[test]
fn counting_identity() {
    let mut rng = rng();
    for inst in corpus() {
        for (p, _) in inst.c_factored().factors() {
            let p = p.to_u64().unwrap();
            let e_p = prime_least_period(&inst, p).unwrap().e_p;
            let window = p.pow(e_p) as i64;
            let random = (0..100).map(|_| rng.gen_range(-5_000i64..5_000));
            for n in (1..=window).chain(random) {
                let n = BigInt::from(n);
                assert_eq!(
                    inst.h_eval(p, &n).unwrap(),
                    inst.h_eval_counting(p, &n).unwrap(),
                    "f = {}, k = {}, p = {p}, n = {n}",
                    inst.f(),
                    inst.k()
                );
            }
        }
    }
}

#[test]
fn primes_outside_c_contribute_nothing() {
    let mut rng = rng();
    for inst in corpus() {
        for p in small_primes() {
            if inst.c().is_multiple_of(&BigUint::from(p)) {
                continue;
            }
            for _ in 0..100 {
                let n = BigInt::from(rng.gen_range(-5_000i64..5_000));
                assert_eq!(inst.h_eval(p, &n).unwrap(), 0, "f = {}, p = {p}", inst.f());
            }
        }
    }
}

#[test]
fn criteria_agree_with_engine() {
    for inst in corpus() {
        for (p, _) in inst.c_factored().factors() {
            let p = p.to_u64().unwrap();
            let local = prime_least_period(&inst, p).unwrap();
            if local.e_p == 0 {
                continue;
            }
            let ctx = format!("f = {}, k = {}, p = {p}, {local:?}", inst.f(), inst.k());
            assert_eq!(criterion_trivial_period(&inst, p).unwrap(), local.t == 0, "{ctx}");
            assert_eq!(criterion_max_period(&inst, p).unwrap(), local.t == local.e_p, "{ctx}");
        }
    }
}

#[test]
fn pairwise_gcds_shift_by_constants() {
    let mut rng = rng();
    for inst in corpus() {
        for i in 1..=inst.k() {
            let ci = inst.constant(i).unwrap().clone();
            for _ in 0..200 {
                let n = BigInt::from(rng.gen_range(-10_000i64..10_000));
                let both_zero = |m: &BigInt| inst.f().eval(m).is_zero() && inst.f().eval(&(m + i)).is_zero();
                if both_zero(&n) || both_zero(&(&n + &ci)) {
                    continue;
                }
                assert_eq!(inst.d_i(i, &n).unwrap(), inst.d_i(i, &(&n + &ci)).unwrap());
            }
        }
    }
}

fn pairwise_gcds(inst: &FarhiInstance, n: &BigInt) -> Option<Vec<BigInt>> {
    let k = inst.k();
    let vals: Vec<BigInt> = (0..=k).map(|i| inst.f().eval(&(n + i))).collect();
    if vals.iter().any(Zero::is_zero) {
        return None;
    }
    Some((0..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j))).map(|(i, j)| vals[i].gcd(&vals[j])).collect())
}

// The least period need not preserve every pairwise gcd (f = x, k = 3 has
// T = 3 while gcd(n, n+2) has period 2), so agreement is checked under C,
// and the implication "equal gcds => equal g" under T.
#[test]
fn pairwise_gcds_shift_by_period() {
    let mut rng = rng();
    for inst in corpus() {
        let c = BigInt::from(inst.c().clone());
        let t = BigInt::from(least_period(&inst).unwrap().t);
        for _ in 0..200 {
            let n = BigInt::from(rng.gen_range(-10_000i64..10_000));
            let Some(here) = pairwise_gcds(&inst, &n) else { continue };
            if let Some(there) = pairwise_gcds(&inst, &(&n + &c)) {
                assert_eq!(here, there, "f = {}, k = {}, n = {n}", inst.f(), inst.k());
                assert_eq!(inst.g_eval(&n).unwrap(), inst.g_eval(&(&n + &c)).unwrap());
            }
            if pairwise_gcds(&inst, &(&n + &t)).as_ref() == Some(&here) {
                assert_eq!(inst.g_eval(&n).unwrap(), inst.g_eval(&(&n + &t)).unwrap());
            }
        }
    }
}

#[test]
fn g_divides_window_product() {
    let mut rng = rng();
    for inst in corpus() {
        for _ in 0..100 {
            let n = BigInt::from(rng.gen_range(-10_000i64..10_000));
            let Ok(g) = inst.g_eval(&n) else { continue };
            let prod = (0..=inst.k()).fold(BigUint::one(), |acc, i| acc * inst.f().eval(&(&n + i)).magnitude());
            assert!(g >= BigUint::one());
            assert!(prod.is_multiple_of(&g));
        }
    }
}

#[test]
fn perfect_powers_share_periods() {
    let bases = ["x", "x^2+1", "2*x+1", "x^2+x+1", "x^3+1"];
    let mut rng = rng();
    for base in bases {
        let b = poly_parse(base).unwrap();
        for r in [2u32, 3] {
            let f = b.pow(r);
            for k in 1..=3 {
                let bi = FarhiInstance::new(b.clone(), k).unwrap();
                let fi = FarhiInstance::new(f.clone(), k).unwrap();
                assert_eq!(least_period(&fi).unwrap().t, least_period(&bi).unwrap().t, "{base}^{r}, k = {k}");
                for _ in 0..50 {
                    let n = BigInt::from(rng.gen_range(-1_000i64..1_000));
                    if let (Ok(gf), Ok(gb)) = (fi.g_eval(&n), bi.g_eval(&n)) {
                        assert_eq!(gf, gb.pow(r));
                    }
                }
            }
        }
    }
}

fn random_instance() -> impl Strategy<Value = FarhiInstance> {
    (prop::collection::vec(-6i64..=6, 2..=4), 1usize..=3).prop_filter_map("hypothesis", |(c, k)| {
        let f = IntPoly::from_i64s(&c);
        if f.is_constant() {
            return None;
        }
        FarhiInstance::new(f, k).ok().filter(|i| i.c() <= &BigUint::from(10_000u32))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_instances_match_oracle(inst in random_instance()) {
        let report = least_period(&inst).unwrap();
        prop_assert_eq!(report.t, oracle_least_period(&inst, 10_000).unwrap());
    }

    #[test]
    fn random_instances_counting_identity(inst in random_instance(), n in -2_000i64..2_000) {
        for (p, _) in inst.c_factored().factors() {
            let p = p.to_u64().unwrap();
            let n = BigInt::from(n);
            prop_assert_eq!(inst.h_eval(p, &n).unwrap(), inst.h_eval_counting(p, &n).unwrap());
        }
    }
}
