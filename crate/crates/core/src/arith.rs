//! Big-integer number theory: valuations, gcd/lcm, factorization, divisors.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("valuation of zero is infinite")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("cannot factor zero")]
    FactorZero,
    #[error("lcm is undefined when an entry is zero")]
    ZeroInLcm,
    #[error("empty input list")]
    Empty,
    #[error("factorization pairs must be ascending primes with positive exponents")]
    InvalidFactorization,
}

const TRIAL_LIMIT: u32 = 1_000_000;

/// Deterministic Miller-Rabin witnesses covering every `n < 2^64`.
const WITNESSES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_ROUNDS: usize = 40;
const MR_SEED: u64 = 0x5eed_f4a1;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

/// Positive integer as strictly ascending `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Validates ordering, exponents and primality.
    pub fn from_pairs(pairs: Vec<(BigUint, u32)>) -> Result<Self, ArithError> {
        let ascending = pairs.windows(2).all(|w| w[0].0 < w[1].0);
        if !ascending || pairs.iter().any(|(p, e)| *e == 0 || !is_prime(p)) {
            return Err(ArithError::InvalidFactorization);
        }
        Ok(Factorization { factors: pairs })
    }

    fn from_map(map: BTreeMap<BigUint, u32>) -> Self {
        Factorization { factors: map.into_iter().filter(|(_, e)| *e > 0).collect() }
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors.iter().find(|(q, _)| q == p).map_or(0, |(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn value(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// Product of prime powers given in any order; zero exponents are dropped.
    pub fn from_prime_powers<I: IntoIterator<Item = (BigUint, u32)>>(it: I) -> Self {
        let mut map = BTreeMap::new();
        for (p, e) in it {
            *map.entry(p).or_insert(0) += e;
        }
        Self::from_map(map)
    }

    pub fn mul(&self, other: &Factorization) -> Factorization {
        Self::from_prime_powers(self.factors.iter().chain(&other.factors).cloned())
    }
}

/// `2^2·3·7`, or `1` for the empty product.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exponent of `p` in `|n|`, without checking that `p` is prime.
pub(crate) fn valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero() && p > 1);
    let mut m = n.magnitude().clone();
    let p = BigUint::from(p);
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}

/// `v_p(n)`: the exact exponent of the prime `p` in `|n|`.
pub fn v_p(n: &BigInt, p: &BigUint) -> Result<u32, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p.clone()));
    }
    let mut m = n.magnitude().clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        m = q;
        e += 1;
    }
}

/// gcd of absolute values; a list of zeros gives 0.
pub fn big_gcd(xs: &[BigInt]) -> Result<BigUint, ArithError> {
    if xs.is_empty() {
        return Err(ArithError::Empty);
    }
    Ok(xs.iter().fold(BigUint::zero(), |acc, x| acc.gcd(x.magnitude())))
}

/// lcm of absolute values; every entry must be nonzero.
pub fn big_lcm(xs: &[BigInt]) -> Result<BigUint, ArithError> {
    if xs.is_empty() {
        return Err(ArithError::Empty);
    }
    let mut acc = BigUint::one();
    for x in xs {
        if x.is_zero() {
            return Err(ArithError::ZeroInLcm);
        }
        acc = acc.lcm(x.magnitude());
    }
    Ok(acc)
}

fn miller_rabin_round(n: &BigUint, d: &BigUint, s: u32, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n1 = n - &one;
    let mut x = a.modpow(d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Deterministic below `2^64`; above that, 40 strong-probable-prime rounds
/// with bases drawn from a fixed-seed generator.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for &p in &WITNESSES_64 {
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
    } else if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0) as u32;
    let d = &n1 >> s;
    if n.bits() <= 64 {
        WITNESSES_64.iter().all(|&a| miller_rabin_round(n, &d, s, &BigUint::from(a)))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(MR_SEED);
        (0..RANDOM_ROUNDS).all(|_| {
            let a = BigUint::from(rng.gen_range(2..u64::MAX));
            miller_rabin_round(n, &d, s, &a)
        })
    }
}

/// Brent's variant of Pollard rho; `n` must be odd and composite.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let dist = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut c = BigUint::one();
    loop {
        let step = |v: &BigUint| (v * v + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut r: u64 = 1;
        const M: u64 = 128;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..M.min(r - k) {
                    y = step(&y);
                    q = (q * dist(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += M;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                g = dist(&x, &ys).gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Complete factorization: trial division by primes up to 10^6, then
/// Pollard rho with Miller-Rabin certification of the cofactors.
pub fn factorize(n: &BigUint) -> Result<Factorization, ArithError> {
    if n.is_zero() {
        return Err(ArithError::FactorZero);
    }
    let mut map: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            *map.entry(pb.clone()).or_insert(0) += 1;
        }
    }
    let mut stack = Vec::new();
    if !rest.is_one() {
        stack.push(rest);
    }
    let limit_sq = BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT);
    while let Some(m) = stack.pop() {
        if m < limit_sq || is_prime(&m) {
            // every factor below 10^6 is gone, so m < 10^12 must be prime
            *map.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(&m);
        let other = &m / &d;
        stack.push(d);
        stack.push(other);
    }
    Ok(Factorization::from_map(map))
}

pub fn factorize_u64(n: u64) -> Result<Factorization, ArithError> {
    factorize(&BigUint::from(n))
}

/// All divisors of the factored value, ascending.
pub fn divisors(f: &Factorization) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in f.factors() {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..*e {
                pk *= p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}
