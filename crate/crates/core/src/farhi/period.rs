//! Per-prime least periods of `h_p = v_p ∘ g` and their assembly.
//!
//! For a prime `p`, `e_p` is the largest `p`-valuation of a pairwise gcd
//! `gcd(f(n), f(n+i))`, `1 <= i <= k`. Two window values can share at most
//! `p^{e_p}`, so `h_p` is `p^{e_p}`-periodic and its least period is a power
//! of `p`. The least period of `g` is the product of those powers over the
//! primes dividing `C`; every other prime has `h_p ≡ 0`.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::{check_prime, excess, FarhiError, FarhiInstance};
use crate::arith::{valuation, Factorization};

/// Largest `p^e` window the scanners will enumerate.
pub const MAX_SCAN_WINDOW: u64 = 1 << 24;

/// Least period `p^t` of `h_p` together with `e_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeLocalReport {
    pub p: u64,
    pub e_p: u32,
    /// Exponent `t` of the least period `p^t`.
    pub t: u32,
    /// For `t >= 1`: some `n` with `h_p(n) != h_p(n + p^{t-1})`.
    pub witness: Option<i64>,
}

impl PrimeLocalReport {
    pub fn period(&self) -> BigUint {
        BigUint::from(self.p).pow(self.t)
    }
}

/// Least period of `g` with its per-prime breakdown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub f: String,
    pub k: usize,
    pub c: BigUint,
    pub locals: Vec<PrimeLocalReport>,
    pub t: BigUint,
    pub t_factored: Factorization,
}

fn prime_power(p: u64, e: u32) -> Result<u64, FarhiError> {
    p.checked_pow(e).filter(|&w| w <= MAX_SCAN_WINDOW).ok_or(FarhiError::WindowTooLarge { p: BigUint::from(p), e })
}

fn v_c(inst: &FarhiInstance, p: u64) -> u32 {
    inst.c_factored().exponent_of(&BigUint::from(p))
}

/// Valuations `v_p(f(m))` for `m = 1..=len`; `None` marks a zero of `f`.
struct ValuationTable<'a> {
    inst: &'a FarhiInstance,
    p: u64,
    vals: Vec<Option<u32>>,
}

impl<'a> ValuationTable<'a> {
    fn new(inst: &'a FarhiInstance, p: u64, len: u64) -> Self {
        let vals = (1..=len as i64)
            .map(|m| {
                let v = inst.f().eval_i64(m);
                (!v.is_zero()).then(|| valuation(&v, p))
            })
            .collect();
        ValuationTable { inst, p, vals }
    }

    fn get(&self, m: i64) -> Option<u32> {
        self.vals[(m - 1) as usize]
    }

    /// `h_p(n)`; windows touching a zero are re-evaluated after a shift by `C`.
    fn h(&self, n: i64) -> u32 {
        let k = self.inst.k() as i64;
        let window: Option<Vec<u32>> = (n..=n + k).map(|m| self.get(m)).collect();
        match window {
            Some(vals) => excess(&vals),
            None => self.inst.h_unchecked(self.p, &BigInt::from(n)),
        }
    }

    /// `v_p(d_i(n))`, shifting by multiples of `C` if either value vanishes.
    fn d_valuation(&self, n: i64, i: usize) -> u32 {
        match (self.get(n), self.get(n + i as i64)) {
            (Some(a), Some(b)) => a.min(b),
            _ => {
                let inst = self.inst;
                let c = BigInt::from(inst.c().clone());
                let mut m = BigInt::from(n);
                while inst.f().eval(&m).is_zero() || inst.f().eval(&(&m + i)).is_zero() {
                    m += &c;
                }
                let d = inst.d_i(i, &m).expect("1 <= i <= k");
                valuation(&BigInt::from(d), self.p)
            }
        }
    }
}

/// `e_p = max v_p(gcd(|f(n)|, |f(n+i)|))` over `1 <= n <= p^{v_p(C)}`, `1 <= i <= k`.
pub fn e_p_compute(inst: &FarhiInstance, p: u64) -> Result<u32, FarhiError> {
    check_prime(p)?;
    let cap = v_c(inst, p);
    if cap == 0 || inst.k() == 0 {
        return Ok(0);
    }
    let window = prime_power(p, cap)?;
    let table = ValuationTable::new(inst, p, window + inst.k() as u64);
    let mut best = 0;
    for n in 1..=window as i64 {
        for i in 1..=inst.k() {
            best = best.max(table.d_valuation(n, i));
            if best >= cap {
                return Ok(best);
            }
        }
    }
    Ok(best)
}

/// Least period of `h_p`, found by stepping down from the known period
/// `p^{e_p}` while the next smaller power still passes over a full window.
pub fn prime_least_period(inst: &FarhiInstance, p: u64) -> Result<PrimeLocalReport, FarhiError> {
    let e_p = e_p_compute(inst, p)?;
    if e_p == 0 {
        return Ok(PrimeLocalReport { p, e_p, t: 0, witness: None });
    }
    let window = prime_power(p, e_p)?;
    let table = ValuationTable::new(inst, p, 2 * window + inst.k() as u64);
    let hs: Vec<u32> = (1..=2 * window as i64).map(|n| table.h(n)).collect();
    let h = |n: i64| hs[(n - 1) as usize];

    let mut t = e_p;
    let mut witness = None;
    while t > 0 {
        let step = p.pow(t - 1) as i64;
        if let Some(n) = (1..=window as i64).find(|&n| h(n) != h(n + step)) {
            witness = Some(n);
            break;
        }
        t -= 1;
    }
    Ok(PrimeLocalReport { p, e_p, t, witness })
}

/// `h_p` has least period 1 iff for every `1 <= n <= p^{e_p}`:
/// `v_p(gcd(f(n), f(n+k+1))) >= M` or `v_p(f(n)) = v_p(f(n+k+1)) < M`,
/// where `M = max_{1<=i<=k} v_p(f(n+i))`.
pub fn criterion_trivial_period(inst: &FarhiInstance, p: u64) -> Result<bool, FarhiError> {
    let e_p = e_p_compute(inst, p)?;
    let window = prime_power(p, e_p)?;
    let k = inst.k();
    let pb = BigUint::from(p);
    for n in 1..=window as i64 {
        let m = inst.clear_shift(&BigInt::from(n), k + 1);
        let vals = inst.values(&m, k + 2);
        let v = |x: &BigInt| valuation(x, p);
        let inner = vals[1..=k].iter().map(v).max().unwrap_or(0);
        let outer_gcd = crate::arith::big_gcd(&[vals[0].clone(), vals[k + 1].clone()]).expect("nonempty");
        let gcd_val = crate::arith::v_p(&BigInt::from(outer_gcd), &pb).expect("gcd of nonzero values");
        let (a, b) = (v(&vals[0]), v(&vals[k + 1]));
        let holds = gcd_val >= inner || (a == b && a < inner);
        if !holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `h_p` has least period `p^{e_p}` iff some `1 <= n0 <= p^{e_p}` has
/// `#{m in [n0, n0+k] : p^{e_p} | f(m)} != #{m in [n0, n0+k] : p^{e_p} | f(m + p^{e_p-1})}`.
///
/// Divisibility by `p^{e_p}` depends only on `m mod p^{e_p}`, so zeros of `f`
/// need no shifting here.
pub fn criterion_max_period(inst: &FarhiInstance, p: u64) -> Result<bool, FarhiError> {
    let e_p = e_p_compute(inst, p)?;
    if e_p == 0 {
        return Err(FarhiError::CriterionUndefined { p });
    }
    let window = prime_power(p, e_p)?;
    let step = p.pow(e_p - 1) as i64;
    let modulus = BigInt::from(window);
    let k = inst.k() as i64;
    let divisible: Vec<bool> =
        (1..=window as i64 + step + k).map(|m| (inst.f().eval_i64(m) % &modulus).is_zero()).collect();
    let at = |m: i64| divisible[(m - 1) as usize];
    Ok((1..=window as i64).any(|n0| {
        let here = (n0..=n0 + k).filter(|&m| at(m)).count();
        let shifted = (n0..=n0 + k).filter(|&m| at(m + step)).count();
        here != shifted
    }))
}

/// `T = ∏_{p | C} T_p`, one [`PrimeLocalReport`] per prime of `C` with a
/// nontrivial `e_p` or period. Primes are processed in parallel and merged in
/// ascending order.
pub fn least_period(inst: &FarhiInstance) -> Result<PeriodReport, FarhiError> {
    let mut locals = Vec::new();
    if !inst.f().is_constant() {
        let primes = inst
            .c_factored()
            .primes()
            .map(|p| p.to_u64().ok_or_else(|| FarhiError::WindowTooLarge { p: p.clone(), e: 1 }))
            .collect::<Result<Vec<u64>, _>>()?;
        let reports = primes.par_iter().map(|&p| prime_least_period(inst, p)).collect::<Result<Vec<_>, _>>()?;
        locals = reports.into_iter().filter(|r| r.t > 0 || r.e_p > 0).collect();
    }
    let t_factored =
        Factorization::from_prime_powers(locals.iter().filter(|r| r.t > 0).map(|r| (BigUint::from(r.p), r.t)));
    let t = t_factored.value();
    debug_assert!((inst.c() % &t).is_zero());
    Ok(PeriodReport { f: inst.f().to_string(), k: inst.k(), c: inst.c().clone(), locals, t, t_factored })
}
