//! Closed-form least periods for `f(x) = x`, `f(x) = ax + b` and the spaced
//! products `g_{k,a}(n) = |n(n+a)···(n+ka)| / lcm(n, n+a, …, n+ka)`.

#![allow(non_snake_case)]

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::arith::{is_prime, Factorization};
use crate::polyarith::{perfect_power_decompose, IntPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("prime {p} exceeds k = {k}")]
    PrimeAboveK { p: u64, k: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: u64, b: i64 },
    #[error("{name} must be positive")]
    NonPositive { name: &'static str },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn primes_up_to(k: usize) -> Vec<u64> {
    (2..=k as u64).filter(|&p| is_prime(&BigUint::from(p))).collect()
}

/// `max_{1<=i<=k} v_p(i)`: the largest `e` with `p^e <= k`.
fn max_valuation_up_to(k: usize, p: u64) -> u32 {
    let mut e = 0;
    let mut pe = p;
    while pe <= k as u64 {
        e += 1;
        pe = match pe.checked_mul(p) {
            Some(v) => v,
            None => break,
        };
    }
    e
}

fn v_small(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Exponent of `p <= k` in the least period of `g_k`: zero when
/// `v_p(k+1)` reaches `max_{i<=k} v_p(i)`, that maximum otherwise.
pub fn delta_p(k: usize, p: u64) -> Result<u32, ClosedFormError> {
    if !is_prime(&BigUint::from(p)) {
        return Err(ClosedFormError::NotPrime(p));
    }
    if p > k as u64 {
        return Err(ClosedFormError::PrimeAboveK { p, k });
    }
    let top = max_valuation_up_to(k, p);
    Ok(if v_small(k as u64 + 1, p) >= top { 0 } else { top })
}

/// Least period `T_k` of `g_k(n) = n(n+1)···(n+k) / lcm(n, …, n+k)`.
pub fn farhi_kane_T(k: usize) -> Factorization {
    Factorization::from_prime_powers(
        primes_up_to(k).into_iter().map(|p| (BigUint::from(p), delta_p(k, p).expect("p <= k is prime"))),
    )
}

/// Least period of `g_{k, ax+b}`: as `T_k`, except primes dividing `a` drop out.
pub fn linear_T(k: usize, a: u64, b: i64) -> Result<Factorization, ClosedFormError> {
    if a == 0 {
        return Err(ClosedFormError::NonPositive { name: "a" });
    }
    if a.gcd(&b.unsigned_abs()) != 1 {
        return Err(ClosedFormError::NotCoprime { a, b });
    }
    Ok(Factorization::from_prime_powers(
        primes_up_to(k)
            .into_iter()
            .filter(|p| !a.is_multiple_of(*p))
            .map(|p| (BigUint::from(p), delta_p(k, p).expect("p <= k is prime"))),
    ))
}

/// Least period `a·T_k` of the spaced product `g_{k,a}`.
pub fn spaced_T(k: usize, a: u64) -> Result<Factorization, ClosedFormError> {
    if a == 0 {
        return Err(ClosedFormError::NonPositive { name: "a" });
    }
    let a_fac = crate::arith::factorize_u64(a).expect("a > 0");
    Ok(farhi_kane_T(k).mul(&a_fac))
}

/// `g_{k,a}(n)` for `n >= 1`.
pub fn g_spaced_eval(k: usize, a: u64, n: u64) -> Result<BigUint, ClosedFormError> {
    if a == 0 {
        return Err(ClosedFormError::NonPositive { name: "a" });
    }
    if n == 0 {
        return Err(ClosedFormError::NonPositive { name: "n" });
    }
    let mut prod = BigUint::one();
    let mut lcm = BigUint::one();
    for i in 0..=k as u64 {
        let v = BigUint::from(n) + BigUint::from(a) * i;
        lcm = lcm.lcm(&v);
        prod *= v;
    }
    Ok(prod / lcm)
}

/// `g_k(n)` through the recursion `g_k(n) = gcd(k!, (n+k)·g_{k-1}(n))`, `g_0 = 1`.
pub fn g_k_recursive(k: usize, n: u64) -> Result<BigUint, ClosedFormError> {
    if n == 0 {
        return Err(ClosedFormError::NonPositive { name: "n" });
    }
    let mut g = BigUint::one();
    let mut fact = BigUint::one();
    for j in 1..=k as u64 {
        fact *= j;
        g = fact.gcd(&((BigUint::from(n) + j) * g));
    }
    Ok(g)
}

/// Writes `f = base^r` with `r` maximal. Since `g_{k,f} = g_{k,base}^r`,
/// both functions share their least period.
pub fn reduce_perfect_power(f: &IntPoly, _k: usize) -> Result<(IntPoly, u32), ClosedFormError> {
    Ok(perfect_power_decompose(f)?)
}

/// `a·x + b` as an [`IntPoly`].
pub fn linear_poly(a: u64, b: i64) -> IntPoly {
    IntPoly::new(vec![BigInt::from(b), BigInt::from(a)])
}
