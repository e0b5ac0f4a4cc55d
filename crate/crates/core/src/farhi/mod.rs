//! Farhi arithmetic functions `g_{k,f}` and their least periods.
//!
//! A [`FarhiInstance`] bundles `f` and `k` after checking that `f(x)` is
//! coprime to every shift `f(x+i)`, `1 <= i <= k`, over `Q[x]`. For each
//! shift it stores a Bézout certificate `a_i·f(x) + b_i·f(x+i) = C_i`; the
//! lcm `C` of those constants is a period of `g`, which is what makes the
//! extension of `g` across the finite zero set well defined.

mod oracle;
mod period;

pub use oracle::{oracle_least_period, DEFAULT_ORACLE_BUDGET};
pub use period::{
    criterion_max_period, criterion_trivial_period, e_p_compute, least_period, prime_least_period, PeriodReport,
    PrimeLocalReport, MAX_SCAN_WINDOW,
};

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{self, big_lcm, factorize, is_prime, valuation, Factorization};
use crate::polyarith::{ideal_int_generator, integer_roots, rat_gcd, BezoutCertificate};
use crate::{IntPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FarhiError {
    #[error("f must be a nonzero polynomial")]
    ZeroPolynomial,
    #[error("f(x) and f(x+{i}) share the factor {gcd} over Q")]
    HypothesisViolation { i: usize, gcd: String },
    #[error("window at n = {n} contains a zero of f")]
    ZeroWindow { n: BigInt },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("shift index {i} outside 1..={k}")]
    ShiftOutOfRange { i: usize, k: usize },
    #[error("criterion needs e_p >= 1, but e_p = 0 for p = {p}")]
    CriterionUndefined { p: u64 },
    #[error("C = {c} exceeds the oracle budget {budget}")]
    BudgetExceeded { c: BigUint, budget: u64 },
    #[error("scan window {p}^{e} is too large to enumerate")]
    WindowTooLarge { p: BigUint, e: u32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Validated `(f, k)` with ideal constants, their lcm `C` and the zero set.
#[derive(Debug, Clone)]
pub struct FarhiInstance {
    f: IntPoly,
    k: usize,
    certificates: Vec<BezoutCertificate>,
    c: BigUint,
    c_factored: Factorization,
    zero_set: BTreeSet<BigInt>,
}

impl FarhiInstance {
    pub fn new(f: IntPoly, k: usize) -> Result<Self, FarhiError> {
        if f.is_zero() {
            return Err(FarhiError::ZeroPolynomial);
        }
        let mut certificates = Vec::with_capacity(k);
        for i in 1..=k {
            let shifted = f.shift(&BigInt::from(i));
            let d = rat_gcd(&f, &shifted)?;
            if !d.is_one() {
                return Err(FarhiError::HypothesisViolation { i, gcd: d.to_string() });
            }
            certificates.push(ideal_int_generator(&f, &shifted)?);
        }
        let constants: Vec<BigInt> = certificates.iter().map(|c| c.c.clone()).collect();
        let c = if constants.is_empty() {
            BigUint::one()
        } else {
            big_lcm(&constants).expect("certificate constants are positive")
        };
        let c_factored = factorize(&c).expect("C is positive");
        let mut zero_set = BTreeSet::new();
        if !f.is_constant() {
            for r in integer_roots(&f)? {
                for i in 0..=k {
                    zero_set.insert(&r - i);
                }
            }
        }
        Ok(FarhiInstance { f, k, certificates, c, c_factored, zero_set })
    }

    pub fn f(&self) -> &IntPoly {
        &self.f
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Certificates for `(f(x), f(x+i))`, `i = 1..=k` in order.
    pub fn certificates(&self) -> &[BezoutCertificate] {
        &self.certificates
    }

    /// The constant `C_i` for shift `i` (1-based).
    pub fn constant(&self, i: usize) -> Option<&BigInt> {
        i.checked_sub(1).and_then(|j| self.certificates.get(j)).map(|c| &c.c)
    }

    pub fn c(&self) -> &BigUint {
        &self.c
    }

    pub fn c_factored(&self) -> &Factorization {
        &self.c_factored
    }

    pub fn zero_set(&self) -> &BTreeSet<BigInt> {
        &self.zero_set
    }

    /// `f(n), f(n+1), …, f(n+len-1)`.
    pub(crate) fn values(&self, n: &BigInt, len: usize) -> Vec<BigInt> {
        (0..len).map(|i| self.f.eval(&(n + i))).collect()
    }

    /// `n + a·C` for the least `a >= 0` whose window `[n+aC, n+aC+span]`
    /// avoids every zero of `f`.
    pub(crate) fn clear_shift(&self, n: &BigInt, span: usize) -> BigInt {
        let c = BigInt::from(self.c.clone());
        let mut m = n.clone();
        while (0..=span).any(|i| self.f.eval(&(&m + i)).is_zero()) {
            m += &c;
        }
        m
    }

    /// `|f(n)···f(n+k)| / lcm(f(n), …, f(n+k))` for `n` outside the zero set.
    pub fn g_eval(&self, n: &BigInt) -> Result<BigUint, FarhiError> {
        if self.zero_set.contains(n) {
            return Err(FarhiError::ZeroWindow { n: n.clone() });
        }
        Ok(g_of_window(&self.values(n, self.k + 1)))
    }

    /// `g` extended to all integers through the period `C`.
    pub fn g_eval_ext(&self, n: &BigInt) -> BigUint {
        let m = if self.zero_set.contains(n) { self.clear_shift(n, self.k) } else { n.clone() };
        g_of_window(&self.values(&m, self.k + 1))
    }

    /// `gcd(|f(n)|, |f(n+i)|)` for `1 <= i <= k`.
    pub fn d_i(&self, i: usize, n: &BigInt) -> Result<BigUint, FarhiError> {
        if i == 0 || i > self.k {
            return Err(FarhiError::ShiftOutOfRange { i, k: self.k });
        }
        let a = self.f.eval(n);
        let b = self.f.eval(&(n + i));
        assert!(!(a.is_zero() && b.is_zero()), "f(n) and f(n+{i}) both vanish at n = {n}");
        Ok(arith::big_gcd(&[a, b]).expect("nonempty"))
    }

    /// `v_p(g(n))`, evaluated on a zero-free shifted window when needed.
    pub fn h_eval(&self, p: u64, n: &BigInt) -> Result<u32, FarhiError> {
        check_prime(p)?;
        Ok(self.h_unchecked(p, n))
    }

    pub(crate) fn h_unchecked(&self, p: u64, n: &BigInt) -> u32 {
        let m = if self.zero_set.contains(n) { self.clear_shift(n, self.k) } else { n.clone() };
        let vals: Vec<u32> = self.values(&m, self.k + 1).iter().map(|v| valuation(v, p)).collect();
        excess(&vals)
    }

    /// `v_p(g(n))` as `Σ_{t>=1} max(0, #{m in [n, n+k] : p^t | f(m)} - 1)`.
    ///
    /// Independent of [`FarhiInstance::h_eval`]: it only tests divisibility by
    /// increasing powers of `p`, never computes a valuation.
    pub fn h_eval_counting(&self, p: u64, n: &BigInt) -> Result<u32, FarhiError> {
        check_prime(p)?;
        let m = if self.zero_set.contains(n) { self.clear_shift(n, self.k) } else { n.clone() };
        let values = self.values(&m, self.k + 1);
        let p = BigInt::from(p);
        let mut pt = p.clone();
        let mut total = 0u32;
        loop {
            let count = values.iter().filter(|v| (*v % &pt).is_zero()).count() as u32;
            if count <= 1 {
                // counts only shrink as t grows
                break;
            }
            total += count - 1;
            pt *= &p;
        }
        Ok(total)
    }
}

pub(crate) fn check_prime(p: u64) -> Result<(), FarhiError> {
    if is_prime(&BigUint::from(p)) {
        Ok(())
    } else {
        Err(FarhiError::NotPrime(p))
    }
}

/// `Σ v - max v` over a window of valuations.
pub(crate) fn excess(vals: &[u32]) -> u32 {
    let max = vals.iter().copied().max().unwrap_or(0);
    vals.iter().sum::<u32>() - max
}

/// Product of absolute values over their lcm; all entries nonzero.
pub(crate) fn g_of_window(values: &[BigInt]) -> BigUint {
    let prod = values.iter().fold(BigUint::one(), |acc, v| acc * v.magnitude());
    let lcm = big_lcm(values).expect("zero-free window");
    prod / lcm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::poly_parse;

    fn inst(f: &str, k: usize) -> FarhiInstance {
        FarhiInstance::new(poly_parse(f).unwrap(), k).unwrap()
    }

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bu(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn new_instance_examples() {
        let x3 = inst("x", 3);
        let cs: Vec<_> = (1..=3).map(|i| x3.constant(i).unwrap().clone()).collect();
        assert_eq!(cs, vec![bi(1), bi(2), bi(3)]);
        assert_eq!(x3.c(), &bu(6));
        assert_eq!(x3.zero_set().iter().cloned().collect::<Vec<_>>(), vec![bi(-3), bi(-2), bi(-1), bi(0)]);

        let sq = inst("x^2 - 1", 1);
        assert_eq!(sq.zero_set().iter().cloned().collect::<Vec<_>>(), vec![bi(-2), bi(-1), bi(0), bi(1)]);
        assert_eq!(inst("x^2+1", 1).c(), &bu(5));
    }

    #[test]
    fn new_instance_errors() {
        let err = FarhiInstance::new(poly_parse("x^2+x").unwrap(), 1).unwrap_err();
        assert!(matches!(err, FarhiError::HypothesisViolation { i: 1, .. }));
        assert_eq!(FarhiInstance::new(IntPoly::zero(), 2).unwrap_err(), FarhiError::ZeroPolynomial);
        // coprime to f(x+1) but not to f(x+2)
        let err = FarhiInstance::new(poly_parse("x^2 - 1").unwrap(), 2).unwrap_err();
        assert!(matches!(err, FarhiError::HypothesisViolation { i: 2, .. }));
    }

    #[test]
    fn k_zero_and_constant() {
        let z = inst("x^2+3", 0);
        assert_eq!(z.c(), &bu(1));
        assert_eq!(z.g_eval(&bi(4)).unwrap(), bu(1));
        let c = inst("6", 3);
        assert_eq!(c.g_eval(&bi(-5)).unwrap(), bu(216));
        assert!(c.zero_set().is_empty());
    }

    #[test]
    fn g_eval_examples() {
        let x1 = inst("x", 1);
        for n in 1..20 {
            assert_eq!(x1.g_eval(&bi(n)).unwrap(), bu(1));
        }
        assert_eq!(inst("x", 2).g_eval(&bi(2)).unwrap(), bu(2));
        assert_eq!(inst("x^2+1", 1).g_eval(&bi(2)).unwrap(), bu(5));
        assert!(matches!(inst("x", 2).g_eval(&bi(-1)), Err(FarhiError::ZeroWindow { .. })));
    }

    #[test]
    fn g_eval_ext_examples() {
        let x2 = inst("x", 2);
        assert_eq!(x2.g_eval_ext(&bi(0)), bu(2));
        assert_eq!(x2.g_eval_ext(&bi(-1)), bu(1));
        assert_eq!(x2.g_eval_ext(&bi(7)), x2.g_eval(&bi(7)).unwrap());
    }

    #[test]
    fn d_i_examples() {
        assert_eq!(inst("x^2+1", 1).d_i(1, &bi(2)).unwrap(), bu(5));
        let x4 = inst("x", 4);
        for n in -5..15 {
            assert_eq!(x4.d_i(1, &bi(n)).unwrap(), bu(1));
        }
        assert_eq!(x4.d_i(4, &bi(4)).unwrap(), bu(4));
        assert_eq!(x4.d_i(4, &bi(0)).unwrap(), bu(4));
        assert!(matches!(x4.d_i(5, &bi(1)), Err(FarhiError::ShiftOutOfRange { .. })));
    }

    #[test]
    fn h_eval_examples() {
        let x4 = inst("x", 4);
        assert_eq!(x4.h_eval(2, &bi(2)).unwrap(), 2);
        assert_eq!(x4.h_eval_counting(2, &bi(2)).unwrap(), 2);
        let x1 = inst("x", 1);
        for n in -3..10 {
            assert_eq!(x1.h_eval(3, &bi(n)).unwrap(), 0);
            assert_eq!(x1.h_eval_counting(3, &bi(n)).unwrap(), 0);
        }
        let q = inst("x^2+1", 1);
        assert_eq!(q.h_eval(5, &bi(2)).unwrap(), 1);
        assert_eq!(q.h_eval_counting(5, &bi(2)).unwrap(), 1);
        assert_eq!(q.h_eval(4, &bi(2)), Err(FarhiError::NotPrime(4)));
    }

    #[test]
    fn h_counting_k_zero_and_coprime_primes() {
        let z = inst("x^3+2", 0);
        for n in -4..10 {
            assert_eq!(z.h_eval_counting(2, &bi(n)).unwrap(), 0);
        }
        // C = 5 for x^2+1 at k = 1, so 3 and 7 never divide g
        let q = inst("x^2+1", 1);
        for n in -10..40 {
            assert_eq!(q.h_eval_counting(3, &bi(n)).unwrap(), 0);
            assert_eq!(q.h_eval_counting(7, &bi(n)).unwrap(), 0);
        }
    }
}
