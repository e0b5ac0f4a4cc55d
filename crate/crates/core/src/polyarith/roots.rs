use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntPoly, PolyError};
use crate::arith::{divisors, factorize};

/// All integer roots of a nonzero polynomial.
///
/// After stripping the `x^m` factor, any nonzero integer root divides the
/// lowest remaining coefficient; each candidate `±d` is checked by evaluation.
pub fn integer_roots(f: &IntPoly) -> Result<BTreeSet<BigInt>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut roots = BTreeSet::new();
    let lowest = f.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.insert(BigInt::zero());
    }
    let stripped = IntPoly::new(f.coeffs()[lowest..].to_vec());
    if stripped.is_constant() {
        return Ok(roots);
    }
    let c0 = stripped.coeffs()[0].abs().to_biguint().expect("nonnegative");
    let fac = factorize(&c0).expect("nonzero constant coefficient");
    for d in divisors(&fac) {
        let d = BigInt::from(d);
        for cand in [d.clone(), -d] {
            if stripped.eval(&cand).is_zero() {
                roots.insert(cand);
            }
        }
    }
    Ok(roots)
}

/// Writes `f = base^r` with `r` as large as possible (`r = 1` when `f` is not
/// a proper power). Even powers are returned with a positive leading base
/// coefficient.
pub fn perfect_power_decompose(f: &IntPoly) -> Result<(IntPoly, u32), PolyError> {
    let deg = match f.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(d) => d,
    };
    let mut candidates: Vec<usize> = (2..=deg).filter(|r| deg % r == 0).collect();
    candidates.reverse();
    for r in candidates {
        if let Some(base) = root_of_degree(f, deg, r) {
            return Ok((base, r as u32));
        }
    }
    Ok((f.clone(), 1))
}

fn root_of_degree(f: &IntPoly, deg: usize, r: usize) -> Option<IntPoly> {
    let lead = f.leading()?;
    if r.is_multiple_of(2) && lead.is_negative() {
        return None;
    }
    let r32 = r as u32;
    let c = lead.nth_root(r32);
    if &c.pow(r32) != lead {
        return None;
    }
    let m = deg / r;
    let denom = BigInt::from(r) * c.pow(r32 - 1);
    let mut coeffs = vec![BigInt::zero(); m + 1];
    coeffs[m] = c;
    for j in 1..=m {
        let current = IntPoly::new(coeffs.clone()).pow(r32);
        let diff = f.coeff(deg - j) - current.coeff(deg - j);
        let (q, rem) = diff.div_rem(&denom);
        if !rem.is_zero() {
            return None;
        }
        coeffs[m - j] = q;
    }
    let base = IntPoly::new(coeffs);
    (base.pow(r32) == *f).then_some(base)
}
