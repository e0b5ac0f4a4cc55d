use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::{g_of_window, FarhiError, FarhiInstance};
use crate::arith::divisors;

/// Default cap on `C` for the brute-force oracle.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

/// Least divisor `d` of `C` with `g(n) = g(n + d)` for every `n in [1, C]`.
///
/// `C` is a period of the extended `g`, so agreement over one full window
/// makes `d` a true period. Cost is linear in `C`; refused above `budget`.
pub fn oracle_least_period(inst: &FarhiInstance, budget: u64) -> Result<BigUint, FarhiError> {
    let c = match inst.c().to_u64() {
        Some(c) if c <= budget => c,
        _ => return Err(FarhiError::BudgetExceeded { c: inst.c().clone(), budget }),
    };
    let k = inst.k();
    let len = 2 * c as usize;
    let values: Vec<BigInt> = (1..=(len + k) as i64).map(|m| inst.f().eval_i64(m)).collect();
    let g: Vec<BigUint> = (0..len)
        .map(|i| {
            let window = &values[i..=i + k];
            if window.iter().any(|v| v.is_zero()) {
                inst.g_eval_ext(&BigInt::from(i as i64 + 1))
            } else {
                g_of_window(window)
            }
        })
        .collect();
    for d in divisors(inst.c_factored()) {
        let d = d.to_usize().expect("divisor of C fits");
        if (0..c as usize).all(|i| g[i] == g[i + d]) {
            return Ok(BigUint::from(d));
        }
    }
    unreachable!("C itself is a period")
}
