use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntPoly, PolyError, RatPoly};

/// Monic gcd over `Q[x]` by the Euclidean algorithm on exact rationals.
///
/// Returns the constant `1` exactly when `f` and `g` are coprime over `Q`.
pub fn rat_gcd(f: &IntPoly, g: &IntPoly) -> Result<RatPoly, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut a = f.to_rat();
    let mut b = g.to_rat();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Sylvester matrix of `f` (deg m) and `g` (deg n): n shifted rows of `f`
/// followed by m shifted rows of `g`, coefficients in descending order.
pub(crate) fn sylvester(f: &IntPoly, g: &IntPoly) -> Vec<Vec<BigInt>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, count) in [(f, m, n), (g, n, m)] {
        for r in 0..count {
            let mut row = vec![BigInt::zero(); size];
            for (j, c) in poly.coeffs().iter().enumerate() {
                row[r + deg - j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by Bareiss fraction-free elimination; every division is exact.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Sylvester resultant `Res(f, g)`; zero exactly when `f` and `g` share a root.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(bareiss_det(sylvester(f, g)))
}
