//! Exact univariate polynomials over `Z` and `Q`.
//!
//! [`IntPoly`] is the workhorse: a dense little-endian coefficient vector of
//! big integers. [`RatPoly`] exists only to run the Euclidean algorithm over
//! `Q[x]`. Submodules add resultants, integer-ideal constants with Bézout
//! certificates, integer roots and perfect-power detection.

mod ideal;
mod parse;
mod resultant;
mod roots;

pub use ideal::{ideal_int_generator, BezoutCertificate};
pub use parse::poly_parse;
pub use resultant::{rat_gcd, resultant};
pub use roots::{integer_roots, perfect_power_decompose};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial is not allowed here")]
    ConstantPolynomial,
    #[error("polynomials are not coprime over Q: common factor {gcd}")]
    NotCoprime { gcd: String },
    #[error("Bezout certificate failed verification for ({f}, {g})")]
    CertificateMismatch { f: String, g: String },
}

/// Dense polynomial with big-integer coefficients, `coeffs[i]` multiplies `x^i`.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·x^n`.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and nonzero constants alike.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, n: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c;
        }
        acc
    }

    pub fn eval_i64(&self, n: i64) -> BigInt {
        self.eval(&BigInt::from(n))
    }

    /// Returns `f(x + s)` via repeated synthetic division (Taylor shift).
    pub fn shift(&self, s: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        if c.len() < 2 || s.is_zero() {
            return self.clone();
        }
        let d = c.len() - 1;
        for i in 0..d {
            for j in (i..d).rev() {
                let t = s * &c[j + 1];
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    pub fn shift_i64(&self, s: i64) -> IntPoly {
        self.shift(&BigInt::from(s))
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shl(&self, n: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut result = IntPoly::constant(BigInt::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Division by a divisor with leading coefficient ±1, exact over `Z`.
    pub fn div_rem_unit(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = d.degree()?;
        let lead = d.leading()?;
        if !lead.abs().is_one() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] * lead;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Canonical form: descending powers, explicit `*`, signs folded into the
/// separators (`x^2 - 3*x + 1`).
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Dense polynomial over `Q`; rationals are kept reduced by `BigRational`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn one() -> Self {
        RatPoly { coeffs: vec![BigRational::one()] }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn monic(&self) -> RatPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => RatPoly::new(self.coeffs.iter().map(|c| c / lead).collect()),
        }
    }

    /// Remainder of division by a nonzero divisor.
    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let q = &r[top] / lead;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &q * dc;
                    r[top - dd + j] -= t;
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        RatPoly::new(r)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
                if i > 0 {
                    f.write_str("*")?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
