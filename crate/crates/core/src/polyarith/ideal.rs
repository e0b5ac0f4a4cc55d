//! Integer constants in the ideal `(f, g)` of `Z[x]`.
//!
//! For coprime `f, g` the ideal `(f, g) ∩ Z` is a nonzero principal ideal of
//! `Z`. Its positive generator is found by putting the coefficient lattice of
//! `{x^j·f} ∪ {x^j·g}` (truncated at degree `N`) into Hermite normal form:
//! the row whose pivot sits in the constant column generates the lattice
//! vectors that are pure constants. Growing `N` can only shrink the constant
//! (the lattice gets bigger), and we stop once it has held still for
//! `deg f + deg g` consecutive steps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat_gcd, IntPoly, PolyError};

/// Witness `a·f + b·g = c` for the pair `(f, g)` it was issued for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub a: IntPoly,
    pub b: IntPoly,
    pub c: BigInt,
}

impl BezoutCertificate {
    /// Exact polynomial check of `a·f + b·g - c = 0` with `c > 0`.
    pub fn verify(&self, f: &IntPoly, g: &IntPoly) -> bool {
        if !self.c.is_positive() {
            return false;
        }
        let lhs = &(&self.a * f) + &(&self.b * g);
        lhs == IntPoly::constant(self.c.clone())
    }

    /// Certificate for `m·c`, which is also in the ideal.
    pub fn scaled(&self, m: &BigInt) -> BezoutCertificate {
        BezoutCertificate { a: self.a.scale(m), b: self.b.scale(m), c: &self.c * m }
    }
}

/// Row-style Hermite normal form, tracking the unimodular transform.
struct Hnf {
    rows: Vec<Vec<BigInt>>,
    transform: Vec<Vec<BigInt>>,
}

impl Hnf {
    fn new(rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let transform =
            (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        Hnf { rows, transform }
    }

    fn combine(&mut self, top: usize, other: usize, col: usize) {
        let a = self.rows[top][col].clone();
        let b = self.rows[other][col].clone();
        let e = a.extended_gcd(&b);
        let (g, s, t) = (e.gcd, e.x, e.y);
        let (ag, bg) = (&a / &g, &b / &g);
        for m in [&mut self.rows, &mut self.transform] {
            let (rt, ro) = (m[top].clone(), m[other].clone());
            for j in 0..rt.len() {
                m[top][j] = &s * &rt[j] + &t * &ro[j];
                m[other][j] = &bg * &rt[j] - &ag * &ro[j];
            }
        }
    }

    fn negate(&mut self, r: usize) {
        for m in [&mut self.rows, &mut self.transform] {
            for v in m[r].iter_mut() {
                *v = -&*v;
            }
        }
    }

    fn sub_multiple(&mut self, target: usize, src: usize, q: &BigInt) {
        for m in [&mut self.rows, &mut self.transform] {
            let s = m[src].clone();
            for (v, sv) in m[target].iter_mut().zip(&s) {
                *v -= q * sv;
            }
        }
    }

    /// Reduces in place; returns the (row, column) pivot positions.
    fn reduce(&mut self) -> Vec<(usize, usize)> {
        let ncols = self.rows.first().map_or(0, Vec::len);
        let nrows = self.rows.len();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..ncols {
            if pr == nrows {
                break;
            }
            for r in pr + 1..nrows {
                if !self.rows[r][col].is_zero() {
                    self.combine(pr, r, col);
                }
            }
            if self.rows[pr][col].is_zero() {
                continue;
            }
            if self.rows[pr][col].is_negative() {
                self.negate(pr);
            }
            let pivot = self.rows[pr][col].clone();
            for r in 0..pr {
                let q = self.rows[r][col].div_floor(&pivot);
                if !q.is_zero() {
                    self.sub_multiple(r, pr, &q);
                }
            }
            pivots.push((pr, col));
            pr += 1;
        }
        pivots
    }
}

/// Coefficient vector of `p` in degree-`<= n` space, highest degree first.
fn dense_desc(p: &IntPoly, n: usize) -> Vec<BigInt> {
    (0..=n).map(|col| p.coeff(n - col)).collect()
}

/// Lattice step at truncation degree `n`; `None` when no pure constant exists yet.
fn certificate_at(f: &IntPoly, g: &IntPoly, n: usize) -> Option<BezoutCertificate> {
    let df = f.degree()?;
    let dg = g.degree()?;
    let nf = (n + 1).checked_sub(df)?;
    let ng = (n + 1).checked_sub(dg)?;
    let rows: Vec<Vec<BigInt>> =
        (0..nf).map(|j| dense_desc(&f.shl(j), n)).chain((0..ng).map(|j| dense_desc(&g.shl(j), n))).collect();
    let mut hnf = Hnf::new(rows);
    let pivots = hnf.reduce();
    let &(row, col) = pivots.last()?;
    if col != n {
        return None;
    }
    let u = &hnf.transform[row];
    let a = IntPoly::new(u[..nf].to_vec());
    let b = IntPoly::new(u[nf..].to_vec());
    Some(BezoutCertificate { a, b, c: hnf.rows[row][n].clone() })
}

/// Shrinks cofactors: `a -> a mod g`, `b -> b + (a div g)·f` when `g` has a
/// unit leading coefficient.
fn tidy(cert: BezoutCertificate, f: &IntPoly, g: &IntPoly) -> BezoutCertificate {
    match cert.a.div_rem_unit(g) {
        Some((q, r)) => {
            let b = &cert.b + &(&q * f);
            BezoutCertificate { a: r, b, c: cert.c }
        }
        None => cert,
    }
}

/// Positive generator `c` of `(f, g) ∩ Z` together with its certificate.
///
/// The certificate is always checked by exact arithmetic before it is
/// returned. Minimality rests on the stabilization rule described in the
/// module docs.
pub fn ideal_int_generator(f: &IntPoly, g: &IntPoly) -> Result<BezoutCertificate, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let d = rat_gcd(f, g)?;
    if !d.is_one() {
        return Err(PolyError::NotCoprime { gcd: d.to_string() });
    }
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));

    let cert = if df == 0 && dg == 0 {
        let (cf, cg) = (&f.coeffs()[0], &g.coeffs()[0]);
        let e = cf.extended_gcd(cg);
        let sign = if e.gcd.is_negative() { -BigInt::one() } else { BigInt::one() };
        BezoutCertificate { a: IntPoly::constant(e.x * &sign), b: IntPoly::constant(e.y * &sign), c: e.gcd.abs() }
    } else {
        let mut n = (df + dg).saturating_sub(1).max(df).max(dg);
        let mut best = loop {
            if let Some(c) = certificate_at(f, g, n) {
                break c;
            }
            n += 1;
        };
        let mut stable = 0;
        while stable < df + dg {
            n += 1;
            match certificate_at(f, g, n) {
                Some(c) if c.c < best.c => {
                    best = c;
                    stable = 0;
                }
                _ => stable += 1,
            }
        }
        tidy(best, f, g)
    };

    if !cert.verify(f, g) {
        return Err(PolyError::CertificateMismatch { f: f.to_string(), g: g.to_string() });
    }
    Ok(cert)
}
