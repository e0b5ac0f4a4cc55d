//! Exact evaluation of Farhi arithmetic functions
//! `g(n) = |f(n)···f(n+k)| / lcm(f(n), …, f(n+k))` and computation of their
//! least periods.
//!
//! - [`polyarith`]: integer polynomials, resultants, ideal constants.
//! - [`arith`]: valuations, gcd/lcm, factorization, divisors.
//! - [`farhi`]: validated instances, evaluators and the per-prime period engine.
//! - [`closedforms`]: closed-form periods for `f = x`, `ax + b` and spaced products.

pub mod arith;
pub mod closedforms;
pub mod farhi;
pub mod polyarith;

pub use arith::{ArithError, Factorization};
pub use closedforms::ClosedFormError;
pub use farhi::{FarhiError, FarhiInstance, PeriodReport, PrimeLocalReport};
pub use polyarith::{BezoutCertificate, IntPoly, PolyError, RatPoly};
