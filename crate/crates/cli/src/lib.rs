//! Library side of the `farhi` command: report serialization, table
//! generation and the self-verification suites.

pub mod checks;
pub mod json;
pub mod table;

use farhi_core::closedforms::ClosedFormError;
use farhi_core::farhi::DEFAULT_ORACLE_BUDGET;
use farhi_core::{Factorization, FarhiError, PolyError};
use thiserror::Error;

pub const BUDGET_VAR: &str = "FARHI_ORACLE_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Farhi(#[from] FarhiError),
    #[error(transparent)]
    ClosedForm(#[from] ClosedFormError),
    #[error("cell b = {b}, k = {k}: {source}")]
    Cell { b: i64, k: usize, source: Box<CliError> },
    #[error("{failed} of {total} checks failed")]
    Verification { failed: usize, total: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 ok, 1 verification failure, 2 usage or parse error,
    /// 3 hypothesis violation, 4 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Poly(_) => 2,
            CliError::Farhi(e) => match e {
                FarhiError::HypothesisViolation { .. } => 3,
                FarhiError::BudgetExceeded { .. } => 4,
                FarhiError::ZeroPolynomial | FarhiError::Poly(_) => 2,
                _ => 1,
            },
            CliError::ClosedForm(e) => match e {
                ClosedFormError::NotCoprime { .. } => 3,
                _ => 2,
            },
            CliError::Cell { source, .. } => source.exit_code(),
            CliError::Verification { .. } | CliError::Io(_) => 1,
        }
    }
}

/// Oracle cap from `FARHI_ORACLE_BUDGET`, or `default` when unset.
pub fn oracle_budget(default: u64) -> Result<u64, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_VAR} must be a nonnegative integer, got {s:?}"))),
        Err(_) => Ok(default),
    }
}

pub fn default_budget() -> Result<u64, CliError> {
    oracle_budget(DEFAULT_ORACLE_BUDGET)
}

/// `2·3·5·13 = 390`; a prime power or 1 is printed once.
pub fn factored_with_value(f: &Factorization) -> String {
    let value = f.value();
    let factored = f.to_string();
    if factored == value.to_string() {
        factored
    } else {
        format!("{factored} = {value}")
    }
}

/// Inclusive range `a..b` (or a single integer).
pub fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("invalid range {s:?}, expected A..B"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(CliError::Usage(format!("empty range {s:?}")));
    }
    Ok((lo, hi))
}
