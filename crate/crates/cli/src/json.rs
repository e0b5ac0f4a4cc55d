//! JSON form of a [`PeriodReport`]. Big integers travel as decimal strings.

use farhi_core::{Factorization, PeriodReport, PrimeLocalReport};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalJson {
    pub p: String,
    pub e_p: u32,
    #[serde(rename = "T_p")]
    pub t_p: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub f: String,
    pub k: usize,
    #[serde(rename = "C")]
    pub c: String,
    pub locals: Vec<LocalJson>,
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "T_factored")]
    pub t_factored: Vec<(String, u32)>,
}

fn factored_pairs(f: &Factorization) -> Vec<(String, u32)> {
    f.factors().iter().map(|(p, e)| (p.to_string(), *e)).collect()
}

impl From<&PeriodReport> for ReportJson {
    fn from(r: &PeriodReport) -> Self {
        ReportJson {
            f: r.f.clone(),
            k: r.k,
            c: r.c.to_string(),
            locals: r
                .locals
                .iter()
                .map(|l| LocalJson { p: l.p.to_string(), e_p: l.e_p, t_p: l.period().to_string() })
                .collect(),
            t: r.t.to_string(),
            t_factored: factored_pairs(&r.t_factored),
        }
    }
}

fn big(s: &str, field: &str) -> Result<BigUint, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("{field}: {s:?} is not a nonnegative integer")))
}

impl TryFrom<&ReportJson> for PeriodReport {
    type Error = CliError;

    /// Rebuilds the report; per-prime witnesses are not serialized and come back as `None`.
    fn try_from(j: &ReportJson) -> Result<Self, CliError> {
        let locals = j
            .locals
            .iter()
            .map(|l| {
                let p: u64 = l.p.parse().map_err(|_| CliError::Usage(format!("p: {:?}", l.p)))?;
                let period = big(&l.t_p, "T_p")?;
                let pb = BigUint::from(p);
                let mut t = 0;
                let mut acc = BigUint::from(1u32);
                while acc < period {
                    acc *= &pb;
                    t += 1;
                }
                if acc != period {
                    return Err(CliError::Usage(format!("T_p = {period} is not a power of {p}")));
                }
                Ok(PrimeLocalReport { p, e_p: l.e_p, t, witness: None })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let pairs =
            j.t_factored.iter().map(|(p, e)| Ok((big(p, "T_factored")?, *e))).collect::<Result<Vec<_>, CliError>>()?;
        let t_factored = Factorization::from_pairs(pairs).map_err(|e| CliError::Usage(format!("T_factored: {e}")))?;
        let t = big(&j.t, "T")?;
        if t != t_factored.value() {
            return Err(CliError::Usage(format!("T = {t} disagrees with T_factored")));
        }
        Ok(PeriodReport { f: j.f.clone(), k: j.k, c: big(&j.c, "C")?, locals, t, t_factored })
    }
}

pub fn to_json(r: &PeriodReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<PeriodReport, CliError> {
    let j: ReportJson = serde_json::from_str(s).map_err(|e| CliError::Usage(format!("bad report JSON: {e}")))?;
    PeriodReport::try_from(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use farhi_core::farhi::least_period;
    use farhi_core::polyarith::poly_parse;
    use farhi_core::FarhiInstance;

    fn report(f: &str, k: usize) -> PeriodReport {
        least_period(&FarhiInstance::new(poly_parse(f).unwrap(), k).unwrap()).unwrap()
    }

    fn strip_witnesses(mut r: PeriodReport) -> PeriodReport {
        r.locals.iter_mut().for_each(|l| l.witness = None);
        r
    }

    #[test]
    fn round_trip() {
        for (f, k) in [("x^2+1", 3), ("x", 4), ("x", 0), ("x^3+2", 2), ("7", 2)] {
            let r = report(f, k);
            let back = from_json(&to_json(&r)).unwrap();
            assert_eq!(back, strip_witnesses(r));
        }
    }

    #[test]
    fn schema_uses_strings_for_big_integers() {
        let v: serde_json::Value = serde_json::from_str(&to_json(&report("x^2+1", 3))).unwrap();
        assert_eq!(v["f"], "x^2 + 1");
        assert_eq!(v["k"], 3);
        assert!(v["C"].is_string());
        assert_eq!(v["T"], "65");
        assert_eq!(v["T_factored"], serde_json::json!([["5", 1], ["13", 1]]));
        assert!(v["locals"][0]["p"].is_string());
        assert!(v["locals"][0]["e_p"].is_number());
        assert!(v["locals"][0]["T_p"].is_string());
    }

    #[test]
    fn rejects_inconsistent_reports() {
        let mut j = ReportJson::from(&report("x", 4));
        j.t = "13".into();
        assert!(PeriodReport::try_from(&j).is_err());
        assert!(from_json("{").is_err());
    }
}
