//! Grids of least periods over a one-parameter polynomial family.

use clap::ValueEnum;
use farhi_core::farhi::least_period;
use farhi_core::polyarith::poly_parse;
use farhi_core::{FarhiInstance, IntPoly, PeriodReport};
use rayon::prelude::*;
use serde::Serialize;

use crate::json::ReportJson;
use crate::CliError;

pub const PLACEHOLDER: &str = "{b}";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone)]
pub struct TableSpec {
    pub template: String,
    pub b_range: (i64, i64),
    pub k_range: (usize, usize),
    pub format: Format,
}

/// Substitutes `b` for the placeholder, folding `+-` and `--` so negative
/// parameters still parse.
pub fn instantiate(template: &str, b: i64) -> Result<IntPoly, CliError> {
    let text = template.replace(PLACEHOLDER, &b.to_string()).replace("+-", "-").replace("--", "+");
    Ok(poly_parse(&text)?)
}

impl TableSpec {
    pub fn new(template: &str, b_range: (i64, i64), k_range: (i64, i64), format: Format) -> Result<Self, CliError> {
        if template.matches(PLACEHOLDER).count() != 1 {
            return Err(CliError::Usage(format!("template must contain {PLACEHOLDER} exactly once")));
        }
        if b_range.0 > b_range.1 || k_range.0 > k_range.1 {
            return Err(CliError::Usage("ranges must be nonempty".into()));
        }
        if k_range.0 < 0 {
            return Err(CliError::Usage("k must be nonnegative".into()));
        }
        for b in b_range.0..=b_range.1 {
            instantiate(template, b)?;
        }
        Ok(TableSpec {
            template: template.to_string(),
            b_range,
            k_range: (k_range.0 as usize, k_range.1 as usize),
            format,
        })
    }

    fn grid(&self) -> Vec<(i64, usize)> {
        let (b0, b1) = self.b_range;
        let (k0, k1) = self.k_range;
        (b0..=b1).flat_map(|b| (k0..=k1).map(move |k| (b, k))).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Cell {
    pub b: i64,
    pub k: usize,
    pub report: PeriodReport,
}

fn compute_cell(spec: &TableSpec, b: i64, k: usize) -> Result<Cell, CliError> {
    let wrap = |e: CliError| CliError::Cell { b, k, source: Box::new(e) };
    let f = instantiate(&spec.template, b).map_err(wrap)?;
    let inst = FarhiInstance::new(f, k).map_err(|e| wrap(e.into()))?;
    let report = least_period(&inst).map_err(|e| wrap(e.into()))?;
    Ok(Cell { b, k, report })
}

/// All cells, computed in parallel and returned in ascending `(b, k)` order.
pub fn compute(spec: &TableSpec) -> Result<Vec<Cell>, CliError> {
    spec.grid().into_par_iter().map(|(b, k)| compute_cell(spec, b, k)).collect()
}

#[derive(Serialize)]
struct CellJson {
    b: i64,
    #[serde(flatten)]
    report: ReportJson,
}

pub fn render(spec: &TableSpec, cells: &[Cell]) -> Result<String, CliError> {
    match spec.format {
        Format::Json => {
            let rows: Vec<CellJson> =
                cells.iter().map(|c| CellJson { b: c.b, report: ReportJson::from(&c.report) }).collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("plain data serializes");
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
            w.write_record(["b", "k", "T", "T_factored"]).map_err(csv_err)?;
            for c in cells {
                w.write_record([
                    c.b.to_string(),
                    c.k.to_string(),
                    c.report.t.to_string(),
                    c.report.t_factored.to_string(),
                ])
                .map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
        }
        Format::Markdown => {
            let (k0, k1) = spec.k_range;
            let mut out = String::from("| f \\ k |");
            for k in k0..=k1 {
                out.push_str(&format!(" {k} |"));
            }
            out.push_str("\n|---|");
            out.push_str(&"---|".repeat(k1 - k0 + 1));
            out.push('\n');
            for row in cells.chunks(k1 - k0 + 1) {
                out.push_str(&format!("| {} |", row[0].report.f));
                for c in row {
                    out.push_str(&format!(" {} |", c.report.t_factored));
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}
