use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use farhi_core::closedforms::{farhi_kane_T, linear_T, spaced_T};
use farhi_core::farhi::{least_period, oracle_least_period};
use farhi_core::polyarith::poly_parse;
use farhi_core::FarhiInstance;
use farhi_tool::checks::{run_suite, Suite};
use farhi_tool::table::{self, Format, TableSpec};
use farhi_tool::{factored_with_value, json, oracle_budget, parse_range, CliError};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "farhi", version, about = "Least periods of g(n) = |f(n)···f(n+k)| / lcm(f(n), …, f(n+k))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate g at a single point.
    Eval {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        n: BigInt,
    },
    /// Least period with its per-prime breakdown.
    Period {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
        /// Cross-check against the brute-force search (bounded by FARHI_ORACLE_BUDGET).
        #[arg(long)]
        oracle: bool,
    },
    /// Grid of least periods over a polynomial family.
    Table {
        /// Polynomial with one `{b}` placeholder, e.g. "x^2+{b}".
        #[arg(long)]
        template: String,
        #[arg(long, default_value = "1..6", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "1..6")]
        k: String,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Closed-form least periods for x, ax + b and spaced products.
    ClosedForm {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
        /// Period of |n(n+a)···(n+ka)| / lcm(n, …, n+ka).
        #[arg(long)]
        spaced: bool,
    },
    /// Run the self-verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Small)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Small,
    Full,
}

fn instance(poly: &str, k: usize) -> Result<FarhiInstance, CliError> {
    Ok(FarhiInstance::new(poly_parse(poly)?, k)?)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Eval { poly, k, n } => {
            let inst = instance(&poly, k)?;
            writeln!(out, "{}", inst.g_eval_ext(&n))?;
            if inst.zero_set().contains(&n) {
                eprintln!("note: the window at n = {n} contains a zero of f; value taken from the periodic extension");
            }
        }
        Command::Period { poly, k, json: as_json, oracle } => {
            let inst = instance(&poly, k)?;
            let report = least_period(&inst)?;
            if oracle {
                let budget = oracle_budget(farhi_core::farhi::DEFAULT_ORACLE_BUDGET)?;
                let o = oracle_least_period(&inst, budget)?;
                if o != report.t {
                    return Err(CliError::Verification { failed: 1, total: 1 });
                }
            }
            if as_json {
                writeln!(out, "{}", json::to_json(&report))?;
            } else {
                writeln!(out, "f = {}, k = {}", report.f, report.k)?;
                writeln!(out, "C = {}", factored_with_value(inst.c_factored()))?;
                for l in &report.locals {
                    writeln!(out, "  p = {}: e_p = {}, T_p = {}", l.p, l.e_p, l.period())?;
                }
                writeln!(out, "T = {}", factored_with_value(&report.t_factored))?;
            }
        }
        Command::Table { template, b, k, format } => {
            let spec = TableSpec::new(&template, parse_range(&b)?, parse_range(&k)?, format)?;
            let cells = table::compute(&spec)?;
            write!(out, "{}", table::render(&spec, &cells)?)?;
        }
        Command::ClosedForm { k, a, b, spaced } => {
            let t = match (a, b, spaced) {
                (None, None, false) => farhi_kane_T(k),
                (Some(a), None, true) => spaced_T(k, a)?,
                (Some(a), Some(b), false) => linear_T(k, a, b)?,
                (_, _, true) => return Err(CliError::Usage("--spaced takes --a and no --b".into())),
                (None, Some(_), false) => return Err(CliError::Usage("--b requires --a".into())),
                (Some(_), None, false) => return Err(CliError::Usage("--a requires --b or --spaced".into())),
            };
            writeln!(out, "T = {}", factored_with_value(&t))?;
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Small => Suite::Small,
                SuiteArg::Full => Suite::Full,
            };
            let cap = oracle_budget(suite.default_cap())?;
            let results = run_suite(suite, cap);
            for r in &results {
                writeln!(out, "{}", r.line())?;
            }
            let failed = results.iter().filter(|r| !r.passed()).count();
            writeln!(out, "{} passed, {failed} failed", results.len() - failed)?;
            if failed > 0 {
                return Err(CliError::Verification { failed, total: results.len() });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
