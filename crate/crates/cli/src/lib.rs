//! `circnorm` command line: exact norms, bound sets, oracle estimates,
//! `p`-sweeps and property verification for circulant matrices.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 no closed form applies,
//! 3 verification failure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod format;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use circnorm::oracle::{power_estimate, DEFAULT_SEED};
use circnorm::{
    best_bounds, canonicalize, exact_norm, exact_two_param, CirculantSpec, DiagonalSign, Exponent,
    NormResult, OracleConfig, TwoParamSpec,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::{fmt_exponent, fmt_float, parse_p_grid, parse_row};
use crate::verify::{Suite, VerifyConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    NoFormula(String),
    #[error("{0}")]
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::NoFormula(_) => 2,
            CliError::VerifyFailed(_) => 3,
        }
    }
}

impl From<circnorm::Error> for CliError {
    fn from(e: circnorm::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "circnorm",
    version,
    about = "Induced l^p norms of circulant matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form norm, when one applies.
    Exact {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_parser = parse_exponent)]
        p: Exponent<f64>,
    },
    /// Lower and upper bounds for A(n, -a, b).
    Bounds {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_parser = parse_exponent)]
        p: Exponent<f64>,
    },
    /// Numerical lower estimate with a witness vector.
    Oracle {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_parser = parse_exponent)]
        p: Exponent<f64>,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Bounds, oracle and exact values over a grid of p.
    Sweep {
        #[command(flatten)]
        params: ParamArgs,
        /// Comma list, or log:lo:hi:count. 1, 2 and inf are always added.
        #[arg(long, default_value = "log:1.25:16:8")]
        p: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Random instances per suite (per (n, p) pair for the lemma suite).
        #[arg(long, default_value_t = 50)]
        draws: usize,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

/// `A(n, a, b)` with arbitrary real `a`, `b`; canonicalized before use.
#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: f64,
}

/// Either `--row` or all of `--n`, `--a`, `--b`.
#[derive(Debug, Clone, Args)]
pub struct MatrixArgs {
    #[arg(long, requires_all = ["a", "b"])]
    pub n: Option<usize>,
    #[arg(long, allow_negative_numbers = true, requires = "n")]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "n")]
    pub b: Option<f64>,
    /// First row, comma-separated.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["n", "a", "b"], required_unless_present = "n")]
    pub row: Option<String>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 32)]
    pub restarts: usize,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

impl OracleArgs {
    fn config(&self) -> Result<OracleConfig, CliError> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Usage(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        Ok(OracleConfig {
            restarts: self.restarts,
            tol: self.tol,
            seed: self.seed,
            ..OracleConfig::default()
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

fn parse_exponent(s: &str) -> Result<Exponent<f64>, String> {
    s.parse().map_err(|e: circnorm::Error| e.to_string())
}

enum Matrix {
    Row(CirculantSpec<f64>),
    Params(TwoParamSpec<f64>),
}

impl MatrixArgs {
    fn resolve(&self) -> Result<Matrix, CliError> {
        match (&self.row, self.n, self.a, self.b) {
            (Some(row), _, _, _) => {
                let row = parse_row(row).map_err(CliError::Usage)?;
                Ok(Matrix::Row(CirculantSpec::new(row)?))
            }
            (None, Some(n), Some(a), Some(b)) => Ok(Matrix::Params(canonicalize(n, a, b)?)),
            _ => Err(CliError::Usage(
                "give --row, or all of --n, --a, --b".into(),
            )),
        }
    }
}

/// `A(4, -1, 2)` style label for a canonical spec.
pub fn describe(spec: &TwoParamSpec<f64>) -> String {
    let sign = match spec.sign() {
        DiagonalSign::Plus => "",
        DiagonalSign::Minus => "-",
    };
    format!(
        "A({}, {sign}{}, {})",
        spec.n(),
        fmt_float(spec.a()),
        fmt_float(spec.b())
    )
}

fn print_canonical(spec: &TwoParamSpec<f64>, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "canonical form: {}", describe(spec))
}

fn print_norm(r: &NormResult<f64>, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{} ({})", fmt_float(r.lower()), r.method)
}

fn cmd_exact(matrix: &MatrixArgs, e: Exponent<f64>, out: &mut dyn Write) -> Result<(), CliError> {
    let no_formula = |what: String| {
        CliError::NoFormula(format!(
            "no closed form; use bounds ({what} at p = {})",
            fmt_exponent(e)
        ))
    };
    match matrix.resolve()? {
        Matrix::Row(spec) => {
            let r = exact_norm(&spec, e).map_err(|_| {
                let row: Vec<String> = spec.first_row().iter().map(|&x| fmt_float(x)).collect();
                no_formula(format!("row [{}]", row.join(", ")))
            })?;
            print_norm(&r, out)?;
        }
        Matrix::Params(spec) => {
            let r = exact_two_param(&spec, e).map_err(|_| no_formula(describe(&spec)))?;
            print_norm(&r, out)?;
            print_canonical(&spec, out)?;
        }
    }
    Ok(())
}

fn cmd_bounds(params: ParamArgs, e: Exponent<f64>, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = canonicalize(params.n, params.a, params.b)?;
    let b = best_bounds(&spec, e);
    print_canonical(&spec, out)?;
    writeln!(out, "p: {}", fmt_exponent(e))?;
    writeln!(out, "regime: {}", b.regime.label())?;
    writeln!(out, "lower: {}", fmt_float(b.lower))?;
    writeln!(out, "upper_holder: {}", fmt_float(b.upper_holder))?;
    writeln!(out, "upper_rt: {}", fmt_float(b.upper_rt))?;
    writeln!(out, "upper_harmonic: {}", fmt_float(b.upper_harmonic))?;
    Ok(())
}

fn cmd_oracle(
    matrix: &MatrixArgs,
    e: Exponent<f64>,
    oracle: OracleArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let cfg = oracle.config()?;
    let report = match matrix.resolve()? {
        Matrix::Row(spec) => power_estimate(&spec, e, &cfg),
        Matrix::Params(spec) => {
            print_canonical(&spec, out)?;
            power_estimate(&spec, e, &cfg)
        }
    };
    writeln!(out, "estimate: {}", fmt_float(report.estimate))?;
    let witness: Vec<String> = report.witness.iter().map(|&x| fmt_float(x)).collect();
    writeln!(out, "witness: [{}]", witness.join(", "))?;
    writeln!(
        out,
        "starts: {}, iterations: {}, converged: {}, seed: {}",
        report.restarts_used, report.iterations, report.converged, report.seed
    )?;
    Ok(())
}

fn cmd_sweep(
    params: ParamArgs,
    grid: &str,
    format: OutputFormat,
    path: Option<&PathBuf>,
    oracle: OracleArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let spec = canonicalize(params.n, params.a, params.b)?;
    let grid = parse_p_grid(grid)?;
    let rows = sweep::sweep(&spec, &grid, &oracle.config()?);
    let mut buf = Vec::new();
    match format {
        OutputFormat::Csv => {
            sweep::write_csv(&rows, &mut buf).map_err(|e| CliError::Io(e.into()))?
        }
        OutputFormat::Json => sweep::write_json(&rows, &mut buf)?,
    }
    match path {
        Some(path) => std::fs::write(path, &buf).map_err(|e| {
            CliError::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
        })?,
        None => out.write_all(&buf)?,
    }
    Ok(())
}

fn cmd_verify(suite: Suite, cfg: &VerifyConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let reports = verify::run(suite, cfg);
    let mut failures = Vec::new();
    for r in &reports {
        writeln!(out, "{r}")?;
        failures.extend(r.failures.iter().map(|f| format!("[{}] {f}", r.name)));
    }
    if failures.is_empty() {
        writeln!(out, "all properties hold")?;
        Ok(())
    } else {
        Err(CliError::VerifyFailed(failures.join("\n")))
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Exact { matrix, p } => cmd_exact(matrix, *p, out),
        Command::Bounds { params, p } => cmd_bounds(*params, *p, out),
        Command::Oracle { matrix, p, oracle } => cmd_oracle(matrix, *p, *oracle, out),
        Command::Sweep {
            params,
            p,
            format,
            out: path,
            oracle,
        } => cmd_sweep(*params, p, *format, path.as_ref(), *oracle, out),
        Command::Verify {
            suite,
            n_max,
            draws,
            oracle,
        } => {
            let cfg = VerifyConfig {
                n_max: *n_max,
                draws: *draws,
                seed: oracle.seed,
                oracle: oracle.config()?,
            };
            cmd_verify(*suite, &cfg, out)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
