//! Command-line front end for `monomat`.
//!
//! Exit codes: 0 on success (and a true verdict for `check`), 1 for a false
//! verdict or an oracle discrepancy, 2 for input errors.

pub mod bench;
mod commands;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::Outcome;

#[derive(Debug, Parser)]
#[command(
    name = "monomat",
    version,
    about = "Exact polynomial calculus on monomial matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate p(A) exactly.
    Eval(EvalArgs),
    /// Compute A^j exactly.
    Power(PowerArgs),
    /// List the r mod n parts of p.
    Parts(PartsArgs),
    /// Decide whether p preserves nonnegativity on nonnegative monomial matrices of order ≤ n.
    Check(CheckArgs),
    /// Time the closed form against dense Horner and emit CSV.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Via {
    /// Structured closed form.
    #[default]
    Closed,
    /// Naive dense reference.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum InputFormat {
    #[default]
    Auto,
    Dense,
    Structured,
}

#[derive(Debug, Args)]
pub struct MatrixSource {
    /// Matrix file (`-` for stdin).
    #[arg(short = 'A', long = "matrix")]
    pub path: PathBuf,
    /// Input format; auto-detected from the first character when omitted.
    #[arg(long, value_enum, default_value_t)]
    pub format: InputFormat,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Polynomial in t, e.g. "t^20 + 4*t^15 + 3/2*t - 5".
    #[arg(short, long = "poly", allow_hyphen_values = true)]
    pub poly: String,
    #[command(flatten)]
    pub matrix: MatrixSource,
    #[arg(long, value_enum, default_value_t)]
    pub via: Via,
    /// Compute with both methods, print both and every differing entry.
    #[arg(long)]
    pub diff: bool,
    #[arg(long, value_enum, default_value_t)]
    pub output: EvalOutput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum EvalOutput {
    /// Dense text matrix.
    #[default]
    Dense,
    /// JSON with the Frobenius normal form and per-block coefficients.
    Blocks,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub matrix: MatrixSource,
    /// Exponent.
    #[arg(short)]
    pub j: u64,
    #[arg(long, value_enum, default_value_t)]
    pub via: Via,
    #[arg(long)]
    pub diff: bool,
    #[arg(long, value_enum, default_value_t)]
    pub output: PowerOutput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum PowerOutput {
    #[default]
    Dense,
    /// Structured monomial record.
    Structured,
}

#[derive(Debug, Args)]
pub struct PartsArgs {
    #[arg(short, long = "poly", allow_hyphen_values = true)]
    pub poly: String,
    /// Modulus.
    #[arg(short)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(short, long = "poly", allow_hyphen_values = true)]
    pub poly: String,
    /// Largest matrix order.
    #[arg(short)]
    pub n: usize,
    /// Write a counterexample matrix here when the verdict is false.
    #[arg(long)]
    pub witness_matrix: Option<PathBuf>,
    /// Emit the report as JSON.
    #[arg(long)]
    pub json: bool,
}

/// Parses arguments, runs the command and maps the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut stdout = std::io::stdout().lock();
    match commands::run(&cli.command, &mut stdout) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

pub use commands::run;
