//! `realizer`: transfer matrices ⇄ state models from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or parse error,
//! 3 semantic error (improper entry, inconsistent dimensions, ...).

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "realizer", version, about = "State-space realization and structural analysis of linear systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Companion-form state model of a transfer matrix.
    Realize(Source),
    /// Transfer matrix C(sI - A)^-1 B of a state model.
    Transfer(Source),
    /// Ranks of the controllability/observability matrices and group sizes.
    Analyze(Source),
    /// Kalman canonical decomposition.
    Decompose(Source),
    /// Controllable and observable subsystem.
    Minimize(Source),
    /// Check that realization and minimization reproduce a transfer matrix.
    Verify(VerifyArgs),
    /// Impulse response of one input channel as CSV.
    Simulate(SimulateArgs),
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Inline transfer matrix, e.g. "[1/(s+1), s/(s^2-1)]".
    #[arg(short = 'e', long = "expr", conflicts_with = "file")]
    expr: Option<String>,

    /// Input file (text grammar or JSON); "-" reads stdin.
    #[arg(short = 'f', long = "file")]
    file: Option<PathBuf>,

    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,

    /// Verify randomly generated transfer matrices instead of an input.
    #[arg(long, conflicts_with_all = ["expr", "file"])]
    seed: Option<u64>,

    /// Number of random matrices checked with --seed.
    #[arg(long, default_value_t = 1, requires = "seed")]
    count: usize,

    /// State model (JSON) to check against the input instead of its
    /// companion realization.
    #[arg(long, conflicts_with = "seed")]
    state: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[command(flatten)]
    source: Source,

    /// Simulation horizon in seconds.
    #[arg(long = "t-end", default_value_t = 2.0)]
    t_end: f64,

    /// Fixed RK4 step in seconds.
    #[arg(long, default_value_t = 1e-3)]
    dt: f64,

    /// Input channel receiving the impulse, 1-based.
    #[arg(long, default_value_t = 1)]
    channel: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
