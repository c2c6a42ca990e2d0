use std::path::PathBuf;

use chebkit_core::TargetFn;
use clap::{Parser, ValueEnum};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Run every identity and property suite; exit 1 on any failure.
    Verify,
    /// Sample T_0..T_N on a uniform grid.
    Tabulate,
    /// Fit one method to the target and sample fit and error.
    Approx,
    /// Error table of both methods for N = 0..=n.
    Compare,
    /// Parseval energy balance for N = 0..=n.
    Parseval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Chebyshev,
    Fourier,
    Both,
}

/// Chebyshev polynomial toolkit: identity checks, series fits and
/// Chebyshev-vs-Fourier comparisons, written as CSV.
#[derive(Debug, Clone, Parser)]
#[command(name = "chebkit", version)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// poly:c0,c1,..., step:x0/low/high, preset:septic or preset:unit_step
    #[arg(long, default_value = "preset:septic")]
    pub target: String,
    /// Truncation order (default depends on the command)
    #[arg(long = "n")]
    pub n: Option<usize>,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Uniform sample points on [-1, 1]
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
    /// Gauss-Chebyshev rule size for coefficient fitting
    #[arg(long = "rule-size")]
    pub rule_size: Option<usize>,
    #[arg(long = "out")]
    pub out: Option<PathBuf>,
    /// Seed for the randomized suites of `verify`
    #[arg(long)]
    pub seed: Option<u64>,
}

pub const DEFAULT_SEED: u64 = 0x5EED;
pub const MAX_TABULATE_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub target: TargetFn,
    pub n: usize,
    pub method: Method,
    pub samples: usize,
    pub rule_size: Option<usize>,
    pub output_path: Option<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let target: TargetFn = cli.target.parse()?;
        if cli.samples < 2 {
            return Err(CliError::Usage(format!(
                "--samples must be at least 2, got {}",
                cli.samples
            )));
        }
        let n = cli.n.unwrap_or(match cli.command {
            Command::Tabulate => 5,
            Command::Approx | Command::Compare => 20,
            Command::Parseval => 40,
            Command::Verify => 0,
        });
        let method = cli.method.unwrap_or(match cli.command {
            Command::Compare => Method::Both,
            _ => Method::Chebyshev,
        });
        if cli.command == Command::Tabulate && n > MAX_TABULATE_ORDER {
            return Err(CliError::Usage(format!(
                "tabulate supports N <= {MAX_TABULATE_ORDER}, got {n}"
            )));
        }
        if cli.command == Command::Approx && method == Method::Both {
            return Err(CliError::Usage(
                "approx fits one method; use compare for both".into(),
            ));
        }
        if cli.rule_size == Some(0) {
            return Err(CliError::Usage("--rule-size must be positive".into()));
        }
        Ok(RunConfig {
            command: cli.command,
            target,
            n,
            method,
            samples: cli.samples,
            rule_size: cli.rule_size,
            output_path: cli.out,
            seed: cli.seed.unwrap_or(DEFAULT_SEED),
        })
    }

    pub fn parse_from<I, T>(args: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
        RunConfig::from_cli(cli)
    }
}
