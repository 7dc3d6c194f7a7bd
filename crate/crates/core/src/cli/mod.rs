//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or cap error.
//! Standard output is deterministic; wall-clock timings go to standard error.

mod export;
mod table;
mod verify;

pub use export::{cmd_enum, dot_block, EnumFormat};
pub use table::{
    cmd_count, cmd_table, count_rows, render_rows, CountFormat, CountRow, Kind, TableFormat,
    EXACT_ROWS, RATIO_SIG_DIGITS, SCIENTIFIC_PLACES,
};
pub use verify::{
    cmd_bench, cmd_verify, render_bench, render_bench_timings, BenchRow, OracleChoice, OracleKind,
    VerifyRecord, VerifyReport,
};

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::counting::CountError;
use crate::enumeration::{Cap, EnumError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("writing table: {0}")]
    Csv(#[from] csv::Error),
    #[error("writing table: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "mbcount",
    version,
    about = "Count Bayesian-network and Markov-blanket structures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print BN(n), MB(n) or their ratio
    Count(CountArgs),
    /// Print a table of BN(n), MB(n) and BN(n)/MB(n) for n = 1..max-n
    Table(TableArgs),
    /// Compare the recurrences against exhaustive enumeration
    Verify(VerifyArgs),
    /// List every canonical MB structure on n nodes
    Enum(EnumArgs),
    /// Report summand and big-integer operation counts
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: CountFormat,
    #[arg(long)]
    pub sig_digits: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 22)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "md")]
    pub format: TableFormat,
    /// Comma grouping, scientific counts above n = 12
    #[arg(long)]
    pub paper: bool,
    #[arg(long, default_value_t = RATIO_SIG_DIGITS)]
    pub sig_digits: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "both")]
    pub oracle: OracleChoice,
    #[arg(long, default_value_t = 0)]
    pub target: usize,
    /// Allow n = 6 (2^30 digraphs)
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub target: usize,
    #[arg(long, value_enum, default_value = "edges")]
    pub format: EnumFormat,
    /// Allow n = 6 (2^30 digraphs)
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 22)]
    pub max_n: usize,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(err: CliError) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: err.exit_code(),
        }
    }
}

fn cost_warning(n: usize) -> String {
    format!(
        "warning: enumerating 2^{} digraphs for n = {n}; this can take minutes\n",
        n * (n - 1)
    )
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Count(a) => {
            cmd_count(a.kind, a.n, a.format, a.sig_digits).map(|s| Outcome::ok(s + "\n"))
        }
        Command::Table(a) => cmd_table(a.max_n, a.format, a.paper, a.sig_digits).map(Outcome::ok),
        Command::Verify(a) => cmd_verify(a.max_n, a.oracle, a.target, Cap::from_force(a.force))
            .map(|report| {
                let mut stderr = String::new();
                if a.max_n > crate::enumeration::DEFAULT_CAP {
                    stderr.push_str(&cost_warning(a.max_n));
                }
                stderr.push_str(&report.timings());
                Outcome {
                    stdout: report.render(),
                    stderr,
                    code: if report.passed() {
                        EXIT_OK
                    } else {
                        EXIT_MISMATCH
                    },
                }
            }),
        Command::Enum(a) => cmd_enum(a.n, a.target, a.format, Cap::from_force(a.force)).map(|s| {
            let mut out = Outcome::ok(s);
            if a.n > crate::enumeration::DEFAULT_CAP {
                out.stderr = cost_warning(a.n);
            }
            out
        }),
        Command::Bench(a) => cmd_bench(a.max_n).map(|rows| Outcome {
            stdout: render_bench(&rows),
            stderr: render_bench_timings(&rows),
            code: EXIT_OK,
        }),
    };
    result.unwrap_or_else(Outcome::error)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            }
        }
    }
}
