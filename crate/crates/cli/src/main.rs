//! `factstat`: exact factorization statistics over finite fields.
//!
//! Subcommands: `measure`, `expect`, `verify`, `characters`, `stable`.
//! Exit codes: 0 success (verify: all comparisons pass), 1 mathematical
//! mismatch or internal assertion failure, 2 usage error.

mod commands;
mod output;

use std::panic::AssertUnwindSafe;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::Format;

#[derive(Parser)]
#[command(
    name = "factstat",
    version,
    about = "Exact factorization statistics of monic polynomials over finite fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Directory for character-table cache files. Caching is off when
    /// unset; results are identical either way.
    #[arg(long, global = true, env = "FACTSTAT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Number of parallel enumeration shards; never affects output bytes.
    #[arg(long, global = true, default_value_t = 1)]
    shards: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Splitting-measure table at degree d (symbolic, or evaluated at --q).
    Measure {
        #[arg(long)]
        d: u32,
        /// Evaluate at a prime-power field order instead of printing series.
        #[arg(long)]
        q: Option<u64>,
        /// Use the squarefree measure (requires d >= 2).
        #[arg(long)]
        squarefree: bool,
    },
    /// Expected value of a statistic as an exact series in 1/q.
    Expect {
        #[arg(long)]
        d: u32,
        /// Builtin name (trivial, sgn, quad_excess, num_roots, even_type,
        /// x<k>) or an expression like "binom(x1,2) - x2".
        #[arg(long)]
        stat: String,
        #[arg(long)]
        squarefree: bool,
    },
    /// Cross-verify the enumeration oracle against the exact formulas.
    Verify {
        #[arg(long)]
        d_max: u32,
        /// Comma-separated prime-power field orders, e.g. 2,3,4.
        #[arg(long, value_delimiter = ',', required = true)]
        q_list: Vec<u64>,
        /// Statistics to verify (repeatable); defaults to all builtins.
        #[arg(long = "stats")]
        stats: Vec<String>,
    },
    /// Character family tables (psi, phi, chi).
    Characters {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        kind: String,
        /// Also decompose each row into irreducible multiplicities.
        #[arg(long)]
        decompose: bool,
    },
    /// Stabilization scan of the k-th expected-value coefficient.
    Stable {
        /// A character-polynomial statistic (expression, or one of
        /// trivial, quad_excess, num_roots, x<k>).
        #[arg(long)]
        stat: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d_max: u32,
    },
}

/// Settings shared by every subcommand.
pub struct Ctx {
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub shards: usize,
}

/// Errors that terminate a command with a usage exit code.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<factstat::Error> for UsageError {
    fn from(e: factstat::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub type CmdResult = Result<(String, u8), UsageError>;

fn run(cli: Cli) -> CmdResult {
    let ctx = Ctx {
        format: cli.format,
        cache_dir: cli.cache_dir,
        shards: cli.shards.max(1),
    };
    match cli.command {
        Command::Measure { d, q, squarefree } => commands::measure::run(d, q, squarefree, &ctx),
        Command::Expect { d, stat, squarefree } => commands::expect::run(d, &stat, squarefree, &ctx),
        Command::Verify {
            d_max,
            q_list,
            stats,
        } => commands::verify::run(d_max, &q_list, &stats, &ctx),
        Command::Characters { d, kind, decompose } => {
            commands::characters::run(d, &kind, decompose, &ctx)
        }
        Command::Stable { stat, k, d_max } => commands::stable::run(&stat, k, d_max, &ctx),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // internal invariant violations in the math kernels panic; report them
    // as exit 1 rather than an abort so CI can tell them from usage errors
    match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok((text, code))) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Ok(Err(UsageError(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("internal error: exact-arithmetic invariant violated (details above)");
            ExitCode::from(1)
        }
    }
}
