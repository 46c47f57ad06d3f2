use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::CliError;

/// BWT, bijective BWT, repetitiveness measures and verification suites.
#[derive(Debug, Parser)]
#[command(name = "bbwt", version)]
struct Cli {
    /// JSON file with default limits.
    #[arg(long, global = true, env = "BBWT_LIMITS", value_name = "FILE")]
    limits: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Bwt,
    Bbwt,
    Ibwt,
    Ibbwt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Wk,
    Yk,
    Fib,
    Fibstar,
    IbbwtFib,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a transform; raw bytes in, raw bytes out.
    Transform {
        #[arg(long, value_enum)]
        algo: Algo,
        /// Read and write hexadecimal instead of raw bytes.
        #[arg(long)]
        hex: bool,
        /// Input file, or "-" for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Report repetitiveness measures of the input.
    Measure {
        /// Comma-separated measures: delta,gamma,b,v,z,r,rB.
        #[arg(long, default_value = "delta,gamma,b,v,z,r,rB")]
        set: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print a member of a string family.
    Family {
        #[arg(long, value_enum)]
        name: Family,
        #[arg(long)]
        k: usize,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Report elapsed_ms as 0 so that reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Compare measures of each file with those of its BWT and BBWT.
    Ratio {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let limits = commands::load_limits(cli.limits.as_deref())?;
    match cli.command {
        Command::Transform { algo, hex, input } => commands::transform(algo, hex, &input),
        Command::Measure { set, format, input } => commands::measure(&set, format, &input, &limits),
        Command::Family { name, k } => commands::family(name, k),
        Command::Verify {
            suite,
            max_k,
            max_n,
            trials,
            seed,
            no_timing,
        } => {
            let mut limits = limits;
            limits.max_k = max_k.or(limits.max_k);
            limits.max_n = max_n.or(limits.max_n);
            limits.trials = trials.unwrap_or(limits.trials);
            limits.seed = seed.unwrap_or(limits.seed);
            commands::verify(&suite, &limits, no_timing)
        }
        Command::Ratio { format, files } => commands::ratio(format, &files),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bbwt: {e}");
            e.exit_code()
        }
    }
}
