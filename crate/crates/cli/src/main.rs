use std::process::ExitCode;

use clap::{Parser, Subcommand};
use wavesort_cli::commands;

/// Instrumented sorting benchmarks and analytical checks for wave sort.
#[derive(Parser)]
#[command(name = "wavesort", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded trials and emit an aggregate table.
    Bench {
        /// Algorithm to benchmark (repeatable); defaults to all four.
        /// One of: wave-basic, wave-tradeoff, wave-adaptive, quicksort.
        #[arg(long = "algo")]
        algos: Vec<String>,
        /// Sequence length.
        #[arg(long)]
        n: usize,
        /// Input pattern: shuffled, sorted, reversed, sawtooth, organ-pipe,
        /// few-unique; sawtooth and few-unique accept an optional :k suffix.
        #[arg(long, default_value = "shuffled")]
        pattern: String,
        /// Number of trials; trial i uses seed + i.
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Base PRNG seed for the seeded patterns.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output format: csv, markdown, json.
        #[arg(long, default_value = "markdown")]
        format: String,
    },
    /// Check basic wave sort on sorted input against the exact worst-case
    /// comparison count.
    Worst {
        /// Sequence length (power of two, at least 4).
        #[arg(long)]
        n: u64,
    },
    /// Print the analytical bounds for a length.
    Theory {
        #[arg(long)]
        n: u64,
    },
    /// Emit the pivot-rank distribution for one or more sorted-portion
    /// lengths.
    PivotDist {
        /// Sequence length.
        #[arg(long)]
        n: usize,
        /// Sorted-portion length (repeatable).
        #[arg(long = "ls", required = true)]
        ls: Vec<usize>,
        /// Output format: csv, markdown, json.
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Run the property battery across the given sizes.
    Verify {
        /// Comma-separated sequence lengths.
        #[arg(long, value_delimiter = ',', default_value = "256,1000,1024,4096")]
        sizes: Vec<usize>,
    },
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Bench {
            algos,
            n,
            pattern,
            trials,
            seed,
            format,
        } => {
            print!(
                "{}",
                commands::bench(&algos, n, &pattern, trials, seed, &format)?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Worst { n } => {
            let (out, ok) = commands::worst(n)?;
            print!("{out}");
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Theory { n } => {
            print!("{}", commands::theory(n)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::PivotDist { n, ls, format } => {
            print!("{}", commands::pivot_dist(n, &ls, &format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { sizes } => {
            let (out, ok) = commands::run_verify(&sizes);
            print!("{out}");
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
