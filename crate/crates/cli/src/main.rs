//! `sigma2`: enumerate and inspect tuples with `σ₂ = σₙ`.

mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::Manifest;

#[derive(Parser)]
#[command(name = "sigma2", version, about = "Positive integer tuples whose second elementary symmetric sum equals their product")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// All solutions of length N
    Enumerate {
        n: u64,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// |S(n)| for n = 3..=N_MAX
    Table1 {
        n_max: u64,
        /// Compare n = 3..16 against the known counts
        #[arg(long)]
        check: bool,
    },
    /// Check a comma-separated tuple
    Verify {
        #[arg(value_parser = output::parse_tuple)]
        tuple: output::List,
    },
    /// Pell-equation families
    Pell {
        #[command(subcommand)]
        which: PellCommand,
    },
    /// Solutions with exactly three entries above one
    S3 {
        n: u64,
        /// Print only the number of solutions
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Pruning bounds for length N
    Bounds { n: u64 },
    /// Distinct-value questions
    Distinct {
        #[command(subcommand)]
        which: DistinctCommand,
    },
}

#[derive(Subcommand)]
enum PellCommand {
    /// Members 0..=J of the (1^(n-3), 2, x, x) family
    Family { j: u64 },
    /// First COUNT solutions for the divisor split (a t, b t)
    Ratio { a: u64, b: u64, count: usize },
}

#[derive(Subcommand)]
enum DistinctCommand {
    /// Fewest distinct values over S(N)
    Min { n: u64 },
    /// Solutions made of a block of equal entries after the ones
    Blocks {
        #[arg(long, value_parser = output::parse_range, default_value = "3..4")]
        k: (u32, u32),
        #[arg(long, default_value_t = 200)]
        x_max: u64,
    },
    /// Complete a tail of entries >= 2 to a solution
    Construct {
        #[arg(value_parser = output::parse_list)]
        tail: output::List,
    },
    /// A solution with M + 2 distinct values
    Witness { m: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let run = match cli.command {
        Command::Enumerate { n, format, jobs } => commands::enumerate(n, format, jobs),
        Command::Table1 { n_max, check } => commands::table1(n_max, check),
        Command::Verify { tuple } => commands::verify(tuple.0),
        Command::Pell { which: PellCommand::Family { j } } => commands::pell_family(j),
        Command::Pell { which: PellCommand::Ratio { a, b, count } } => commands::pell_ratio(a, b, count),
        Command::S3 { n, count, format } => commands::s3(n, count, format),
        Command::Bounds { n } => commands::bounds(n),
        Command::Distinct { which } => match which {
            DistinctCommand::Min { n } => commands::distinct_min(n),
            DistinctCommand::Blocks { k, x_max } => commands::distinct_blocks(k, x_max),
            DistinctCommand::Construct { tail } => commands::distinct_construct(tail.0),
            DistinctCommand::Witness { m } => commands::distinct_witness(m),
        },
    };
    match run {
        Ok(run) => {
            print!("{}", run.stdout);
            for line in &run.diagnostics {
                eprintln!("{line}");
            }
            let manifest = Manifest::new(run.command, run.parameters, start.elapsed(), run.result_count);
            eprintln!("{}", manifest.to_json());
            ExitCode::from(run.status)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status)
        }
    }
}
