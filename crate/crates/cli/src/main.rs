//! `motzkin`: exact tables, coefficients, interval bounds and sampling for
//! protected and balanced vertices in Motzkin trees.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use motzkin_cli::commands::{self, Failure};
use motzkin_cli::record::{Format, OutputRecord};

#[derive(Debug, Parser)]
#[command(name = "motzkin", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Limiting proportion p_k of k-protected vertices, k = 1..=max-k.
    Table {
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        /// Decimal places, rounded half-even.
        #[arg(long, default_value_t = 8)]
        digits: usize,
    },
    /// Exact coefficients of a generating function.
    ///
    /// Selectors: motzkin, leaves, protected:K, protected-root:K,
    /// balanced-rank:K, balanced, eb.
    Coeffs {
        selector: String,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
    },
    /// Compare brute-force enumeration with generating functions.
    #[command(visible_alias = "oracle")]
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Interval for the limiting proportion of balanced vertices.
    Bounds {
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
        /// Decimal places; endpoints are rounded outward.
        #[arg(long, default_value_t = 18)]
        digits: usize,
    },
    /// Interval for the limiting expected rank of a balanced vertex.
    ExpectedRank {
        #[arg(long, default_value_t = 20)]
        cutoff: usize,
        /// Decimal places; endpoints are rounded outward.
        #[arg(long, default_value_t = 18)]
        digits: usize,
    },
    /// Monte Carlo estimate of a vertex proportion over trees with N vertices.
    ///
    /// Statistics: leaf, protected:K, balanced, balanced-rank:K.
    Sample {
        n: usize,
        statistic: String,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        /// Decimal places of the exact reference proportion.
        #[arg(long, default_value_t = 8)]
        digits: usize,
    },
}

fn run(command: Command) -> Result<OutputRecord, Failure> {
    match command {
        Command::Table { max_k, digits } => commands::table(max_k, digits),
        Command::Coeffs { selector, from, to } => commands::coeffs(&selector, from, to),
        Command::Verify { max_n, max_k } => commands::verify(max_n, max_k),
        Command::Bounds { cutoff, digits } => commands::bounds(cutoff, digits),
        Command::ExpectedRank { cutoff, digits } => commands::expected_rank(cutoff, digits),
        Command::Sample {
            n,
            statistic,
            samples,
            seed,
            digits,
        } => commands::sample(n, &statistic, samples, seed, digits),
    }
}

fn emit(record: &OutputRecord, format: Format) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match record.write(format, &mut out).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: writing output: {e}");
            ExitCode::from(Failure::EXIT_INTERNAL)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(record) => emit(&record, cli.format),
        Err(failure) => {
            let code = failure.exit_code();
            match failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Verification(record, msg) => {
                    emit(&record, cli.format);
                    eprintln!("verification failed: {msg}");
                }
                Failure::Internal(msg) => eprintln!("internal error: {msg}"),
            }
            ExitCode::from(code)
        }
    }
}
