mod cocycle;
mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use filiform_coh::verify::LambdaSpec;

/// Exact cohomology of the filiform algebras m0^λ(p) over GF(p).
#[derive(Parser, Debug)]
#[command(name = "filiform", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of H¹, H¹₊, H², H²₊ compared with their expected values.
    Dims {
        #[arg(long)]
        prime: u32,
        /// Comma-separated residues, `zero`, `random:SEED`, `onehot` or `all`.
        #[arg(long, default_value = "zero")]
        lambda: LambdaSpec,
        #[command(flatten)]
        out: Output,
    },
    /// Representative cocycles of a cohomology group.
    Basis {
        #[arg(long)]
        prime: u32,
        #[arg(long, default_value = "zero")]
        lambda: LambdaSpec,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        degree: u8,
        #[arg(long)]
        restricted: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Full invariant suite for m0^λ(p).
    Verify {
        #[arg(long)]
        prime: u32,
        #[arg(long, default_value = "zero")]
        lambda: LambdaSpec,
        /// Random argument tuples per λ for sampled checks.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Graded restricted isomorphism between m0^λ(p) and m0^λ'(p).
    Iso {
        #[arg(long)]
        prime: u32,
        #[arg(long, required_unless_present = "classes")]
        lambda: Option<LambdaSpec>,
        #[arg(long, required_unless_present = "classes")]
        lambda_prime: Option<LambdaSpec>,
        /// Partition every λ (or the `--lambda all` set) into classes instead.
        #[arg(long)]
        classes: bool,
        #[command(flatten)]
        out: Output,
    },
    /// One-dimensional central extension, written as algebra JSON.
    Extend {
        #[arg(long)]
        prime: u32,
        #[arg(long, default_value = "zero")]
        lambda: LambdaSpec,
        /// Terms joined by `+`: `ebar:k`, `e:i,j`, `phi:k`, optionally `c*term`.
        #[arg(long)]
        cocycle: String,
        /// Ordinary extension by the φ part only.
        #[arg(long)]
        ordinary: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Dimension comparison over a grid of primes and λ.
    Sweep {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u32>,
        #[arg(long, default_value = "zero")]
        lambda: LambdaSpec,
        #[command(flatten)]
        out: Output,
    },
    /// Structural checks and cohomology of an algebra JSON file.
    Inspect {
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dims { prime, lambda, out } => commands::sweep(&[prime], &lambda, &out),
        Command::Basis {
            prime,
            lambda,
            degree,
            restricted,
            out,
        } => commands::basis(prime, &lambda, degree, restricted, &out),
        Command::Verify {
            prime,
            lambda,
            samples,
            seed,
            out,
        } => commands::verify(prime, &lambda, samples, seed, &out),
        Command::Iso {
            prime,
            lambda,
            lambda_prime,
            classes,
            out,
        } => commands::iso(prime, lambda.as_ref(), lambda_prime.as_ref(), classes, &out),
        Command::Extend {
            prime,
            lambda,
            cocycle,
            ordinary,
            output,
        } => commands::extend(prime, &lambda, &cocycle, ordinary, output.as_deref()),
        Command::Sweep { primes, lambda, out } => commands::sweep(&primes, &lambda, &out),
        Command::Inspect { algebra, out } => commands::inspect(&algebra, &out),
    };
    match result {
        Ok(commands::Status::Ok) => ExitCode::SUCCESS,
        Ok(commands::Status::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
