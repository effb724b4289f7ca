//! `homprime`: JSON front end for section rings and homogeneous principal
//! primes.
//!
//! Exit codes: 0 success, 1 domain error, 2 success with warnings, 3 bad input.

mod commands;
mod report;
mod schema;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homprime::elliptic::EllipticError;
use homprime::p1::P1Error;
use homprime::primes::PrimeError;
use homprime::section_ring::RingError;
use homprime::semigroup::SemigroupError;
use thiserror::Error;

use commands::Outcome;
use schema::Job;

#[derive(Parser)]
#[command(name = "homprime", version, about = "Section rings of Q-divisors and their homogeneous principal primes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Job file; standard input when absent.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Degree bound for the section ring (default 3·lcd of the coefficients).
    #[arg(long, global = true, env = "HOMPRIME_BOUND")]
    bound: Option<u32>,
    /// Degree bound for the primality oracle (default 2·max generator degree + d).
    #[arg(long, global = true)]
    oracle_bound: Option<u32>,
    /// Fields of `ring` output; all when absent.
    #[arg(long, global = true, value_delimiter = ',')]
    emit: Vec<Emit>,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions, generators, relations, Hilbert series, a-invariant, Tomari limit.
    Ring,
    /// Homogeneous principal primes of a divisor on P¹.
    Primes {
        #[command(subcommand)]
        action: PrimesAction,
    },
    /// Numerical semigroup invariants and the degree-chain criterion.
    Semigroup,
    /// Divisors on Weierstrass curves.
    Ec {
        #[command(subcommand)]
        action: EcAction,
    },
}

#[derive(Subcommand)]
enum PrimesAction {
    /// Every degree carrying a prime, with evidence.
    Enumerate,
    /// Decide whether `function·T^degree` generates a prime ideal.
    Check,
    /// Build the prime of a given degree through a given point.
    Construct,
}

#[derive(Subcommand)]
enum EcAction {
    /// Prime existence in a degree, and principality of listed divisors.
    Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Dims,
    Generators,
    Relations,
    Hilbert,
    AInvariant,
    Tomari,
}

pub struct Options {
    pub bound: Option<u32>,
    pub oracle_bound: Option<u32>,
    emit: Vec<Emit>,
}

impl Options {
    pub fn emit(&self) -> Vec<Emit> {
        if self.emit.is_empty() {
            Emit::value_variants().to_vec()
        } else {
            self.emit.clone()
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) => 3,
        }
    }
}

macro_rules! domain_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        }
    )*};
}

domain_errors!(RingError, PrimeError, SemigroupError, EllipticError, P1Error);

fn read_job(cli: &Cli) -> Result<Job, CliError> {
    let text = match &cli.input {
        Some(path) => fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(e.to_string()))?;
            s
        }
    };
    let mut value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    // `semigroup` accepts the full output of `primes check`; keep only what it reads.
    if matches!(cli.command, Command::Semigroup) && value.get("oracle").is_some() {
        if let Some(obj) = value.as_object_mut() {
            obj.retain(|k, _| matches!(k.as_str(), "profile" | "x0_degree" | "hypotheses"));
        }
    }
    serde_json::from_value(value).map_err(|e| CliError::Input(format!("invalid job: {e}")))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let job = read_job(cli)?;
    let opts = Options {
        bound: cli.bound,
        oracle_bound: cli.oracle_bound,
        emit: cli.emit.clone(),
    };
    let mut out = match &cli.command {
        Command::Ring => commands::ring(&job, &opts),
        Command::Primes { action } => match action {
            PrimesAction::Enumerate => commands::primes_enumerate(&job, &opts),
            PrimesAction::Check => commands::primes_check(&job, &opts),
            PrimesAction::Construct => commands::primes_construct(&job, &opts),
        },
        Command::Semigroup => commands::semigroup(&job),
        Command::Ec {
            action: EcAction::Verdict,
        } => commands::ec_verdict(&job),
    }?;
    if let (Some(desc), Some(obj)) = (job.description, out.value.as_object_mut()) {
        obj.insert("description".into(), desc.into());
    }
    Ok(out)
}

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    let io_err = |e: io::Error| CliError::Input(format!("cannot write output: {e}"));
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(io_err),
        None => io::stdout().write_all(text.as_bytes()).map_err(io_err),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        let mut text = serde_json::to_string_pretty(&out.value).expect("JSON values always serialize");
        text.push('\n');
        write_output(&cli, &text)?;
        Ok(out.warnings)
    });
    match result {
        Ok(warnings) if warnings.is_empty() => ExitCode::SUCCESS,
        Ok(warnings) => {
            for w in warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
