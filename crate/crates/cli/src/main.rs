//! `ryser`: covers, matchings and certificates for r-partite hypergraphs.
//!
//! Exit codes: 0 success, 1 verification failure or exhausted budget,
//! 2 usage or parse error.

mod commands;
mod input;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::{Format, GeneratorArgs};

#[derive(Debug, Parser)]
#[command(name = "ryser", version, about = "Exact covers and matchings of r-partite intersecting hypergraphs")]
struct Cli {
    /// line-oriented `key = value` output
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Tau,
    Nu,
    Taustar,
    Nustar,
    Taus,
    Greedy,
    Biased,
    Avoiding,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one quantity of a hypergraph with its witness
    Solve {
        quantity: Quantity,
        /// `.rhg` table file or `.dig` digit file
        #[arg(required_unless_present = "construct", conflicts_with = "construct")]
        input: Option<PathBuf>,
        /// build the input instead: NAME [PARAM]
        #[arg(long, num_args = 1..=2, value_names = ["NAME", "PARAM"])]
        construct: Option<Vec<String>>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// side count of digit input (defaults to the first token's length)
        #[arg(long = "digits")]
        digit_r: Option<usize>,
        /// 1-based side for biased and avoiding (defaults to the last side)
        #[arg(long)]
        side: Option<usize>,
        #[command(flatten)]
        gen: GeneratorArgs,
    },
    /// Print a construction in table format
    Construct {
        name: String,
        param: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        gen: GeneratorArgs,
    },
    /// Run a certificate suite
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(ryser_core::certificates::Suite::NAMES))]
        suite: String,
    },
    /// Degree-threshold lower bound on f(r)
    Bound { r: usize },
    /// Exhaustive search for an intersecting r-partite hypergraph with m edges and tau >= t
    Search {
        r: usize,
        m: usize,
        t: usize,
        /// explore extensions in descending order
        #[arg(long)]
        reverse: bool,
        #[arg(long)]
        max_candidates: Option<u64>,
        /// list every isomorphism class reaching tau >= t
        #[arg(long)]
        achievers: bool,
        /// allow r >= 5, which has no runtime guarantee
        #[arg(long)]
        long_running: bool,
    },
    /// Empirical probes
    Experiment {
        #[command(subcommand)]
        which: Experiment,
    },
}

#[derive(Debug, Subcommand)]
enum Experiment {
    /// Fraction of random m-line subsets of tpp(r-1) with tau >= r-1
    RandomTpp {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Bad arguments detected after clap parsing; exits with code 2.
#[derive(Debug)]
pub struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use ryser_core::Error as E;
    if err.downcast_ref::<UsageError>().is_some() || err.downcast_ref::<std::io::Error>().is_some() {
        return 2;
    }
    match err.downcast_ref::<E>() {
        Some(E::Parse { .. } | E::Domain(_) | E::OutOfBounds(_) | E::Unsupported(_)) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let out = output::Printer { machine: cli.machine };
    let budget = commands::budget_from_env()?;
    match cli.command {
        Command::Solve {
            quantity,
            input,
            construct,
            format,
            digit_r,
            side,
            gen,
        } => {
            let h = match (input, construct) {
                (Some(path), _) => input::load_file(&path, format, digit_r)?,
                (None, Some(c)) => input::build(&c[0], c.get(1).map(String::as_str), &gen)?,
                (None, None) => return Err(usage("no input")),
            };
            commands::solve(out, &h, quantity, side, budget)
        }
        Command::Construct { name, param, format, gen } => {
            let h = input::build(&name, param.as_deref(), &gen)?;
            print!("{}", h.serialize(format)?);
            Ok(Status::Ok)
        }
        Command::Verify { suite } => commands::verify(out, suite.parse()?),
        Command::Bound { r } => commands::bound(out, r),
        Command::Search {
            r,
            m,
            t,
            reverse,
            max_candidates,
            achievers,
            long_running,
        } => commands::search(
            out,
            commands::SearchArgs {
                r,
                m,
                t,
                reverse,
                max_candidates,
                achievers,
                long_running,
            },
        ),
        Command::Experiment {
            which: Experiment::RandomTpp { r, m, trials, seed },
        } => commands::random_tpp(out, r, m, trials, seed, budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
