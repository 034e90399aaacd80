//! Command-line surface for `gcr-core`.
//!
//! Exit codes: 0 pass, 1 well-formed negative verdict, 2 usage error,
//! 3 inconclusive or resource limit.

mod commands;
pub mod report;
pub mod scenarios;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use gcr_core::Family;

pub use report::{exit, Basis, Outcome, Report};

#[derive(Debug, Parser)]
#[command(name = "gcr", version, about = "Complete reducibility bounds, inference and finite-field module checks")]
pub struct Cli {
    /// Emit a single JSON block instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// n(V), dimension, a(G), Coxeter number and the characteristic bounds.
    Bounds(BoundsArgs),
    /// Forward-chain a facts file and print every derivation.
    Infer(InferArgs),
    /// Irreducibility, semisimplicity or direct-summand test on a representation file.
    Meataxe(MeataxeArgs),
    /// Replay a named scenario and compare with expected values.
    Example(ExampleArgs),
    /// Saturated closure of a finite matrix group.
    Saturate(SaturateArgs),
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    /// Highest weight in fundamental-weight coordinates, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub weight: Vec<i64>,
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct InferArgs {
    #[arg(long)]
    pub facts: std::path::PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MeataxeTest {
    Irreducible,
    Semisimple,
    Summand,
}

#[derive(Debug, Args)]
pub struct MeataxeArgs {
    #[arg(long)]
    pub rep: std::path::PathBuf,
    #[arg(long, value_enum)]
    pub test: MeataxeTest,
    /// Rows spanning the candidate summand (for `--test summand`).
    #[arg(long)]
    pub sub: Option<std::path::PathBuf>,
    /// Test trace-zero matrices inside the conjugation module (for `--test summand`).
    #[arg(long)]
    pub adjoint: bool,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random algebra elements tried per irreducibility search.
    #[arg(long, default_value_t = 64)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    #[arg(long)]
    pub name: String,
}

#[derive(Debug, Args)]
pub struct SaturateArgs {
    #[arg(long)]
    pub rep: std::path::PathBuf,
    #[arg(long, default_value_t = 100_000)]
    pub cap: usize,
}

/// Parses and runs one invocation without touching the process state.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            return Outcome {
                code,
                text: e.render().to_string(),
                report: None,
            };
        }
    };
    match &cli.command {
        Command::Bounds(a) => commands::bounds(a),
        Command::Infer(a) => commands::infer(a),
        Command::Meataxe(a) => commands::meataxe(a),
        Command::Example(a) => commands::example(a),
        Command::Saturate(a) => commands::saturate(a),
    }
    .render(cli.json)
}

impl Outcome {
    fn render(mut self, json: bool) -> Self {
        if json {
            if let Some(r) = &self.report {
                self.text = r.to_json() + "\n";
            }
        }
        self
    }
}
