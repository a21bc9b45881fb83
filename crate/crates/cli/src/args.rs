use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crwb_core::hypersurface::Suite;

#[derive(Debug, Parser)]
#[command(name = "crwb", version, about = "Exact computations on CR algebras and the model hypersurface")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build family members and report dimensions, grades and validity.
    Family(FamilyArgs),
    /// Compute the Freeman sequence and the nondegeneracy verdict.
    Freeman(FreemanArgs),
    /// Compute the Levi form of a given order.
    Levi(LeviArgs),
    /// Verify the vector-field identities on the model hypersurface.
    VerifyModel(VerifyArgs),
    /// Print the JSON document of a family member.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for independent k values.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Record wall-clock time per run (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Family parameters, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(i64).range(1..))]
    pub k: Vec<i64>,
    /// A CR-algebra JSON document.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, required = true, value_delimiter = ',', value_parser = clap::value_parser!(i64).range(1..))]
    pub k: Vec<i64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct FreemanArgs {
    #[command(flatten)]
    pub source: Source,
    /// Cap on Freeman steps (overrides CRWB_MAX_STEPS; default 64).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_steps: Option<u32>,
    /// Fail with exit code 1 unless the verdict is this order.
    #[arg(long)]
    pub expect_order: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct LeviArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_steps: Option<u32>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required = true, value_delimiter = ',', value_parser = clap::value_parser!(i64).range(1..))]
    pub k: Vec<i64>,
    /// Subset of abelian, cpx, ascdes, sl2, su2, irrep, iso (default: all).
    #[arg(long, value_delimiter = ',', value_parser = parse_suite)]
    pub suites: Vec<Suite>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub k: i64,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: crwb_core::Error| e.to_string())
}
