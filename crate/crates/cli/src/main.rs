//! `calogero`: spectra, eigenfunctions, verification sweeps and spin content
//! of the rational Calogero–Moser model from the command line.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use calogero::coeff::parse_rational;
use calogero::coxeter::RootSystem;
use calogero::verify::CheckKind;
use calogero::{ExactRational, ModelVariant, MultiIndex};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "calogero", version, about = "Exact spectra and eigenfunctions of the rational Calogero-Moser model")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Energy levels with degeneracies and quantum numbers.
    Spectrum(SpectrumArgs),
    /// One explicit eigenfunction, re-verified before it is printed.
    Eigenfunction(EigenArgs),
    /// Sweeps the exact identities over a grid of n, g and levels.
    Verify(VerifyArgs),
    /// SU(s) content of the bosonic spin model.
    Spin(SpinArgs),
    /// Roots, multiplicities and invariant degrees of a root system.
    Roots(RootsArgs),
}

fn rational(s: &str) -> Result<ExactRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn variant(s: &str) -> Result<ModelVariant, String> {
    s.parse().map_err(|e: calogero::Error| e.to_string())
}

fn root_system(s: &str) -> Result<RootSystem, String> {
    s.parse().map_err(|e: calogero::Error| e.to_string())
}

fn multi_index(s: &str) -> Result<MultiIndex, String> {
    s.parse().map_err(|e: calogero::Error| e.to_string())
}

fn check(s: &str) -> Result<CheckKind, String> {
    s.parse().map_err(|e: calogero::Error| e.to_string())
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, value_parser = rational, default_value = "1")]
    pub g: ExactRational,
    #[arg(long, value_parser = rational, default_value = "1")]
    pub omega: ExactRational,
    #[arg(long, value_parser = variant, default_value = "angular")]
    pub variant: ModelVariant,
    #[arg(long, default_value_t = 4)]
    pub max_level: u64,
    /// Coxeter system such as B2 or I2(5); angular levels only.
    #[arg(long, value_parser = root_system)]
    pub root_system: Option<RootSystem>,
}

#[derive(Args, Debug)]
pub struct EigenArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, value_parser = rational, default_value = "1")]
    pub g: ExactRational,
    #[arg(long, value_parser = rational, default_value = "1")]
    pub omega: ExactRational,
    #[arg(long, value_parser = variant, default_value = "angular")]
    pub variant: ModelVariant,
    /// Quantum numbers, e.g. 2,0,0; in invariant-degree order with --root-system.
    #[arg(long, value_parser = multi_index)]
    pub k: MultiIndex,
    #[arg(long, value_parser = root_system)]
    pub root_system: Option<RootSystem>,
    /// Cache directory.
    #[arg(long, env = "CALOGERO_CACHE_DIR")]
    pub cache: Option<PathBuf>,
    /// Skip re-verification of cached results.
    #[arg(long)]
    pub trust_cache: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4])]
    pub n: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_parser = rational, default_values = ["0", "1/2", "1", "2"])]
    pub g: Vec<ExactRational>,
    /// Highest level checked.
    #[arg(long, visible_alias = "max-level", default_value_t = 6)]
    pub m: u64,
    /// Subset of checks; all by default.
    #[arg(long, value_delimiter = ',', value_parser = check)]
    pub checks: Vec<CheckKind>,
    /// Root systems for the coxeter check.
    #[arg(long, value_delimiter = ',', value_parser = root_system)]
    pub root_system: Vec<RootSystem>,
    /// Largest SU(s) for the spin check.
    #[arg(long, default_value_t = 4)]
    pub s: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include per-cell wall-clock times.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Args, Debug)]
pub struct SpinArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub s: u32,
    #[arg(long, value_parser = variant, default_value = "angular")]
    pub variant: ModelVariant,
    /// A single level; otherwise every level up to --max-level.
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, default_value_t = 4)]
    pub max_level: u64,
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    #[arg(long, value_parser = root_system)]
    pub root_system: RootSystem,
    /// One coupling per orbit, or a single value for all.
    #[arg(long, value_delimiter = ',', value_parser = rational, default_values = ["1"])]
    pub g: Vec<ExactRational>,
}

/// Usage errors exit with 2, failed verification with 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Verification(String),
}

impl From<calogero::Error> for CliError {
    fn from(e: calogero::Error) -> Self {
        use calogero::Error::*;
        match e {
            ConstraintViolation { .. }
            | InvalidArgument(_)
            | Parse(_)
            | UnsupportedCoupling(_)
            | Unsupported(_)
            | VariableCountMismatch { .. }
            | IndexOutOfRange { .. } => CliError::Usage(e.to_string()),
            other => CliError::Verification(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectrum(a) => commands::spectrum(a, cli.format),
        Command::Eigenfunction(a) => commands::eigenfunction(a, cli.format),
        Command::Verify(a) => commands::verify(a, cli.format),
        Command::Spin(a) => commands::spin(a, cli.format),
        Command::Roots(a) => commands::roots(a, cli.format),
    };
    match result {
        Ok((out, verified)) => {
            print!("{out}");
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
