use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dcpo_core::witness::WitnessName;
use dcpo_core::Caps;

use crate::caps::caps_from_env;
use crate::error::ToolError;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(name = "dcpo", version, about = "Finite dcpo and Scott topology workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    All,
    Space,
    Domain,
    Kappa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportWhat {
    Poset,
    Csigma,
    Irr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
}

fn parse_witness(s: &str) -> Result<WitnessName, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = WitnessName::ALL.iter().map(|w| w.as_str()).collect();
        format!("unknown witness `{s}`; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a poset file and check the finite claims on it.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Write one `.poset` file per isomorphism class of the given size.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Check that C_σ determines P over all classes of size 1..=max-size.
    Scan {
        #[arg(long)]
        max_size: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Run the bounded checks for a witness dcpo.
    Witness {
        #[arg(value_parser = parse_witness)]
        name: WitnessName,
        #[arg(long)]
        bound: usize,
        /// Seed for the extra Kou samples.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random Kou elements added to the window.
        #[arg(long, default_value_t = 0)]
        extra_samples: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Export a Hasse diagram of the poset, its C_σ lattice or its Irr poset.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: ExportWhat,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A parsed command with the caps it runs under.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub caps: Caps,
}

impl RunConfig {
    pub fn new(command: Command, caps: Caps) -> Self {
        RunConfig { command, caps }
    }

    /// Caps come from `DCPO_CAPS`, falling back to the defaults.
    pub fn from_cli(cli: Cli) -> Result<Self, ToolError> {
        Ok(RunConfig::new(cli.command, caps_from_env()?))
    }
}
