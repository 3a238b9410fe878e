use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "wed", version, about = "Weighted efficient domination on chordal graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a catalog graph in edge-list format, or list the names.
    Catalog { name: Option<String> },
    /// Class membership checks.
    Check(CheckArgs),
    /// Maximum weight independent set of a chordal graph.
    Mwis { file: PathBuf },
    /// Minimum weight efficient dominating set.
    Eds(EdsArgs),
    /// Instance generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run an engine comparison campaign described by a spec file.
    Campaign {
        spec: PathBuf,
        /// Write the CSV here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub chordal: bool,
    /// Comma-separated catalog names that must not occur as induced subgraphs.
    #[arg(long, value_delimiter = ',')]
    pub free: Vec<String>,
    #[arg(long)]
    pub square_chordal: bool,
    pub file: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Auto,
    Brute,
    Square,
    S123,
}

#[derive(Debug, Args)]
pub struct EdsArgs {
    #[arg(long, value_enum, default_value_t = EngineChoice::Auto)]
    pub engine: EngineChoice,
    /// Sidecar file of `w VERTEX VALUE` lines; overrides weights in FILE.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
    pub file: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Reduction graph of an X3C instance file.
    X3c {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random interval graph.
    Interval {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0.05)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random chordal graph.
    Chordal {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random chordal graph free of the listed catalog graphs.
    Hfree {
        #[arg(short)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        free: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        tries: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}
