use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pauliwalk_core::momentum::DEGENERACY_TOLERANCE;

#[derive(Debug, Parser)]
#[command(name = "walk", version, about = "Two-state discrete-time quantum walks on Bravais lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve a walk and write its position distribution.
    Run(RunArgs),
    /// Run the verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Compare two distribution CSV files.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeChoice {
    Line,
    Square,
    Cubic,
    Triangular,
    Kagome,
    GroverSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value = "square")]
    pub lattice: LatticeChoice,
    #[arg(long, allow_negative_numbers = true)]
    pub steps: i64,
    /// Coin angle, `AXIS=RAD` for one axis or bare `RAD` for all. Accepts `pi/4`-style values.
    #[arg(long = "theta", value_name = "[AXIS=]RAD", allow_hyphen_values = true)]
    pub thetas: Vec<String>,
    /// down, up, plus-i or delta-eta:<δ>:<η> [default: down]
    #[arg(long)]
    pub initial: Option<String>,
    /// Kagome site type at the origin: o, p or q.
    #[arg(long)]
    pub origin_type: Option<String>,
    /// Sub-step order, first acting first, e.g. `ZYX`.
    #[arg(long)]
    pub ordering: Option<String>,
    /// Output file; stdout when absent. A `<out>.manifest.json` is written next to CSV output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Also evaluate an independent oracle for the run where one exists.
    #[arg(long)]
    pub oracle_check: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Run only the named check; repeatable.
    #[arg(long = "check", value_name = "NAME")]
    pub checks: Vec<String>,
    /// Select the engine-versus-oracle checks.
    #[arg(long)]
    pub oracle_check: bool,
    /// Select the momentum-space Hamiltonian checks.
    #[arg(long)]
    pub hamiltonian_check: bool,
    /// Guard band on |cos²θ·cos²k − 1| for the commutator report.
    #[arg(long, default_value_t = DEGENERACY_TOLERANCE)]
    pub degenerate_tolerance: f64,
    /// Also write the report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    pub a: PathBuf,
    pub b: PathBuf,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
}
