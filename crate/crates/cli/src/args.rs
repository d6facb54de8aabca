use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Serialize, Debug)]
#[command(name = "lcdag", version, about = "LCD codes from AG codes over GF(2^m)")]
pub struct Cli {
    /// Worker threads for parallel searches and scans.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// GV and TV rate profile on a δ grid.
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = lcdag_core::bounds::DEFAULT_GRID)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// δ-intervals where LCD AG codes beat the GV bound.
    Crossover {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = lcdag_core::bounds::DEFAULT_PRECISION)]
        precision: f64,
        #[arg(long, default_value_t = lcdag_core::bounds::DEFAULT_GRID)]
        grid: usize,
    },
    /// One-point AG codes.
    #[command(subcommand)]
    Ag(AgCommand),
    /// Inspect code files.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Search for a scaling vector a with a * C LCD.
    Lcdify {
        codefile: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Required for random mode.
        #[arg(long, required_if_eq("mode", "random"))]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1 << 24)]
        max_iters: u64,
    },
    /// Audits of the counting argument.
    #[command(subcommand)]
    Audit(AuditCommand),
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum AgCommand {
    /// Hermitian code over GF(r²) on all r³ affine places.
    Hermitian {
        #[command(flatten)]
        params: HermitianParams,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reed–Solomon code over GF(q) at the first n field elements.
    Rs {
        #[command(flatten)]
        params: RsParams,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parameters, designed bounds and (within budget) exact distances.
    #[command(subcommand)]
    Info(AgFamily),
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum AgFamily {
    Hermitian(HermitianParams),
    Rs(RsParams),
}

#[derive(Args, Serialize, Debug, Clone, Copy)]
pub struct HermitianParams {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub m: usize,
}

#[derive(Args, Serialize, Debug, Clone, Copy)]
pub struct RsParams {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum CodeCommand {
    /// Dimensions, hull and distances of a code file.
    Info {
        codefile: PathBuf,
        /// Codeword budget for exact distances.
        #[arg(long, default_value_t = lcdag_core::code::DEFAULT_DISTANCE_BUDGET)]
        budget: u128,
    },
    /// Writes the dual code.
    Dual {
        codefile: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "snake_case")]
pub enum AuditCommand {
    /// Per-index-set support counts against their bounds.
    Counting {
        codefile: PathBuf,
        /// Exact rational, e.g. 1/8 or 0.125.
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = lcdag_core::lcd::DEFAULT_SUBSET_BUDGET)]
        budget: u64,
    },
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Random,
}
