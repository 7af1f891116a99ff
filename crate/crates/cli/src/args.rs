use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use l2alex_core::vna::Route;

#[derive(Debug, Parser)]
#[command(name = "l2alex", version, about = "L2-Alexander invariants of knots: numerics, symbolic algebra and detection")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the invariant at the given values of t.
    Compute(ComputeArgs),
    /// Identify a knot from an invariant summary.
    Detect(DetectArgs),
    /// Check the cable family against sums with trefoils.
    Audit(AuditArgs),
    /// Show catalog entries.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; all cores when absent.
    #[arg(long, env = "L2ALEX_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Knot: `catalog:NAME`, `braid:WORD`, inline JSON, `@FILE`, or a catalog name.
    #[arg(long)]
    pub knot: String,
    /// Sample points, comma separated.
    #[arg(long = "t", value_delimiter = ',', default_value = "1")]
    pub t: Vec<f64>,
    /// Regularization parameters, comma separated; one row per value.
    #[arg(long, value_delimiter = ',', default_value = "1e-3")]
    pub eps: Vec<f64>,
    /// Series terms.
    #[arg(long, default_value_t = 16)]
    pub terms: usize,
    /// Pruning threshold on coefficient magnitudes.
    #[arg(long, default_value_t = 1e-12)]
    pub prune: f64,
    /// Cap on the support of a series power, per matrix row.
    #[arg(long, default_value_t = 4_000_000)]
    pub max_support: usize,
    /// `auto`, `direct`, `below` or `above`.
    #[arg(long, default_value = "auto")]
    pub route: Route,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    /// Summary JSON, inline or `@FILE`.
    #[arg(long, conflicts_with = "knot", required_unless_present = "knot")]
    pub summary: Option<String>,
    /// Knot whose summary is derived symbolically.
    #[arg(long)]
    pub knot: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Largest family index; rows run over `0..=n`.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// A single entry; all built-in entries when absent.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}
