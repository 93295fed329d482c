//! Argument surface. All subcommands stream stdin to stdout unless an
//! input path or `--output` is given.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "fibbin",
    version,
    about = "Fibonacci binning, size-rank series, heavy-tail samplers and discrete power-law fits",
    after_help = "Input is whitespace-separated `x y` pairs, or single-column raw \
observations with --raw; `#`-prefixed lines are ignored. Exit codes: 0 ok, \
1 usage, 2 input, 3 numeric/domain."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Bin a frequency table and emit TSV (center, mean) points
    Bin(BinArgs),
    /// Emit the TSV size-rank series (x, sum of weights at or above x)
    Sizerank(SizerankArgs),
    /// Draw a seeded synthetic sample, one observation per line
    Sample(SampleArgs),
    /// Fit a discrete power law (MLE exponent, KS-minimizing xmin)
    Fit(FitArgs),
    /// Emit a gnuplot script composing dot, binned, size-rank and model layers
    Plot(PlotArgs),
}

#[derive(Args)]
pub struct BinArgs {
    /// Input file; stdin when omitted
    pub input: Option<String>,
    /// Treat input as raw observations and tally them first
    #[arg(long)]
    pub raw: bool,
    /// Starting offset s (at most the minimum abscissa; defaults to it)
    #[arg(long)]
    pub offset: Option<i64>,
    /// Use power-of-B binning instead of Fibonacci binning
    #[arg(long)]
    pub base: Option<f64>,
    /// Omit bins with mean 0
    #[arg(long)]
    pub drop_empty: bool,
    /// Prepend a `#` header line
    #[arg(long)]
    pub header: bool,
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Args)]
pub struct SizerankArgs {
    /// Input file; stdin when omitted
    pub input: Option<String>,
    /// Treat input as raw observations and tally them first
    #[arg(long)]
    pub raw: bool,
    /// Divide tail sums by the total weight
    #[arg(long)]
    pub normalize: bool,
    /// Prepend a `#` header line
    #[arg(long)]
    pub header: bool,
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Law {
    Powerlaw,
    Exponential,
}

#[derive(Args)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub law: Law,
    /// Exponent of the power law (requires --law powerlaw)
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Mean of the exponential law (requires --law exponential)
    #[arg(long)]
    pub mean: Option<f64>,
    /// Smallest value in the support
    #[arg(long)]
    pub xmin: i64,
    /// Number of observations
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Args)]
pub struct FitArgs {
    /// Input file; stdin when omitted
    pub input: Option<String>,
    /// Treat input as raw observations and tally them first
    #[arg(long)]
    pub raw: bool,
    /// Smallest tail size a candidate xmin must keep
    #[arg(long, default_value_t = fibbin::DEFAULT_MIN_TAIL)]
    pub min_tail: f64,
    /// Also compute a semiparametric bootstrap p-value
    #[arg(long)]
    pub pvalue: bool,
    /// Bootstrap replicates
    #[arg(long, default_value_t = 100)]
    pub replicates: u32,
    /// Bootstrap seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Args)]
pub struct PlotArgs {
    /// Raw frequency layer drawn as dots: PATH[=LABEL]
    #[arg(long = "dots", value_name = "PATH[=LABEL]")]
    pub dots: Vec<String>,
    /// Binned layer drawn as a connected polyline: PATH[=LABEL]
    #[arg(long = "binned", value_name = "PATH[=LABEL]")]
    pub binned: Vec<String>,
    /// Size-rank layer drawn as dots: PATH[=LABEL]
    #[arg(long = "sizerank", value_name = "PATH[=LABEL]")]
    pub sizerank: Vec<String>,
    /// Model curve drawn as a line: PATH[=LABEL]
    #[arg(long = "model", value_name = "PATH[=LABEL]")]
    pub model: Vec<String>,
    /// Linear x axis (log by default)
    #[arg(long)]
    pub linear_x: bool,
    /// Linear y axis (log by default)
    #[arg(long)]
    pub linear_y: bool,
    /// Script path; the rendered figure name is derived from it
    #[arg(long)]
    pub output: Option<String>,
}
