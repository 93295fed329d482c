//! Analysis toolkit for discrete heavy-tailed frequency data.
//!
//! The crate turns integer-abscissa frequency tables into the three views
//! that make tail behavior legible, and backs them with a statistical test:
//!
//! - [`binning`]: Fibonacci binning (bin widths `1, 1, 2, 3, 5, 8, …`, so
//!   consecutive bins grow by roughly the golden ratio and the first two
//!   bins reproduce raw data points) and the coarser power-of-b binnings.
//! - [`table`]: frequency tables from raw observations or `(x, y)` pairs,
//!   and size-rank (tail-sum) series, the discrete analog of the
//!   complementary cumulative distribution function.
//! - [`sample`]: seeded, platform-independent generators for discrete
//!   power-law and exponential samples.
//! - [`fit`]: discrete power-law fitting via maximum likelihood, a
//!   KS-minimizing starting-point scan, and a semiparametric bootstrap
//!   p-value.
//!
//! All operations are pure functions over immutable inputs; results with
//! pinned seeds are byte-identical across runs and platforms.

pub mod binning;
pub mod error;
pub mod fib;
pub mod fit;
pub mod sample;
pub mod table;
pub mod zeta;

pub use binning::{
    bin_intervals, fibonacci_bin, power_edges, power_of_b_bin, BinInterval, BinScheme,
    BinnedPoint, BinnedSeries,
};
pub use error::{Error, Result};
pub use fib::fibonacci;
pub use fit::{
    bootstrap_pvalue, bootstrap_pvalue_with, ks_statistic, mle_alpha, scan_xmin, scan_xmin_with,
    Bootstrap, PowerLawFit, DEFAULT_MIN_TAIL,
};
pub use sample::{sample, SampleKind, SampleSpec};
pub use table::{size_rank, FrequencyTable, SizeRankSeries};
pub use zeta::{hurwitz_zeta, HurwitzZeta};
