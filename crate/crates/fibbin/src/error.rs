use thiserror::Error;

/// Errors produced by table construction, binning, sampling and fitting.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Fibonacci number or bin edge no longer fits the integer range.
    #[error("fibonacci number F_{0} exceeds the 64-bit unsigned range")]
    FibonacciOverflow(u32),
    /// Bin-edge arithmetic left the signed 64-bit abscissa range.
    #[error("bin edge past abscissa {0} overflows the 64-bit signed range")]
    EdgeOverflow(i64),
    #[error("invalid range: x_max {x_max} is below the starting offset {s}")]
    InvalidRange { s: i64, x_max: i64 },
    #[error("empty input: at least one observation with positive weight is required")]
    EmptyInput,
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(i64),
    #[error("negative weight {weight} at abscissa {abscissa}")]
    NegativeWeight { abscissa: i64, weight: f64 },
    #[error("offset {offset} exceeds the minimum abscissa {abscissa}")]
    OffsetViolation { offset: i64, abscissa: i64 },
    #[error("base must be a finite number greater than 1, got {0}")]
    InvalidBase(f64),
    #[error("invalid sample spec: {0}")]
    InvalidSpec(String),
    #[error("alpha must be greater than 1, got {0}")]
    AlphaDomain(f64),
    #[error("hurwitz zeta requires a positive starting abscissa")]
    ZetaDomain,
    #[error("no positive weight at or above xmin {0}")]
    EmptyTail(i64),
    #[error("power-law scan needs at least 2 distinct abscissas, found {0}")]
    TooFewPoints(usize),
    #[error("no candidate xmin keeps a tail of at least {min_tail} observations")]
    TailTooSmall { min_tail: f64 },
    #[error("every bootstrap replicate failed to refit")]
    BootstrapDegenerate,
}

pub type Result<T> = std::result::Result<T, Error>;
