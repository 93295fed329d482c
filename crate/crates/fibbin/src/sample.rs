//! Seeded generators for the synthetic heavy-tail samples used throughout:
//! a discrete power law and a discrete (geometric) exponential.
//!
//! Determinism contract: identical specs produce identical output on every
//! platform and release. The generator is ChaCha8 seeded through
//! `seed_from_u64`, and uniform deviates are built directly from its 64-bit
//! stream, so no third-party distribution code can shift the values.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

// Draws beyond this are rejected and redrawn, truncating the law at a
// range no realistic abscissa reaches (P < 1e-24 at alpha = 2.5).
const MAX_DRAW: f64 = 4.0e18;

/// Which law to sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleKind {
    /// `p(x) ∝ x^-alpha` for integer `x >= xmin`.
    PowerLaw { alpha: f64, xmin: i64 },
    /// `p(x) ∝ exp(-x/mean)` for integer `x >= xmin` (a geometric law).
    Exponential { mean: f64, xmin: i64 },
}

/// A fully pinned sampling request: law, sample size and RNG seed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSpec {
    pub kind: SampleKind,
    pub count: u64,
    pub seed: u64,
}

impl SampleSpec {
    fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidSpec("count must be at least 1".into()));
        }
        match self.kind {
            SampleKind::PowerLaw { alpha, xmin } => {
                if !alpha.is_finite() || alpha <= 1.0 {
                    return Err(Error::InvalidSpec(format!(
                        "power-law alpha must be > 1, got {alpha}"
                    )));
                }
                if xmin < 1 {
                    return Err(Error::InvalidSpec(format!(
                        "power-law xmin must be >= 1, got {xmin}"
                    )));
                }
            }
            SampleKind::Exponential { mean, xmin } => {
                if !mean.is_finite() || mean <= 0.0 {
                    return Err(Error::InvalidSpec(format!(
                        "exponential mean must be > 0, got {mean}"
                    )));
                }
                if xmin < 0 {
                    return Err(Error::InvalidSpec(format!(
                        "exponential xmin must be >= 0, got {xmin}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Draws `spec.count` integers `>= xmin` from the requested law.
pub fn sample(spec: &SampleSpec) -> Result<Vec<i64>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.count as usize;
    let mut out = Vec::with_capacity(n);
    match spec.kind {
        SampleKind::PowerLaw { alpha, xmin } => {
            for _ in 0..n {
                out.push(draw_power_law(&mut rng, alpha, xmin));
            }
        }
        SampleKind::Exponential { mean, xmin } => {
            for _ in 0..n {
                out.push(draw_exponential(&mut rng, mean, xmin));
            }
        }
    }
    Ok(out)
}

/// Uniform deviate in [0, 1) with 53 random bits.
#[inline]
pub(crate) fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

// Inverse-CDF draw from the continuous Pareto on [xmin - 1/2, inf),
// rounded to the nearest integer, then thinned by rejection against the
// exact discrete mass. Because the integral of y^-alpha over
// [x - 1/2, x + 1/2) dominates the midpoint value x^-alpha (convexity),
// the acceptance ratio
//   (alpha - 1) x^-alpha / ((x - 1/2)^(1-alpha) - (x + 1/2)^(1-alpha))
// never exceeds 1, and accepted integers follow p(x) ∝ x^-alpha exactly.
pub(crate) fn draw_power_law(rng: &mut ChaCha8Rng, alpha: f64, xmin: i64) -> i64 {
    let c = xmin as f64 - 0.5;
    let pareto_exp = -1.0 / (alpha - 1.0);
    loop {
        let u = unit(rng);
        let y = c * (1.0 - u).powf(pareto_exp);
        let x = (y + 0.5).floor();
        if x > MAX_DRAW {
            continue;
        }
        let gap = (x - 0.5).powf(1.0 - alpha) - (x + 0.5).powf(1.0 - alpha);
        let accept = (alpha - 1.0) * x.powf(-alpha) / gap;
        if unit(rng) < accept {
            return x as i64;
        }
    }
}

// Geometric law by inverse CDF: xmin + floor(Exp(1/mean)).
fn draw_exponential(rng: &mut ChaCha8Rng, mean: f64, xmin: i64) -> i64 {
    loop {
        let u = unit(rng);
        let g = (-mean * (1.0 - u).ln()).floor();
        if g <= MAX_DRAW {
            return xmin + g as i64;
        }
    }
}
