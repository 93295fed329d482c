//! Discrete power-law fitting: maximum-likelihood exponent, KS-minimizing
//! starting-point scan, and a semiparametric bootstrap p-value.
//!
//! The model is `p(x) = x^-alpha / zeta(alpha, xmin)` on integer
//! `x >= xmin`. The scan tries every observed abscissa as `xmin`, fits the
//! exponent by MLE and keeps the candidate whose tail has the smallest
//! Kolmogorov-Smirnov distance to the fitted model. Weights are treated as
//! fractional counts, so fits are invariant under uniform weight scaling.

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sample::{draw_power_law, unit};
use crate::table::FrequencyTable;
use crate::zeta::HurwitzZeta;

/// Exponent search interval; covers every empirically reported network
/// exponent with room to spare.
pub const ALPHA_SEARCH: (f64, f64) = (1.0 + 1e-6, 6.0);

/// Bracket width at which the golden-section search stops.
pub const ALPHA_TOLERANCE: f64 = 1e-6;

/// Smallest tail weight a candidate xmin must keep in [`scan_xmin`].
pub const DEFAULT_MIN_TAIL: f64 = 10.0;

/// A fitted discrete power law.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerLawFit {
    pub alpha: f64,
    pub xmin: i64,
    /// Supremum distance between empirical and model CDFs on `x >= xmin`.
    pub ks: f64,
    pub p_value: Option<f64>,
    /// Observations at or above `xmin` (rounded total tail weight).
    pub tail_count: u64,
}

/// Outcome of [`bootstrap_pvalue`]: the p-value plus how many replicates
/// could not be refitted and were counted toward neither side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bootstrap {
    pub p_value: f64,
    pub replicates: u32,
    pub skipped: u32,
}

/// Maximum-likelihood exponent of the tail `x >= xmin`.
///
/// Maximizes `L(alpha) = -W ln zeta(alpha, xmin) - alpha sum w_i ln x_i`
/// over [`ALPHA_SEARCH`] by golden-section search.
pub fn mle_alpha(table: &FrequencyTable, xmin: i64) -> Result<f64> {
    if xmin < 1 {
        return Err(Error::ZetaDomain);
    }
    let mut weight = 0.0;
    let mut weighted_ln = 0.0;
    for &(x, y) in table.entries() {
        if x >= xmin {
            weight += y;
            weighted_ln += y * (x as f64).ln();
        }
    }
    if weight <= 0.0 {
        return Err(Error::EmptyTail(xmin));
    }
    Ok(mle_from_sums(weight, weighted_ln, xmin as u64))
}

fn mle_from_sums(weight: f64, weighted_ln: f64, xmin: u64) -> f64 {
    golden_max(
        |alpha| {
            let z = HurwitzZeta::new(alpha).expect("alpha within search interval");
            let norm = z.at(xmin).expect("xmin >= 1");
            -weight * norm.ln() - alpha * weighted_ln
        },
        ALPHA_SEARCH.0,
        ALPHA_SEARCH.1,
        ALPHA_TOLERANCE,
    )
}

// Golden-section maximization of a unimodal function on [lo, hi].
fn golden_max(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

/// Kolmogorov-Smirnov distance between the empirical tail CDF and the
/// model CDF `1 - zeta(alpha, x+1)/zeta(alpha, xmin)`, both conditioned on
/// `x >= xmin` and evaluated at every observed tail abscissa.
pub fn ks_statistic(table: &FrequencyTable, alpha: f64, xmin: i64) -> Result<f64> {
    if xmin < 1 {
        return Err(Error::ZetaDomain);
    }
    let z = HurwitzZeta::new(alpha)?;
    let start = table
        .entries()
        .partition_point(|&(x, _)| x < xmin);
    if start == table.entries().len() {
        return Err(Error::EmptyTail(xmin));
    }
    ks_over_tail(table.entries(), start, xmin as u64, &z)
}

fn ks_over_tail(
    entries: &[(i64, f64)],
    start: usize,
    xmin: u64,
    z: &HurwitzZeta,
) -> Result<f64> {
    let tail = &entries[start..];
    let weight: f64 = tail.iter().map(|&(_, y)| y).sum();
    if weight <= 0.0 {
        return Err(Error::EmptyTail(xmin as i64));
    }
    let norm = z.at(xmin)?;
    let mut cum = 0.0;
    let mut sup = 0.0f64;
    for &(x, y) in tail {
        cum += y;
        let ecdf = cum / weight;
        let mcdf = 1.0 - z.at(x as u64 + 1)? / norm;
        sup = sup.max((ecdf - mcdf).abs());
    }
    Ok(sup)
}

/// Fits a power law by trying every observed abscissa as `xmin` and keeping
/// the candidate with minimal KS; ties break toward the smaller `xmin`.
/// Candidates must leave a tail weight of at least [`DEFAULT_MIN_TAIL`].
pub fn scan_xmin(table: &FrequencyTable) -> Result<PowerLawFit> {
    scan_xmin_with(table, DEFAULT_MIN_TAIL)
}

/// [`scan_xmin`] with an explicit minimum tail size.
pub fn scan_xmin_with(table: &FrequencyTable, min_tail: f64) -> Result<PowerLawFit> {
    let entries = table.entries();
    if entries.len() < 2 {
        return Err(Error::TooFewPoints(entries.len()));
    }
    let k = entries.len();
    // suffix sums, largest abscissa first, for O(1) per-candidate MLE input
    let mut suffix_w = vec![0.0; k + 1];
    let mut suffix_wlnx = vec![0.0; k + 1];
    for i in (0..k).rev() {
        let (x, y) = entries[i];
        suffix_w[i] = suffix_w[i + 1] + y;
        suffix_wlnx[i] = suffix_wlnx[i + 1] + if x >= 1 { y * (x as f64).ln() } else { 0.0 };
    }
    let mut best: Option<PowerLawFit> = None;
    for i in 0..k {
        let (x, _) = entries[i];
        if x < 1 {
            continue;
        }
        let weight = suffix_w[i];
        if weight <= 0.0 || weight < min_tail {
            continue;
        }
        let alpha = mle_from_sums(weight, suffix_wlnx[i], x as u64);
        let z = HurwitzZeta::new(alpha)?;
        let ks = ks_over_tail(entries, i, x as u64, &z)?;
        if best.as_ref().is_none_or(|b| ks < b.ks) {
            best = Some(PowerLawFit {
                alpha,
                xmin: x,
                ks,
                p_value: None,
                tail_count: weight.round() as u64,
            });
        }
    }
    best.ok_or(Error::TailTooSmall { min_tail })
}

/// Semiparametric bootstrap p-value for `fit` on `table`.
///
/// Each replicate redraws the full sample size, taking abscissas below
/// `fit.xmin` from the empirical head and the rest from the fitted law,
/// then refits with [`scan_xmin`]. The p-value is the fraction of
/// replicates whose refitted KS is at least the observed one. Replicates
/// get independent ChaCha streams derived from `(seed, index)`, so the
/// result does not depend on execution order and is reproducible.
pub fn bootstrap_pvalue(
    table: &FrequencyTable,
    fit: &PowerLawFit,
    replicates: u32,
    seed: u64,
) -> Result<Bootstrap> {
    bootstrap_pvalue_with(table, fit, replicates, seed, DEFAULT_MIN_TAIL)
}

/// [`bootstrap_pvalue`] with the minimum tail size used when refitting.
pub fn bootstrap_pvalue_with(
    table: &FrequencyTable,
    fit: &PowerLawFit,
    replicates: u32,
    seed: u64,
    min_tail: f64,
) -> Result<Bootstrap> {
    if replicates == 0 {
        return Err(Error::InvalidSpec("replicates must be at least 1".into()));
    }
    if !fit.alpha.is_finite() || fit.alpha <= 1.0 {
        return Err(Error::AlphaDomain(fit.alpha));
    }
    if fit.xmin < 1 {
        return Err(Error::ZetaDomain);
    }
    let entries = table.entries();
    let head: Vec<(i64, f64)> = entries
        .iter()
        .copied()
        .filter(|&(x, _)| x < fit.xmin)
        .collect();
    let mut head_cum = Vec::with_capacity(head.len());
    let mut head_weight = 0.0;
    for &(_, y) in &head {
        head_weight += y;
        head_cum.push(head_weight);
    }
    let total = table.total_weight();
    let draws = total.round().max(1.0) as u64;
    let p_head = head_weight / total;

    let replicate_ks: Vec<Option<f64>> = (0..replicates)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(r as u64 + 1);
            let mut obs = Vec::with_capacity(draws as usize);
            for _ in 0..draws {
                if unit(&mut rng) < p_head {
                    let t = unit(&mut rng) * head_weight;
                    let idx = head_cum.partition_point(|&c| c <= t).min(head.len() - 1);
                    obs.push(head[idx].0);
                } else {
                    obs.push(draw_power_law(&mut rng, fit.alpha, fit.xmin));
                }
            }
            let replica = FrequencyTable::tally(&obs, None).ok()?;
            scan_xmin_with(&replica, min_tail).ok().map(|f| f.ks)
        })
        .collect();

    let skipped = replicate_ks.iter().filter(|k| k.is_none()).count() as u32;
    let used = replicates - skipped;
    if used == 0 {
        return Err(Error::BootstrapDegenerate);
    }
    let exceed = replicate_ks
        .iter()
        .flatten()
        .filter(|&&ks| ks >= fit.ks)
        .count();
    Ok(Bootstrap {
        p_value: exceed as f64 / used as f64,
        replicates,
        skipped,
    })
}
