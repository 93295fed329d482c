//! Fibonacci and power-of-b binning of frequency tables.
//!
//! Bins are half-open integer intervals laid out contiguously from the
//! table's starting offset `s`. Fibonacci binning sizes the intervals like
//! the Fibonacci numbers `F_0, F_1, F_2, …` (with `F_0 = F_1 = 1`), so the
//! interval `[l_j, r_j)` is `[s + F_{j+1} - 1, s + F_{j+2} - 1)` and, when
//! `s = 1`, the interval extremes are exactly consecutive Fibonacci numbers.
//! The first two bins have width 1 and therefore reproduce the first two
//! data points unchanged.

use crate::error::{Error, Result};
use crate::fib::FibonacciIter;
use crate::table::FrequencyTable;

/// One half-open binning interval `[left, right)` of width `F_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinInterval {
    pub index: u32,
    pub left: i64,
    pub right: i64,
}

impl BinInterval {
    pub fn width(&self) -> u64 {
        (self.right - self.left) as u64
    }

    pub fn contains(&self, x: i64) -> bool {
        self.left <= x && x < self.right
    }
}

/// Which binning produced a [`BinnedSeries`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BinScheme {
    Fibonacci,
    PowerOfB { base: f64 },
}

/// One binned point: the bin center and the average weight per abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinnedPoint {
    pub center: f64,
    pub mean: f64,
}

/// The binned sequence `(p_k, m_k)`: centers are strictly increasing and
/// empty bins are kept with mean 0 (dropping them is a plotting concern).
#[derive(Debug, Clone, PartialEq)]
pub struct BinnedSeries {
    points: Vec<BinnedPoint>,
    source_offset: i64,
    scheme: BinScheme,
}

impl BinnedSeries {
    pub fn points(&self) -> &[BinnedPoint] {
        &self.points
    }

    pub fn source_offset(&self) -> i64 {
        self.source_offset
    }

    pub fn scheme(&self) -> BinScheme {
        self.scheme
    }
}

/// Builds the maximal prefix of the Fibonacci interval sequence starting at
/// `s` whose intervals all have `left <= x_max`.
///
/// The returned intervals are contiguous (`l_{j+1} = r_j`, `l_0 = s`), have
/// widths `F_0, F_1, F_2, …`, and their union covers `[s, x_max]`; the last
/// interval may extend past `x_max`.
pub fn bin_intervals(s: i64, x_max: i64) -> Result<Vec<BinInterval>> {
    if x_max < s {
        return Err(Error::InvalidRange { s, x_max });
    }
    let mut intervals = Vec::new();
    let mut left = s;
    let mut widths = FibonacciIter::new();
    loop {
        let index = widths.next_index();
        let width = widths.next().ok_or(Error::FibonacciOverflow(index))?;
        let width_i = i64::try_from(width).map_err(|_| Error::EdgeOverflow(left))?;
        let right = left.checked_add(width_i).ok_or(Error::EdgeOverflow(left))?;
        intervals.push(BinInterval { index, left, right });
        if right > x_max {
            break;
        }
        left = right;
    }
    Ok(intervals)
}

/// Applies Fibonacci binning to `table`, producing one point per interval
/// of [`bin_intervals`]`(table.offset(), table.max_abscissa())`.
///
/// The center is `l_k + (F_k - 1)/2` (half-integers allowed) and the mean
/// is the weight sum over `[l_k, r_k)` divided by the full width `F_k`;
/// abscissas absent from the table contribute zero.
pub fn fibonacci_bin(table: &FrequencyTable) -> Result<BinnedSeries> {
    let intervals = bin_intervals(table.offset(), table.max_abscissa())?;
    let mut points = Vec::with_capacity(intervals.len());
    let mut entries = table.entries().iter().peekable();
    for iv in &intervals {
        let mut sum = 0.0;
        while let Some(&&(x, y)) = entries.peek() {
            if x >= iv.right {
                break;
            }
            debug_assert!(x >= iv.left);
            sum += y;
            entries.next();
        }
        let width = iv.width();
        points.push(BinnedPoint {
            center: iv.left as f64 + (width - 1) as f64 / 2.0,
            mean: sum / width as f64,
        });
    }
    Ok(BinnedSeries {
        points,
        source_offset: table.offset(),
        scheme: BinScheme::Fibonacci,
    })
}

/// Applies power-of-`base` binning to `table`.
///
/// Integer edges are `e_0 = s`, `e_{j+1} = s + round(base^{j+1}) - 1`,
/// deduplicated so that edges are strictly increasing; the edge list is
/// extended until it covers `[s, max abscissa]`. Centers and means follow
/// the same midpoint-of-integer-points and sum-over-full-width conventions
/// as [`fibonacci_bin`].
pub fn power_of_b_bin(table: &FrequencyTable, base: f64) -> Result<BinnedSeries> {
    let edges = power_edges(table.offset(), table.max_abscissa(), base)?;
    let mut points = Vec::with_capacity(edges.len() - 1);
    let mut entries = table.entries().iter().peekable();
    for pair in edges.windows(2) {
        let (left, right) = (pair[0], pair[1]);
        let mut sum = 0.0;
        while let Some(&&(x, y)) = entries.peek() {
            if x >= right {
                break;
            }
            sum += y;
            entries.next();
        }
        let width = (right - left) as f64;
        points.push(BinnedPoint {
            center: (left as f64 + (right - 1) as f64) / 2.0,
            mean: sum / width,
        });
    }
    Ok(BinnedSeries {
        points,
        source_offset: table.offset(),
        scheme: BinScheme::PowerOfB { base },
    })
}

/// Strictly increasing edge list `s = e_0 < e_1 < …` with
/// `e_j = s + round(base^j) - 1` after deduplication, extended until the
/// last edge exceeds `x_max`.
///
/// Rather than stepping the exponent one at a time (arbitrarily slow for
/// bases just above 1), this jumps straight to the next exponent whose
/// rounded power is a new integer.
pub fn power_edges(s: i64, x_max: i64, base: f64) -> Result<Vec<i64>> {
    if !base.is_finite() || base <= 1.0 {
        return Err(Error::InvalidBase(base));
    }
    if x_max < s {
        return Err(Error::InvalidRange { s, x_max });
    }
    let ln_base = base.ln();
    let mut edges = vec![s];
    let mut m = 1.0f64; // round(base^j) for the last accepted edge
    while *edges.last().unwrap() <= x_max {
        // smallest integer exponent k with round(base^k) > m
        let mut k = ((m + 0.5).ln() / ln_base).ceil().max(1.0);
        let mut next = base.powf(k).round();
        while next <= m {
            k += 1.0;
            next = base.powf(k).round();
        }
        if next > (i64::MAX / 2) as f64 {
            return Err(Error::EdgeOverflow(*edges.last().unwrap()));
        }
        m = next;
        let edge = s
            .checked_add(next as i64 - 1)
            .ok_or(Error::EdgeOverflow(*edges.last().unwrap()))?;
        edges.push(edge);
    }
    Ok(edges)
}
