//! Frequency tables over distinct integer abscissas and their size-rank series.

use crate::error::{Error, Result};

/// Frequency data `(x_i, y_i)` with distinct integer abscissas `x_i >= s`
/// and nonnegative real weights, sorted by abscissa.
///
/// The starting offset `s` anchors the first bin of any binning applied to
/// the table; it defaults to the minimum observed abscissa.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyTable {
    entries: Vec<(i64, f64)>,
    offset: i64,
}

impl FrequencyTable {
    /// Counts duplicate observations into a sorted table.
    ///
    /// `s` becomes `offset` if given (which must not exceed the smallest
    /// observation) and the smallest observation otherwise.
    pub fn tally(observations: &[i64], offset: Option<i64>) -> Result<Self> {
        if observations.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut sorted = observations.to_vec();
        sorted.sort_unstable();
        let min = sorted[0];
        if let Some(s) = offset {
            if s > min {
                return Err(Error::OffsetViolation {
                    offset: s,
                    abscissa: min,
                });
            }
        }
        let mut entries: Vec<(i64, f64)> = Vec::new();
        for &x in &sorted {
            match entries.last_mut() {
                Some((last, count)) if *last == x => *count += 1.0,
                _ => entries.push((x, 1.0)),
            }
        }
        Ok(FrequencyTable {
            entries,
            offset: offset.unwrap_or(min),
        })
    }

    /// Builds a table from explicit `(abscissa, weight)` pairs.
    ///
    /// Pairs may arrive in any order; duplicate abscissas, negative weights,
    /// all-zero weight and offset violations are rejected.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, f64)>, offset: Option<i64>) -> Result<Self> {
        let mut entries: Vec<(i64, f64)> = pairs.into_iter().collect();
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        entries.sort_by_key(|&(x, _)| x);
        let mut any_positive = false;
        for i in 0..entries.len() {
            let (x, y) = entries[i];
            if i > 0 && entries[i - 1].0 == x {
                return Err(Error::DuplicateAbscissa(x));
            }
            if !(y >= 0.0) || !y.is_finite() {
                return Err(Error::NegativeWeight {
                    abscissa: x,
                    weight: y,
                });
            }
            any_positive |= y > 0.0;
        }
        if !any_positive {
            return Err(Error::EmptyInput);
        }
        let min = entries[0].0;
        if let Some(s) = offset {
            if s > min {
                return Err(Error::OffsetViolation {
                    offset: s,
                    abscissa: min,
                });
            }
        }
        Ok(FrequencyTable {
            entries,
            offset: offset.unwrap_or(min),
        })
    }

    /// Entries sorted by abscissa.
    pub fn entries(&self) -> &[(i64, f64)] {
        &self.entries
    }

    /// The starting offset `s`.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn min_abscissa(&self) -> i64 {
        self.entries[0].0
    }

    pub fn max_abscissa(&self) -> i64 {
        self.entries[self.entries.len() - 1].0
    }

    /// Total weight, summed largest abscissa first — the same fixed order
    /// as [`size_rank`], so the first tail sum equals this bit-for-bit.
    pub fn total_weight(&self) -> f64 {
        self.entries.iter().rev().map(|&(_, y)| y).sum()
    }
}

/// The tail-sum series of a table: for each observed abscissa `x`, the sum
/// of the weights of all data points with abscissa `>= x`.
///
/// This is the numerosity analog of the complementary cumulative
/// distribution function; it is monotone non-increasing and starts at the
/// table's total weight.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeRankSeries {
    points: Vec<(i64, f64)>,
}

impl SizeRankSeries {
    pub fn points(&self) -> &[(i64, f64)] {
        &self.points
    }
}

/// Computes the size-rank series of `table` in one reverse cumulative pass.
///
/// Summation runs from the largest abscissa down so that floating-point
/// results are reproducible; output is restricted to observed abscissas.
pub fn size_rank(table: &FrequencyTable) -> SizeRankSeries {
    let mut points: Vec<(i64, f64)> = Vec::with_capacity(table.entries().len());
    let mut tail = 0.0;
    for &(x, y) in table.entries().iter().rev() {
        tail += y;
        points.push((x, tail));
    }
    points.reverse();
    SizeRankSeries { points }
}
