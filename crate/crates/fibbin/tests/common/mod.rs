//! Brute-force oracles and deterministic table generators shared by the
//! integration and acceptance suites. Everything here recomputes results
//! from first principles, independent of the library's code paths.

#![allow(dead_code)]

use fibbin::FrequencyTable;

/// SplitMix64: tiny, seedable, platform-independent stream for test data.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Random sorted table with distinct abscissas in `[1, max_abscissa]`.
/// Integer-valued weights when `integer_weights`, otherwise uniform reals.
pub fn random_table(
    rng: &mut SplitMix64,
    max_entries: usize,
    max_abscissa: u64,
    integer_weights: bool,
) -> FrequencyTable {
    let len = 1 + rng.below(max_entries as u64) as usize;
    let mut xs: Vec<i64> = (0..len)
        .map(|_| 1 + rng.below(max_abscissa) as i64)
        .collect();
    xs.sort_unstable();
    xs.dedup();
    let pairs: Vec<(i64, f64)> = xs
        .into_iter()
        .map(|x| {
            let w = if integer_weights {
                rng.below(1000) as f64
            } else {
                rng.unit() * 1000.0
            };
            (x, w)
        })
        .collect();
    // guarantee at least one positive weight
    let mut pairs = pairs;
    if pairs.iter().all(|&(_, w)| w == 0.0) {
        pairs[0].1 = 1.0;
    }
    FrequencyTable::from_pairs(pairs, None).unwrap()
}

/// Fibonacci numbers by plain recurrence in 128-bit arithmetic.
pub fn fib_u128(j: u32) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 0..j {
        let c = a + b;
        a = b;
        b = c;
    }
    a
}

/// The interval sequence written out directly from the defining formula:
/// `[s + F_{j+1} - 1, s + F_{j+2} - 1)` while the left end stays within
/// the data range.
pub fn naive_intervals(s: i64, x_max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for j in 0.. {
        let left = s as i128 + fib_u128(j + 1) as i128 - 1;
        let right = s as i128 + fib_u128(j + 2) as i128 - 1;
        if left > x_max as i128 {
            break;
        }
        out.push((left as i64, right as i64));
    }
    out
}

/// Double-loop Fibonacci binning: for each interval, scan every entry.
pub fn naive_fibonacci_bin(table: &FrequencyTable) -> Vec<(f64, f64)> {
    naive_intervals(table.offset(), table.max_abscissa())
        .into_iter()
        .map(|(left, right)| {
            let mut sum = 0.0;
            for &(x, y) in table.entries() {
                if x >= left && x < right {
                    sum += y;
                }
            }
            let width = (right - left) as f64;
            (left as f64 + (width - 1.0) / 2.0, sum / width)
        })
        .collect()
}

/// Quadratic size-rank: re-sum the tail for every abscissa.
pub fn naive_size_rank(table: &FrequencyTable) -> Vec<(i64, f64)> {
    table
        .entries()
        .iter()
        .map(|&(x, _)| {
            let mut tail = 0.0;
            for &(x2, y2) in table.entries().iter().rev() {
                if x2 >= x {
                    tail += y2;
                }
            }
            (x, tail)
        })
        .collect()
}

/// KS distance recomputed point by point with fresh zeta evaluations and
/// per-abscissa re-summed empirical CDFs.
pub fn naive_ks(table: &FrequencyTable, alpha: f64, xmin: i64) -> f64 {
    let tail: Vec<(i64, f64)> = table
        .entries()
        .iter()
        .copied()
        .filter(|&(x, _)| x >= xmin)
        .collect();
    let weight: f64 = tail.iter().map(|&(_, y)| y).sum();
    let norm = fibbin::hurwitz_zeta(alpha, xmin as u64).unwrap();
    let mut sup = 0.0f64;
    for &(x, _) in &tail {
        let mut cum = 0.0;
        for &(x2, y2) in &tail {
            if x2 <= x {
                cum += y2;
            }
        }
        let ecdf = cum / weight;
        let mcdf = 1.0 - fibbin::hurwitz_zeta(alpha, x as u64 + 1).unwrap() / norm;
        sup = sup.max((ecdf - mcdf).abs());
    }
    sup
}
