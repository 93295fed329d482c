//! Fibonacci numbers under the convention `F_0 = F_1 = 1`.

use crate::error::{Error, Result};

/// Returns the `j`-th Fibonacci number with `F_0 = F_1 = 1`.
///
/// Fails with [`Error::FibonacciOverflow`] once the value no longer fits
/// `u64` (first at `j = 93`); callers treat that as "binning cannot extend
/// further", not as a crash.
pub fn fibonacci(j: u32) -> Result<u64> {
    let mut iter = FibonacciIter::new();
    iter.nth(j as usize).ok_or(Error::FibonacciOverflow(j))
}

/// Iterator over `F_0, F_1, F_2, …` that stops just before `u64` overflow.
#[derive(Debug, Clone)]
pub struct FibonacciIter {
    prev: u64,
    curr: u64,
    emitted: u32,
}

impl FibonacciIter {
    pub fn new() -> Self {
        // seeded so the first two sums produce F_0 = F_1 = 1
        FibonacciIter {
            prev: 1,
            curr: 0,
            emitted: 0,
        }
    }

    /// Index of the next value this iterator would yield.
    pub fn next_index(&self) -> u32 {
        self.emitted
    }
}

impl Default for FibonacciIter {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for FibonacciIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let value = self.prev.checked_add(self.curr)?;
        self.prev = self.curr;
        self.curr = value;
        self.emitted += 1;
        Some(value)
    }
}
