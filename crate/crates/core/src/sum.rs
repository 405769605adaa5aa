//! Compensated (Kahan-Babuska / Neumaier) summation.
//!
//! All reductions over the 2^n prefix tree go through [`NeumaierSum`] so that
//! per-level totals stay accurate to a few ulps even for tens of millions of
//! terms, and so that parallel partial sums can be merged without losing the
//! running correction.

use std::iter::Sum;
use std::ops::{Add, AddAssign};

#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct NeumaierSum {
    s: f64,
    c: f64,
}

impl NeumaierSum {
    pub const fn new() -> Self {
        Self { s: 0.0, c: 0.0 }
    }

    pub fn sum(&self) -> f64 {
        self.s + self.c
    }
}

impl From<f64> for NeumaierSum {
    fn from(value: f64) -> Self {
        Self { s: value, c: 0.0 }
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, rhs: f64) {
        let (s, c) = two_sum(self.s, rhs);
        self.s = s;
        self.c += c;
    }
}

impl Add<f64> for NeumaierSum {
    type Output = Self;

    fn add(mut self, rhs: f64) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for NeumaierSum {
    fn add_assign(&mut self, rhs: Self) {
        let (s, c) = two_sum(self.s, rhs.s);
        self.s = s;
        self.c += c + rhs.c;
    }
}

impl Add for NeumaierSum {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl Sum<f64> for NeumaierSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        iter.fold(Self::new(), |acc, x| acc + x)
    }
}

impl Sum for NeumaierSum {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::new(), |acc, x| acc + x)
    }
}

/// Convenience: compensated sum of an iterator of `f64`.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().sum::<NeumaierSum>().sum()
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let c = if a.abs() >= b.abs() {
        (a - s) + b
    } else {
        (b - s) + a
    };
    (s, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_large_terms() {
        let s = NeumaierSum::new() + 1e200 + 0.1 + 0.2 + 0.3 + (-1e200);
        assert!((s.sum() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn many_small_terms() {
        let naive: f64 = (0..1_000_000).map(|_| 0.1).sum();
        let comp = compensated_sum((0..1_000_000).map(|_| 0.1));
        assert!((comp - 100_000.0).abs() < 1e-9);
        assert!((naive - 100_000.0).abs() > (comp - 100_000.0).abs());
    }

    #[test]
    fn merging_partials_matches_single_pass() {
        let xs: Vec<f64> = (1..=10_000).map(|i| 1.0 / i as f64).collect();
        let whole = compensated_sum(xs.iter().copied());
        let merged: NeumaierSum = xs
            .chunks(37)
            .map(|c| c.iter().copied().sum::<NeumaierSum>())
            .sum();
        assert!((whole - merged.sum()).abs() < 1e-14);
    }
}
