//! Stirling numbers of the second kind, Bell numbers and Poisson moments.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partitions::product_range;
use crate::scalar::Scalar;

pub const DEFAULT_R_MAX: usize = 12;

/// Triangular table `S(r, a)` for `0 <= a <= r <= r_max`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(r_max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(r_max + 1);
        rows.push(vec![BigUint::one()]);
        for r in 1..=r_max {
            let prev = &rows[r - 1];
            let mut row = vec![BigUint::zero(); r + 1];
            for (a, slot) in row.iter_mut().enumerate().skip(1) {
                let stay = prev.get(a).map(|s| s * a).unwrap_or_default();
                *slot = stay + &prev[a - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn r_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(r, a)`, zero for `a > r`. Panics past `r_max`.
    pub fn get(&self, r: usize, a: usize) -> BigUint {
        self.rows[r].get(a).cloned().unwrap_or_default()
    }

    /// `S(r, 0..=r)`.
    pub fn row(&self, r: usize) -> &[BigUint] {
        &self.rows[r]
    }

    pub fn bell(&self, r: usize) -> BigUint {
        self.rows[r].iter().sum()
    }
}

fn default_table() -> &'static StirlingTable {
    static TABLE: OnceLock<StirlingTable> = OnceLock::new();
    TABLE.get_or_init(|| StirlingTable::new(DEFAULT_R_MAX))
}

/// Row `r` of the Stirling triangle, from the shared table when it fits.
pub fn stirling_row(r: usize) -> Vec<BigUint> {
    if r <= DEFAULT_R_MAX {
        default_table().row(r).to_vec()
    } else {
        StirlingTable::new(r).row(r).to_vec()
    }
}

pub fn stirling(r: usize, a: usize) -> BigUint {
    if a > r {
        return BigUint::zero();
    }
    stirling_row(r).swap_remove(a)
}

pub fn bell(r: usize) -> BigUint {
    stirling_row(r).into_iter().sum()
}

/// `E[X^r]` for `X ~ Poisson(mean)`: `sum_a S(r, a) mean^a`.
pub fn poisson_moment<T: Scalar>(r: usize, mean: &T) -> T {
    let mut acc = T::zero();
    let mut power = T::one();
    for s in stirling_row(r) {
        if !s.is_zero() {
            acc = acc + T::from_biguint(&s) * power.clone();
        }
        power = power * mean.clone();
    }
    acc
}

/// Probability that `r` balls dropped uniformly into `n` cells occupy
/// exactly `a` cells: `n!/(n-a)! * S(r, a) / n^r`.
pub fn occupancy_probability(a: usize, r: usize, n: usize) -> BigRational {
    if a > r || a > n || n == 0 {
        return BigRational::zero();
    }
    let falling = product_range(n - a + 1, n);
    let num = falling * stirling(r, a);
    let den = BigUint::from(n).pow(r as u32);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
