//! Distributions of fixed-point counts and their distance to Poisson laws.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::ratio_to_f64;

/// A probability law on `{0, .., n}` known exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactDistribution {
    probabilities: Vec<BigRational>,
}

impl ExactDistribution {
    pub fn new(probabilities: Vec<BigRational>) -> Self {
        ExactDistribution { probabilities }
    }

    /// From integer counts over a finite population.
    pub fn from_counts(counts: &[BigUint]) -> Self {
        let total: BigUint = counts.iter().sum();
        let total = BigInt::from(total);
        let probabilities =
            counts.iter().map(|c| BigRational::new(BigInt::from(c.clone()), total.clone())).collect();
        ExactDistribution { probabilities }
    }

    pub fn point_mass(at: usize) -> Self {
        let mut probabilities = vec![BigRational::zero(); at + 1];
        probabilities[at] = BigRational::one();
        ExactDistribution { probabilities }
    }

    pub fn probabilities(&self) -> &[BigRational] {
        &self.probabilities
    }

    pub fn probability(&self, j: usize) -> BigRational {
        self.probabilities.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total(&self) -> BigRational {
        self.probabilities.iter().sum()
    }

    /// `E[X^r]`.
    pub fn moment(&self, r: usize) -> BigRational {
        self.probabilities
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(j, p)| p * BigRational::from_integer(BigInt::from(j).pow(r as u32)))
            .sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.probabilities.iter().map(ratio_to_f64).collect()
    }
}

/// Histogram of fixed-point counts from a seeded simulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalDistribution {
    pub counts: Vec<u64>,
    pub samples: u64,
    pub seed: u64,
    pub model: String,
}

impl EmpiricalDistribution {
    pub fn new(n: usize, seed: u64, model: impl Into<String>) -> Self {
        EmpiricalDistribution { counts: vec![0; n + 1], samples: 0, seed, model: model.into() }
    }

    pub fn record(&mut self, fixed_points: usize) {
        self.counts[fixed_points] += 1;
        self.samples += 1;
    }

    /// Adds another histogram of the same size; order does not matter.
    pub fn merge(&mut self, other: &EmpiricalDistribution) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.samples += other.samples;
    }

    pub fn frequencies(&self) -> Vec<f64> {
        let s = self.samples.max(1) as f64;
        self.counts.iter().map(|&c| c as f64 / s).collect()
    }

    /// Sample mean of `X^r`.
    pub fn moment(&self, r: usize) -> f64 {
        let s = self.samples.max(1) as f64;
        self.counts.iter().enumerate().map(|(j, &c)| c as f64 * (j as f64).powi(r as i32)).sum::<f64>() / s
    }

    /// Standard error of the sample mean of `X^r`: `sqrt(Var(X^r) / samples)`.
    pub fn moment_std_error(&self, r: usize) -> f64 {
        let m1 = self.moment(r);
        let m2 = self.moment(2 * r);
        ((m2 - m1 * m1).max(0.0) / self.samples.max(1) as f64).sqrt()
    }
}

/// Anything that can be read as a probability vector on `{0, 1, ..}`.
pub trait FixedPointLaw {
    fn probability_vector(&self) -> Vec<f64>;
}

impl FixedPointLaw for ExactDistribution {
    fn probability_vector(&self) -> Vec<f64> {
        self.to_f64()
    }
}

impl FixedPointLaw for EmpiricalDistribution {
    fn probability_vector(&self) -> Vec<f64> {
        self.frequencies()
    }
}

impl FixedPointLaw for [f64] {
    fn probability_vector(&self) -> Vec<f64> {
        self.to_vec()
    }
}

/// Poisson probabilities `P(X = 0..=max)`.
pub fn poisson_pmf(mean: f64, max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(max + 1);
    let mut p = (-mean).exp();
    for j in 0..=max {
        out.push(p);
        p *= mean / (j + 1) as f64;
    }
    out
}

/// Total variation distance to `Poisson(mean)`. The Poisson mass beyond
/// the support of `dist` counts in full.
pub fn tv_to_poisson<D: FixedPointLaw + ?Sized>(dist: &D, mean: f64) -> f64 {
    tv_to_scaled_poisson(dist, 1, mean)
}

/// Total variation distance to the law of `scale * Y`, `Y ~ Poisson(mean)`.
pub fn tv_to_scaled_poisson<D: FixedPointLaw + ?Sized>(dist: &D, scale: usize, mean: f64) -> f64 {
    let probs = dist.probability_vector();
    if probs.is_empty() || scale == 0 {
        return 1.0;
    }
    let max = probs.len() - 1;
    let pmf = poisson_pmf(mean, max / scale);
    let mut target = vec![0.0; probs.len()];
    for (j, q) in pmf.iter().enumerate() {
        target[j * scale] = *q;
    }
    let tail = (1.0 - pmf.iter().sum::<f64>()).max(0.0);
    let body: f64 = probs.iter().zip(&target).map(|(p, q)| (p - q).abs()).sum();
    (0.5 * (body + tail)).min(1.0)
}
