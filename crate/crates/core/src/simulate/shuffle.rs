use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::Rng;

use crate::multiplicity::multiplicity;
use crate::partitions::{all_partitions, Partition};
use crate::scalar::ratio_to_f64;
use crate::simulate::perm::Permutation;
use crate::simulate::rsk::rsk_shape;
use crate::simulate::run_histogram;

/// Deck after `r` top-to-random shuffles of `0..n`: each removes the top
/// card and reinserts it at one of the `n` positions uniformly.
pub fn top_to_random<R: Rng + ?Sized>(n: usize, r: usize, rng: &mut R) -> Permutation {
    let mut deck: Vec<u32> = (0..n as u32).collect();
    for _ in 0..r {
        if n == 0 {
            break;
        }
        let pos = rng.gen_range(0..n);
        let top = deck.remove(0);
        deck.insert(pos, top);
    }
    Permutation::from_images_unchecked(deck)
}

/// `P(shape = lambda) = m_{lambda,r} d_lambda / n^r`, reverse lexicographic order.
pub fn exact_shape_probabilities(n: usize, r: usize) -> Vec<(Partition, BigRational)> {
    let total = BigInt::from(BigUint::from(n).pow(r as u32));
    all_partitions(n)
        .map(|lambda| {
            let weight = multiplicity(&lambda, r) * lambda.dim();
            let p = BigRational::new(BigInt::from(weight), total.clone());
            (lambda, p)
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct ShapeRow {
    pub shape: Partition,
    pub exact: BigRational,
    pub observed: u64,
    pub expected: f64,
    /// `(observed - N p) / sqrt(N p (1 - p))`; infinite if `p = 0` and observed.
    pub z: f64,
}

#[derive(Debug, Clone)]
pub struct TopToRandomReport {
    pub n: usize,
    pub r: usize,
    pub samples: u64,
    pub seed: u64,
    pub rows: Vec<ShapeRow>,
    pub chi_square: f64,
    /// Shapes with positive probability, minus one.
    pub degrees_of_freedom: usize,
}

impl TopToRandomReport {
    pub fn max_abs_z(&self) -> f64 {
        self.rows.iter().map(|row| row.z.abs()).fold(0.0, f64::max)
    }
}

/// Simulated RSK shape frequencies after `r` shuffles against the exact law.
pub fn top_to_random_shape_check(n: usize, r: usize, samples: u64, seed: u64) -> TopToRandomReport {
    let exact = exact_shape_probabilities(n, r);
    let index: std::collections::HashMap<Partition, usize> =
        exact.iter().enumerate().map(|(j, (shape, _))| (shape.clone(), j)).collect();
    let counts = run_histogram(exact.len(), samples, seed, || (), |rng, _| index[&rsk_shape(&top_to_random(n, r, rng))]);
    let big_n = samples as f64;
    let mut chi_square = 0.0;
    let mut support = 0usize;
    let rows = exact
        .into_iter()
        .zip(counts)
        .map(|((shape, p), observed)| {
            let pf = ratio_to_f64(&p);
            let expected = big_n * pf;
            let var = expected * (1.0 - pf);
            let diff = observed as f64 - expected;
            let z = if var > 0.0 {
                diff / var.sqrt()
            } else if diff == 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
            if expected > 0.0 {
                support += 1;
                chi_square += diff * diff / expected;
            } else if observed > 0 {
                chi_square = f64::INFINITY;
            }
            ShapeRow { shape, exact: p, observed, expected, z }
        })
        .collect();
    TopToRandomReport { n, r, samples, seed, rows, chi_square, degrees_of_freedom: support.saturating_sub(1) }
}
