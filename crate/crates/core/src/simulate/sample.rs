use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::simulate::perm::Permutation;
use crate::simulate::run_histogram;
use crate::simulate::stats::EmpiricalDistribution;

/// Uniform permutation by Fisher-Yates.
pub fn sample_uniform<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_images_unchecked(images)
}

/// `g^-1 x^-1 g x` with `g` uniform, and `x` uniform too when not given.
pub fn sample_commutator<R: Rng + ?Sized>(n: usize, x: Option<&Permutation>, rng: &mut R) -> Permutation {
    let g = sample_uniform(n, rng);
    match x {
        Some(x) => Permutation::commutator(&g, x),
        None => {
            let x = sample_uniform(n, rng);
            Permutation::commutator(&g, &x)
        }
    }
}

/// Product of `i`-cycles kept in one-line form together with its inverse,
/// so that each left multiplication costs `O(i)`.
#[derive(Debug, Clone)]
pub struct IcycleWalker {
    images: Vec<u32>,
    inverse: Vec<u32>,
    pool: Vec<u32>,
    tuple: Vec<u32>,
    sources: Vec<u32>,
    i: usize,
}

impl IcycleWalker {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if i < 2 || i > n {
            return Err(Error::OutOfRange(format!("cycle length {i} outside 2..={n}")));
        }
        let id: Vec<u32> = (0..n as u32).collect();
        Ok(IcycleWalker { images: id.clone(), inverse: id.clone(), pool: id, tuple: vec![0; i], sources: vec![0; i], i })
    }

    pub fn reset(&mut self) {
        for (j, (a, b)) in self.images.iter_mut().zip(self.inverse.iter_mut()).enumerate() {
            *a = j as u32;
            *b = j as u32;
        }
    }

    /// Left-multiplies by a uniform `i`-cycle `p_1 -> p_2 -> .. -> p_i -> p_1`,
    /// where `(p_1, .., p_i)` is a uniform ordered tuple of distinct points.
    pub fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        let n = self.pool.len();
        for m in 0..self.i {
            let j = rng.gen_range(m..n);
            self.pool.swap(m, j);
            self.tuple[m] = self.pool[m];
        }
        // sources[m] = the point currently sent to p_m
        for m in 0..self.i {
            self.sources[m] = self.inverse[self.tuple[m] as usize];
        }
        for m in 0..self.i {
            let q = self.tuple[(m + 1) % self.i];
            let src = self.sources[m];
            self.images[src as usize] = q;
            self.inverse[q as usize] = src;
        }
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(j, &x)| j as u32 == x).count()
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_images_unchecked(self.images.clone())
    }
}

/// A uniform `i`-cycle on `n` points.
pub fn sample_icycle<R: Rng + ?Sized>(n: usize, i: usize, rng: &mut R) -> Result<Permutation> {
    sample_icycle_walk(n, i, 1, rng)
}

/// Product of `k` independent uniform `i`-cycles.
pub fn sample_icycle_walk<R: Rng + ?Sized>(n: usize, i: usize, k: u64, rng: &mut R) -> Result<Permutation> {
    let mut w = IcycleWalker::new(n, i)?;
    for _ in 0..k {
        w.step(rng);
    }
    Ok(w.permutation())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SamplerModel {
    Uniform,
    Commutator { x: Option<Permutation> },
    IcycleWalk { i: usize, k: u64 },
}

impl SamplerModel {
    pub fn describe(&self) -> String {
        match self {
            SamplerModel::Uniform => "uniform".into(),
            SamplerModel::Commutator { x: None } => "commutator(both random)".into(),
            SamplerModel::Commutator { x: Some(x) } => format!("commutator(x of type {})", x.cycle_type()),
            SamplerModel::IcycleWalk { i, k } => format!("icycle_walk(i={i}, k={k})"),
        }
    }
}

/// Fixed-point histogram of `samples` draws from `model` on `n` points.
pub fn simulate_fixed_points(n: usize, model: &SamplerModel, samples: u64, seed: u64) -> Result<EmpiricalDistribution> {
    let counts = match model {
        SamplerModel::Uniform => {
            run_histogram(n + 1, samples, seed, || (), |rng, _| sample_uniform(n, rng).fixed_points())
        }
        SamplerModel::Commutator { x } => {
            if let Some(x) = x {
                if x.len() != n {
                    return Err(Error::SizeMismatch { left: n, right: x.len() });
                }
            }
            run_histogram(n + 1, samples, seed, || (), |rng, _| sample_commutator(n, x.as_ref(), rng).fixed_points())
        }
        SamplerModel::IcycleWalk { i, k } => {
            let template = IcycleWalker::new(n, *i)?;
            run_histogram(
                n + 1,
                samples,
                seed,
                || template.clone(),
                |rng, w| {
                    w.reset();
                    for _ in 0..*k {
                        w.step(rng);
                    }
                    w.fixed_points()
                },
            )
        }
    };
    Ok(EmpiricalDistribution { counts, samples, seed, model: model.describe() })
}
