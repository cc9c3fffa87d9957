//! Seeded Monte Carlo samplers and exhaustive small-`n` enumerators.
//!
//! Randomness comes from ChaCha8. A run of `samples` draws is cut into
//! chunks of [`CHUNK_SIZE`]; chunk `j` uses the generator seeded with the
//! master seed and switched to stream `j`. Chunks run on the rayon pool and
//! their integer histograms are summed, so results depend on the seed and
//! parameters only, never on the thread count.

pub mod enumerate;
pub mod perm;
pub mod rsk;
pub mod sample;
pub mod shuffle;
pub mod stats;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use enumerate::{enumerate_commutator_classes, enumerate_commutator_distribution, enumerate_fixed_point_distribution};
pub use perm::Permutation;
pub use rsk::{longest_increasing_subsequence, rsk_shape};
pub use sample::{sample_commutator, sample_icycle, sample_icycle_walk, sample_uniform, simulate_fixed_points, SamplerModel};
pub use shuffle::{exact_shape_probabilities, top_to_random, top_to_random_shape_check, TopToRandomReport};
pub use stats::{poisson_pmf, tv_to_poisson, tv_to_scaled_poisson, EmpiricalDistribution, ExactDistribution};

/// Draws per RNG stream.
pub const CHUNK_SIZE: u64 = 1 << 16;

/// Generator for stream `stream` of the master `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Runs `samples` draws and counts outcomes in `bins` buckets. `make`
/// builds per-chunk scratch state; `step` draws once and returns a bucket.
pub fn run_histogram<W, M, S>(bins: usize, samples: u64, seed: u64, make: M, step: S) -> Vec<u64>
where
    M: Fn() -> W + Sync,
    S: Fn(&mut ChaCha8Rng, &mut W) -> usize + Sync,
{
    let chunks = samples.div_ceil(CHUNK_SIZE);
    (0..chunks)
        .into_par_iter()
        .map(|j| {
            let mut rng = stream_rng(seed, j);
            let mut scratch = make();
            let mut counts = vec![0u64; bins];
            let len = CHUNK_SIZE.min(samples - j * CHUNK_SIZE);
            for _ in 0..len {
                counts[step(&mut rng, &mut scratch)] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; bins],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}
