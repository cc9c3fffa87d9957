//! Exact and Monte Carlo tools for the number of fixed points of
//! non-uniform random permutations: random commutators `g^-1 x^-1 g x`
//! and products of random `i`-cycles.
//!
//! The moment engines are generic over [`Scalar`]; the aliases below fix
//! the instantiations used throughout the crate and the CLI.

pub mod characters;
pub mod error;
pub mod hifloat;
pub mod moments;
pub mod multiplicity;
pub mod partitions;
pub mod scalar;
pub mod setpartitions;
pub mod simulate;
pub mod tableaux;

pub use characters::{character, char_nearrow, char_ratio_icycle, CharacterValue, CycleType, NearRow};
pub use error::{Error, Result};
pub use hifloat::HighFloat;
pub use moments::{
    moment_commutator_fixed, moment_commutator_fixed_closed, moment_commutator_random, moment_icycle_walk,
    walk_cutoff_comparison, walk_exact_distribution, walk_step_count, MomentReport,
};
pub use multiplicity::{mult_ding, mult_oracle, mult_skew, mult_updown, multiplicity, Algorithm};
pub use partitions::{all_partitions, partitions_with_large_first_row, Partition};
pub use scalar::{RealScalar, Scalar};
pub use setpartitions::{bell, occupancy_probability, poisson_moment, stirling};
pub use simulate::{rsk_shape, tv_to_poisson, EmpiricalDistribution, ExactDistribution, Permutation};
pub use tableaux::{skew_syt_count, SkewShape};

/// Exact non-negative integer (dimensions, tableau counts, Stirling numbers).
pub type BigCount = num_bigint::BigUint;

/// Exact rational scalar.
pub type Exact = num_rational::BigRational;

/// Default high-precision real: 128-bit mantissa.
pub type Real = HighFloat<128>;

pub type ExactMomentReport = moments::MomentReport<Exact>;
pub type RealMomentReport = moments::MomentReport<Real>;
