use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::characters::CycleType;
use crate::error::{Error, Result};
use crate::partitions::factorial;
use crate::simulate::perm::{all_permutations, class_representative, Permutation};
use crate::simulate::stats::ExactDistribution;

pub const COMMUTATOR_BOTH_MAX_N: usize = 6;
pub const COMMUTATOR_FIXED_MAX_N: usize = 7;
pub const UNIFORM_MAX_N: usize = 9;

fn counts_for(n: usize, fixed: impl Iterator<Item = usize>) -> Vec<BigUint> {
    let mut counts = vec![0u64; n + 1];
    for f in fixed {
        counts[f] += 1;
    }
    counts.into_iter().map(BigUint::from).collect()
}

/// Fixed points of `g^-1 x^-1 g x` over every `g` (and every `x` when `x`
/// is `None`).
pub fn enumerate_commutator_distribution(n: usize, x: Option<&CycleType>) -> Result<ExactDistribution> {
    match x {
        None => {
            if n > COMMUTATOR_BOTH_MAX_N {
                return Err(Error::TooLarge { what: "commutator enumeration", n, max: COMMUTATOR_BOTH_MAX_N });
            }
            let perms: Vec<Permutation> = all_permutations(n).collect();
            let fixed = perms.iter().flat_map(|g| perms.iter().map(move |x| Permutation::commutator(g, x).fixed_points()));
            Ok(ExactDistribution::from_counts(&counts_for(n, fixed)))
        }
        Some(x) => {
            if x.n() != n {
                return Err(Error::SizeMismatch { left: n, right: x.n() });
            }
            if n > COMMUTATOR_FIXED_MAX_N {
                return Err(Error::TooLarge { what: "fixed-x commutator enumeration", n, max: COMMUTATOR_FIXED_MAX_N });
            }
            let xp = class_representative(x);
            let fixed = all_permutations(n).map(|g| Permutation::commutator(&g, &xp).fixed_points());
            Ok(ExactDistribution::from_counts(&counts_for(n, fixed)))
        }
    }
}

/// Law of the cycle type of `g^-1 x^-1 g x` with both uniform.
pub fn enumerate_commutator_classes(n: usize) -> Result<BTreeMap<CycleType, BigRational>> {
    if n > COMMUTATOR_BOTH_MAX_N {
        return Err(Error::TooLarge { what: "commutator enumeration", n, max: COMMUTATOR_BOTH_MAX_N });
    }
    let perms: Vec<Permutation> = all_permutations(n).collect();
    let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
    for g in &perms {
        for x in &perms {
            *counts.entry(Permutation::commutator(g, x).cycle_type()).or_default() += 1;
        }
    }
    let total = BigInt::from(factorial(n)).pow(2);
    Ok(counts.into_iter().map(|(ty, c)| (ty, BigRational::new(BigInt::from(c), total.clone()))).collect())
}

/// Fixed points of a uniform permutation, by enumeration.
pub fn enumerate_fixed_point_distribution(n: usize) -> Result<ExactDistribution> {
    if n > UNIFORM_MAX_N {
        return Err(Error::TooLarge { what: "permutation enumeration", n, max: UNIFORM_MAX_N });
    }
    Ok(ExactDistribution::from_counts(&counts_for(n, all_permutations(n).map(|g| g.fixed_points()))))
}
