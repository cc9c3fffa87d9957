//! Exact moments of the number of fixed points for random commutators and
//! for products of random `i`-cycles, with their Poisson reference values.
//!
//! Every sum runs over `lambda_1 >= n - r` only; outside that range the
//! multiplicity `m_{lambda, r}` vanishes.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::{char_ratio_icycle, character, CycleType};
use crate::error::{Error, Result};
use crate::multiplicity::multiplicity;
use crate::partitions::{all_partitions, factorial, partitions_with_large_first_row, Partition};
use crate::scalar::{RealScalar, Scalar};
use crate::setpartitions::poisson_moment;
use crate::simulate::stats::ExactDistribution;

/// Largest `n` accepted by [`walk_exact_distribution`].
pub const WALK_EXACT_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    CommutatorBothRandom,
    CommutatorFixedX,
    IcycleWalk,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::CommutatorBothRandom => "commutator_both_random",
            Model::CommutatorFixedX => "commutator_fixed_x",
            Model::IcycleWalk => "icycle_walk",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which formula produced a moment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `sum m / d`.
    DimensionSum,
    /// `sum m chi(x)^2 / d`.
    CharacterSum,
    /// `1 + (n_1 - 1)^2 / (n - 1)`.
    ClosedFormMean,
    /// The two-row / two-column expansion of the second moment.
    ClosedFormSecond,
    /// `sum d ratio^k m`.
    WalkCharacterSum,
}

impl Formula {
    pub fn tag(self) -> &'static str {
        match self {
            Formula::DimensionSum => "dimension_sum",
            Formula::CharacterSum => "character_sum",
            Formula::ClosedFormMean => "closed_form_mean",
            Formula::ClosedFormSecond => "closed_form_second",
            Formula::WalkCharacterSum => "walk_character_sum",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub n: usize,
    pub x: Option<CycleType>,
    pub i: Option<usize>,
    pub k: Option<u64>,
    pub c: Option<f64>,
}

/// Limit law the moments are compared against: `scale * Poisson(mean)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Reference<T> {
    pub scale: u64,
    pub mean: T,
    pub label: String,
}

impl<T: Scalar> Reference<T> {
    pub fn poisson(mean: T) -> Self {
        let label = format!("Poisson({})", mean.render());
        Reference { scale: 1, mean, label }
    }

    pub fn moment(&self, r: usize) -> T {
        let scale = T::from_u64(self.scale).powi(r as u32);
        scale * poisson_moment(r, &self.mean)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentReport<T> {
    pub model: Model,
    pub params: ModelParams,
    /// Entry `r - 1` holds the `r`-th moment.
    pub moments: Vec<T>,
    pub reference: Reference<T>,
    pub reference_moments: Vec<T>,
    pub formula_used: Vec<Formula>,
}

impl<T: Scalar> MomentReport<T> {
    pub fn r_max(&self) -> usize {
        self.moments.len()
    }

    pub fn moment(&self, r: usize) -> Option<&T> {
        r.checked_sub(1).and_then(|j| self.moments.get(j))
    }

    /// `moment - reference`, per `r`.
    pub fn differences(&self) -> Vec<T> {
        self.moments.iter().zip(&self.reference_moments).map(|(a, b)| a.clone() - b.clone()).collect()
    }
}

fn ratio(num: BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den.clone()))
}

/// `E[fix(g^-1 x^-1 g x)^r]` with `g`, `x` independent and uniform.
pub fn moment_commutator_random(n: usize, r: usize) -> BigRational {
    partitions_with_large_first_row(n, r)
        .map(|lambda| ratio(multiplicity(&lambda, r), &lambda.dim()))
        .sum()
}

/// `E[fix(g^-1 x^-1 g x)^r]` with `x` fixed in class `x` and `g` uniform.
pub fn moment_commutator_fixed(n: usize, x: &CycleType, r: usize) -> Result<BigRational> {
    if x.n() != n {
        return Err(Error::SizeMismatch { left: n, right: x.n() });
    }
    let mut acc = BigRational::zero();
    for lambda in partitions_with_large_first_row(n, r) {
        let chi = character(&lambda, x)?;
        if chi.0.is_zero() {
            continue;
        }
        let m = multiplicity(&lambda, r);
        acc += BigRational::new(BigInt::from(m * chi.squared()), BigInt::from(lambda.dim()));
    }
    Ok(acc)
}

fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// Closed forms for the mean (`r = 1`, `n >= 2`) and the second moment
/// (`r = 2`, `n >= 4`) of the fixed-x commutator.
pub fn moment_commutator_fixed_closed(n: usize, x: &CycleType, r: usize) -> Result<BigRational> {
    if x.n() != n {
        return Err(Error::SizeMismatch { left: n, right: x.n() });
    }
    let q = |num: i64, den: i64| BigRational::new(num.into(), den.into());
    let n1 = x.n1() as i64;
    let n2 = x.n2() as i64;
    let ni = n as i64;
    match r {
        1 if n >= 2 => Ok(q(1, 1) + q((n1 - 1) * (n1 - 1), ni - 1)),
        2 if n >= 4 => {
            let c = choose2(n1 - 1);
            let two_row = c + n2 - 1;
            let two_col = c - n2;
            Ok(q(2, 1)
                + q(3 * (n1 - 1) * (n1 - 1), ni - 1)
                + q(2 * two_row * two_row, ni * (ni - 3))
                + q(2 * two_col * two_col, (ni - 1) * (ni - 2)))
        }
        1 | 2 => Err(Error::OutOfRange(format!("closed form for r = {r} needs larger n, got {n}"))),
        _ => Err(Error::OutOfRange(format!("no closed form for r = {r}"))),
    }
}

fn check_walk(n: usize, i: usize) -> Result<()> {
    if i < 2 || i > n {
        return Err(Error::OutOfRange(format!("cycle length {i} outside 2..={n}")));
    }
    Ok(())
}

/// `E[fix^r]` after multiplying `k` uniform `i`-cycles, starting at the identity.
///
/// Each term is `d * ratio^k * m`, with `ratio^k` from [`Scalar::pow_ratio`].
pub fn moment_icycle_walk<T: Scalar>(n: usize, i: usize, k: u64, r: usize) -> Result<T> {
    check_walk(n, i)?;
    let mut acc = T::zero();
    for lambda in partitions_with_large_first_row(n, r) {
        let m = multiplicity(&lambda, r);
        if m.is_zero() {
            continue;
        }
        let rho = char_ratio_icycle(&lambda, i)?;
        let weight = T::from_biguint(&(lambda.dim() * m));
        acc = acc + weight * T::pow_ratio(&rho, k);
    }
    Ok(acc)
}

/// `round_ties_even(n ln n / i + c n)`.
pub fn walk_step_count(n: usize, i: usize, c: f64) -> Result<u64> {
    if i == 0 {
        return Err(Error::OutOfRange("cycle length 0".into()));
    }
    let nf = n as f64;
    let ln = if n == 0 { 0.0 } else { nf.ln() };
    let k = (nf * ln / i as f64 + c * nf).round_ties_even();
    if !k.is_finite() || k < 0.0 {
        return Err(Error::OutOfRange(format!("step count {k} for n = {n}, i = {i}, c = {c}")));
    }
    Ok(k as u64)
}

/// The `c` for which [`walk_step_count`] is closest to `k`.
pub fn walk_effective_c(n: usize, i: usize, k: u64) -> f64 {
    let nf = n as f64;
    (k as f64 - nf * nf.ln() / i as f64) / nf
}

/// `1 + e^{-i c}`.
pub fn walk_limit_mean<T: RealScalar>(i: usize, c: f64) -> T {
    T::one() + (-(T::from_u64(i as u64) * T::from_f64(c))).exp()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutoffRow<T> {
    pub r: usize,
    pub moment: T,
    pub reference: T,
    pub difference: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkCutoffReport<T> {
    pub n: usize,
    pub i: usize,
    pub c: f64,
    pub k: u64,
    pub limit_mean: T,
    pub rows: Vec<CutoffRow<T>>,
}

impl<T: Scalar> WalkCutoffReport<T> {
    /// `max_r |difference| / (1 + reference)`.
    pub fn worst_relative_error(&self) -> f64 {
        self.rows
            .iter()
            .map(|row| row.difference.to_f64().abs() / (1.0 + row.reference.to_f64()))
            .fold(0.0, f64::max)
    }
}

/// Walk moments at `k = round(n ln n / i + c n)` against `Poisson(1 + e^{-ic})`.
pub fn walk_cutoff_comparison<T: RealScalar>(n: usize, i: usize, c: f64, r_max: usize) -> Result<WalkCutoffReport<T>> {
    check_walk(n, i)?;
    let k = walk_step_count(n, i, c)?;
    let limit_mean: T = walk_limit_mean(i, c);
    let mut rows = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        let moment: T = moment_icycle_walk(n, i, k, r)?;
        let reference = poisson_moment(r, &limit_mean);
        let difference = moment.clone() - reference.clone();
        rows.push(CutoffRow { r, moment, reference, difference });
    }
    Ok(WalkCutoffReport { n, i, c, k, limit_mean, rows })
}

/// Exact law of the fixed-point count after `k` uniform `i`-cycles,
/// summing the Fourier inversion over conjugacy classes.
pub fn walk_exact_distribution(n: usize, i: usize, k: u64) -> Result<ExactDistribution> {
    if n > WALK_EXACT_MAX_N {
        return Err(Error::TooLarge { what: "exact walk distribution", n, max: WALK_EXACT_MAX_N });
    }
    if k == 0 {
        return Ok(ExactDistribution::point_mass(n));
    }
    check_walk(n, i)?;
    let k32 = u32::try_from(k).map_err(|_| Error::OutOfRange(format!("step count {k} too large")))?;
    let shapes: Vec<Partition> = all_partitions(n).collect();
    // d_tau * ratio_tau^k
    let weights: Vec<BigRational> = shapes
        .iter()
        .map(|tau| {
            let rho = char_ratio_icycle(tau, i)?;
            Ok(BigRational::from_integer(BigInt::from(tau.dim())) * num_traits::pow(rho, k32 as usize))
        })
        .collect::<Result<_>>()?;
    let n_fact = BigInt::from(factorial(n));
    let mut probs = vec![BigRational::zero(); n + 1];
    for mu in all_partitions(n).map(CycleType::new) {
        let mut inner = BigRational::zero();
        for (tau, w) in shapes.iter().zip(&weights) {
            let chi = character(tau, &mu)?.0;
            if !chi.is_zero() {
                inner += w * BigRational::from_integer(chi);
            }
        }
        let class = BigRational::new(BigInt::from(mu.class_size()), n_fact.clone());
        probs[mu.n1()] += class * inner;
    }
    debug_assert!(probs.iter().sum::<BigRational>().is_one());
    Ok(ExactDistribution::new(probs))
}

/// One term `d_lambda * ratio^k` of the walk sum and its limit.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffTerm<T> {
    pub t: usize,
    pub k: u64,
    pub term: T,
    pub limit: T,
}

/// `d_lambda ratio^k` at `k = walk_step_count(n, i, c)` next to
/// `e^{-itc} d_{lambda-bar} / t!`, where `t = n - lambda_1`.
pub fn cutoff_term<T: RealScalar>(lambda: &Partition, i: usize, c: f64, n: usize) -> Result<CutoffTerm<T>> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch { left: n, right: lambda.size() });
    }
    check_walk(n, i)?;
    let t = n - lambda.first();
    let k = walk_step_count(n, i, c)?;
    let rho = char_ratio_icycle(lambda, i)?;
    let term = T::from_biguint(&lambda.dim()) * T::pow_ratio(&rho, k);
    let decay = (-(T::from_u64((i * t) as u64) * T::from_f64(c))).exp();
    let limit = decay * T::from_biguint(&lambda.without_first_row().dim()) / T::from_biguint(&factorial(t));
    Ok(CutoffTerm { t, k, term, limit })
}

fn bell_reference<T: Scalar>() -> Reference<T> {
    Reference::poisson(T::one())
}

/// `x` is a fixed-point-free involution: the limit is `2 * Poisson(1/2)`.
fn fixed_x_reference(x: &CycleType) -> Reference<BigRational> {
    let parts = x.cycles().parts();
    if !parts.is_empty() && parts.iter().all(|&p| p == 2) {
        Reference { scale: 2, mean: BigRational::new(1.into(), 2.into()), label: "2*Poisson(1/2)".into() }
    } else {
        bell_reference()
    }
}

fn finish<T: Scalar>(
    model: Model,
    params: ModelParams,
    moments: Vec<T>,
    formula_used: Vec<Formula>,
    reference: Reference<T>,
) -> MomentReport<T> {
    let reference_moments = (1..=moments.len()).map(|r| reference.moment(r)).collect();
    MomentReport { model, params, moments, reference, reference_moments, formula_used }
}

pub fn commutator_random_report(n: usize, r_max: usize) -> MomentReport<BigRational> {
    let moments = (1..=r_max).map(|r| moment_commutator_random(n, r)).collect();
    let params = ModelParams { n, x: None, i: None, k: None, c: None };
    finish(Model::CommutatorBothRandom, params, moments, vec![Formula::DimensionSum; r_max], bell_reference())
}

/// Uses the closed forms where they apply and the character sum elsewhere.
pub fn commutator_fixed_report(x: &CycleType, r_max: usize) -> Result<MomentReport<BigRational>> {
    let n = x.n();
    let mut moments = Vec::with_capacity(r_max);
    let mut formulas = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        let (value, formula) = match r {
            1 if n >= 2 => (moment_commutator_fixed_closed(n, x, 1)?, Formula::ClosedFormMean),
            2 if n >= 4 => (moment_commutator_fixed_closed(n, x, 2)?, Formula::ClosedFormSecond),
            _ => (moment_commutator_fixed(n, x, r)?, Formula::CharacterSum),
        };
        moments.push(value);
        formulas.push(formula);
    }
    let params = ModelParams { n, x: Some(x.clone()), i: None, k: None, c: None };
    Ok(finish(Model::CommutatorFixedX, params, moments, formulas, fixed_x_reference(x)))
}

/// Walk moments at `k` steps. The reference is `Poisson(1 + e^{-ic})` with
/// `c` as given, or recovered from `k` through [`walk_effective_c`].
pub fn walk_report<T: RealScalar>(n: usize, i: usize, k: u64, c: Option<f64>, r_max: usize) -> Result<MomentReport<T>> {
    check_walk(n, i)?;
    let moments = (1..=r_max).map(|r| moment_icycle_walk(n, i, k, r)).collect::<Result<Vec<T>>>()?;
    let c_ref = c.unwrap_or_else(|| walk_effective_c(n, i, k));
    let reference = Reference::poisson(walk_limit_mean::<T>(i, c_ref));
    let params = ModelParams { n, x: None, i: Some(i), k: Some(k), c };
    Ok(finish(Model::IcycleWalk, params, moments, vec![Formula::WalkCharacterSum; r_max], reference))
}
