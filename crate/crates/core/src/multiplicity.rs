//! Multiplicities `m_{lambda,r}` of irreducibles in the `r`th tensor power
//! of the defining representation of `S_n`.
//!
//! Four independent routes:
//! - [`mult_skew`]: `sum_a S(r,a) d_{lambda/(n-a)}`;
//! - [`mult_updown`]: coefficient of `lambda` in `sum_a S(r,a) U^a D^a (n)`,
//!   with `D`/`U` the restriction/induction branching operators;
//! - [`mult_ding`]: `d_{lambda-bar} sum_a S(r,a) C(a, |lambda-bar|)`,
//!   valid only for `1 <= r <= n - lambda_2`;
//! - [`mult_oracle`]: the character inner product over all of `S_n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::characters::{character, CycleType};
use crate::error::{Error, Result};
use crate::partitions::{binomial, factorial, Partition};
use crate::setpartitions::stirling_row;
use crate::simulate::perm::all_permutations;
use crate::tableaux::{skew_syt_count, SkewShape};

/// Largest `n` accepted by [`mult_oracle`].
pub const ORACLE_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Skew,
    UpDown,
    Ding,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Skew, Algorithm::UpDown, Algorithm::Ding, Algorithm::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Skew => "skew",
            Algorithm::UpDown => "updown",
            Algorithm::Ding => "ding",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse { what: "algorithm", input: s.to_string(), reason: "unknown name".into() })
    }
}

/// A request for `m_{lambda,r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityQuery {
    pub lambda: Partition,
    pub r: usize,
}

impl MultiplicityQuery {
    pub fn new(lambda: Partition, r: usize) -> Self {
        MultiplicityQuery { lambda, r }
    }

    pub fn n(&self) -> usize {
        self.lambda.size()
    }

    /// `m` vanishes unless `lambda_1 >= n - r`.
    pub fn in_support(&self) -> bool {
        self.lambda.first() + self.r >= self.n()
    }

    pub fn eval(&self, algorithm: Algorithm) -> Result<BigUint> {
        match algorithm {
            Algorithm::Skew => Ok(mult_skew(&self.lambda, self.r)),
            Algorithm::UpDown => Ok(mult_updown(&self.lambda, self.r)),
            Algorithm::Ding => mult_ding(&self.lambda, self.r),
            Algorithm::Oracle => mult_oracle(&self.lambda, self.r),
        }
    }
}

/// `m_{lambda,r}` by the skew-tableau sum. Terms with `a > n` or
/// `(n-a) ⊄ lambda` contribute nothing.
pub fn mult_skew(lambda: &Partition, r: usize) -> BigUint {
    let n = lambda.size();
    let mut total = BigUint::zero();
    for (a, s) in stirling_row(r).iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        // lambda_1 >= n - a is needed for (n-a) ⊆ lambda
        let Some(shape) = SkewShape::over_row(lambda, a) else { break };
        if lambda.first() + a < n {
            continue;
        }
        total += s * skew_syt_count(&shape);
    }
    total
}

/// Formal integer combination of partitions.
pub type ShapeCombination = BTreeMap<Partition, BigUint>;

/// `D`: sum over removable corners.
pub fn restrict(state: &ShapeCombination) -> ShapeCombination {
    let mut out = ShapeCombination::new();
    for (shape, w) in state {
        for row in shape.corners() {
            *out.entry(shape.remove_cell(row)).or_default() += w;
        }
    }
    out
}

/// `U`: sum over addable cells, keeping only shapes inside `bound` when given.
pub fn induce(state: &ShapeCombination, bound: Option<&Partition>) -> ShapeCombination {
    let mut out = ShapeCombination::new();
    for (shape, w) in state {
        for row in shape.addable_rows() {
            let bigger = shape.add_cell(row);
            if bound.is_some_and(|b| !b.contains(&bigger)) {
                continue;
            }
            *out.entry(bigger).or_default() += w;
        }
    }
    out
}

fn single(shape: Partition) -> ShapeCombination {
    let mut c = ShapeCombination::new();
    c.insert(shape, BigUint::from(1u8));
    c
}

/// `m_{lambda,r}` as the coefficient of `lambda` in `sum_a S(r,a) U^a D^a (n)`.
pub fn mult_updown(lambda: &Partition, r: usize) -> BigUint {
    let n = lambda.size();
    let mut total = BigUint::zero();
    let mut lowered = single(Partition::row(n));
    for (a, s) in stirling_row(r).iter().enumerate() {
        if a > 0 {
            lowered = restrict(&lowered);
        }
        if lowered.is_empty() {
            break;
        }
        if s.is_zero() {
            continue;
        }
        let mut raised = lowered.clone();
        for _ in 0..a {
            raised = induce(&raised, Some(lambda));
        }
        if let Some(c) = raised.get(lambda) {
            total += s * c;
        }
    }
    total
}

/// `(UD)^r (n)` applied literally, without the Stirling expansion: the full
/// decomposition of the `r`th tensor power.
pub fn tensor_power_decomposition(n: usize, r: usize) -> ShapeCombination {
    let mut state = single(Partition::row(n));
    for _ in 0..r {
        state = induce(&restrict(&state), None);
    }
    state
}

/// Ding's product form; errors outside `1 <= r <= n - lambda_2`.
pub fn mult_ding(lambda: &Partition, r: usize) -> Result<BigUint> {
    let bound = lambda.size() - lambda.second();
    if r < 1 || r > bound {
        return Err(Error::DingGuard { r, bound });
    }
    let rest = lambda.without_first_row();
    let k = rest.size();
    let sum: BigUint = stirling_row(r).iter().enumerate().map(|(a, s)| s * binomial(a, k)).sum();
    Ok(rest.dim() * sum)
}

pub fn ding_applies(lambda: &Partition, r: usize) -> bool {
    r >= 1 && r + lambda.second() <= lambda.size()
}

/// `(1/n!) sum_{g in S_n} fix(g)^r chi^lambda(g)`, enumerating every `g`.
pub fn mult_oracle(lambda: &Partition, r: usize) -> Result<BigUint> {
    let n = lambda.size();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge { what: "character inner product oracle", n, max: ORACLE_MAX_N });
    }
    let mut chars: HashMap<CycleType, BigInt> = HashMap::new();
    let mut sum = BigInt::zero();
    for g in all_permutations(n) {
        let ty = g.cycle_type();
        let chi = match chars.get(&ty) {
            Some(c) => c.clone(),
            None => {
                let c = character(lambda, &ty)?.0;
                chars.insert(ty, c.clone());
                c
            }
        };
        sum += BigInt::from(g.fixed_points()).pow(r as u32) * chi;
    }
    let (q, rem) = sum.div_rem(&BigInt::from(factorial(n)));
    assert!(rem.is_zero(), "inner product is not an integer");
    Ok(q.to_biguint().expect("negative multiplicity"))
}

/// The production route: Ding's form when it applies, the skew sum otherwise.
pub fn multiplicity(lambda: &Partition, r: usize) -> BigUint {
    if ding_applies(lambda, r) {
        mult_ding(lambda, r).expect("guard checked")
    } else {
        mult_skew(lambda, r)
    }
}
