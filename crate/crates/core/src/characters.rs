//! Irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule: strip rim hooks whose
//! lengths are the cycle lengths, largest first, with sign `(-1)^leg`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions_with_large_first_row, Partition};

/// A conjugacy class of `S_n`, recorded by its cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    cycles: Partition,
}

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        CycleType { cycles }
    }

    pub fn identity(n: usize) -> Self {
        CycleType::new(Partition::from_sorted_unchecked(vec![1; n]))
    }

    /// `(i, 1^(n-i))`.
    pub fn icycle(n: usize, i: usize) -> Self {
        let mut parts = vec![1; n - i];
        parts.insert(0, i);
        CycleType::new(Partition::from_unsorted(parts))
    }

    pub fn cycles(&self) -> &Partition {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.cycles.size()
    }

    /// Fixed points.
    pub fn n1(&self) -> usize {
        self.cycles.multiplicity(1)
    }

    /// 2-cycles.
    pub fn n2(&self) -> usize {
        self.cycles.multiplicity(2)
    }

    /// `prod_k k^(m_k) m_k!`.
    pub fn centralizer_size(&self) -> BigUint {
        let mut acc = BigUint::one();
        let parts = self.cycles.parts();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i];
            let m = parts[i..].iter().take_while(|&&p| p == k).count();
            acc *= BigUint::from(k).pow(m as u32) * factorial(m);
            i += m;
        }
        acc
    }

    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.centralizer_size()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycles.fmt(f)
    }
}

/// Same grammar as partitions: `"3^2,1"` is two 3-cycles and a fixed point.
impl FromStr for CycleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Partition>()
            .map(CycleType::new)
            .map_err(|e| match e {
                Error::Parse { input, reason, .. } => Error::Parse { what: "cycle type", input, reason },
                other => other,
            })
    }
}

/// An irreducible character value; always an integer for `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterValue(pub BigInt);

impl CharacterValue {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }

    pub fn squared(&self) -> BigUint {
        (&self.0 * &self.0).to_biguint().expect("square is non-negative")
    }
}

impl From<i64> for CharacterValue {
    fn from(v: i64) -> Self {
        CharacterValue(BigInt::from(v))
    }
}

impl fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `chi^lambda(mu)`.
pub fn character(lambda: &Partition, mu: &CycleType) -> Result<CharacterValue> {
    if lambda.size() != mu.n() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.n() });
    }
    let cycles = mu.cycles().parts();
    // next cycle to strip, indexed by the size of the shape still to empty
    let mut next_cycle = vec![usize::MAX; mu.n() + 1];
    let mut remaining = mu.n();
    for &c in cycles {
        next_cycle[remaining] = c;
        remaining -= c;
    }
    let mut memo = HashMap::new();
    Ok(CharacterValue(murnaghan_nakayama(lambda, &next_cycle, &mut memo)))
}

// The cycles still to strip are determined by |shape|, so the shape alone
// keys the memo.
fn murnaghan_nakayama(shape: &Partition, next_cycle: &[usize], memo: &mut HashMap<Partition, BigInt>) -> BigInt {
    if shape.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (rest, leg) in shape.rim_hook_removals(next_cycle[shape.size()]) {
        let v = murnaghan_nakayama(&rest, next_cycle, memo);
        if leg % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(shape.clone(), total.clone());
    total
}

/// Shapes with a closed-form character in terms of `n_1` and `n_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NearRow {
    /// `(n-1, 1)`: `n_1 - 1`.
    OneBox,
    /// `(n-2, 2)`: `C(n_1 - 1, 2) + n_2 - 1`.
    TwoRow,
    /// `(n-2, 1, 1)`: `C(n_1 - 1, 2) - n_2`.
    TwoColumn,
}

impl NearRow {
    pub const ALL: [NearRow; 3] = [NearRow::OneBox, NearRow::TwoRow, NearRow::TwoColumn];

    pub fn shape(self, n: usize) -> Result<Partition> {
        let min = self.min_n();
        if n < min {
            return Err(Error::OutOfRange(format!("{self:?} needs n >= {min}, got {n}")));
        }
        Ok(match self {
            NearRow::OneBox => Partition::from_sorted_unchecked(vec![n - 1, 1]),
            NearRow::TwoRow => Partition::from_sorted_unchecked(vec![n - 2, 2]),
            NearRow::TwoColumn => Partition::from_sorted_unchecked(vec![n - 2, 1, 1]),
        })
    }

    fn min_n(self) -> usize {
        match self {
            NearRow::OneBox => 2,
            NearRow::TwoRow | NearRow::TwoColumn => 4,
        }
    }
}

/// `C(m, 2)` as the polynomial `m(m-1)/2`, so `C(-1, 2) = 1`.
fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// Closed-form character on the near-one-row shapes. The binomial is the
/// polynomial one; at `n_1 = 0` this gives `C(-1, 2) = 1`.
pub fn char_nearrow(template: NearRow, mu: &CycleType) -> Result<CharacterValue> {
    let n = mu.n();
    template.shape(n)?;
    let n1 = mu.n1() as i64;
    let n2 = mu.n2() as i64;
    let v = match template {
        NearRow::OneBox => n1 - 1,
        NearRow::TwoRow => choose2(n1 - 1) + n2 - 1,
        NearRow::TwoColumn => choose2(n1 - 1) - n2,
    };
    Ok(CharacterValue::from(v))
}

/// `chi^lambda(i, 1^(n-i)) / d_lambda`, by removing one `i`-rim-hook and
/// counting tableaux of what is left.
pub fn char_ratio_icycle(lambda: &Partition, i: usize) -> Result<BigRational> {
    let n = lambda.size();
    if i < 2 || i > n {
        return Err(Error::OutOfRange(format!("cycle length {i} outside 2..={n}")));
    }
    let mut num = BigInt::zero();
    for (rest, leg) in lambda.rim_hook_removals(i) {
        let d = BigInt::from(rest.dim());
        if leg % 2 == 0 {
            num += d;
        } else {
            num -= d;
        }
    }
    Ok(BigRational::new(num, BigInt::from(lambda.dim())))
}

/// `|ratio - (1 - i t / n)| * n^2` for one shape.
#[derive(Debug, Clone)]
pub struct RatioDeviation {
    pub lambda: Partition,
    pub ratio: BigRational,
    pub scaled_error: BigRational,
}

#[derive(Debug, Clone)]
pub struct RatioAsymptoticsRow {
    pub n: usize,
    pub shapes: Vec<RatioDeviation>,
    /// Largest `scaled_error` over the shapes at this `n`.
    pub max_scaled_error: BigRational,
}

#[derive(Debug, Clone)]
pub struct RatioAsymptoticsReport {
    pub i: usize,
    pub t: usize,
    pub rows: Vec<RatioAsymptoticsRow>,
}

impl RatioAsymptoticsReport {
    /// Largest scaled error over every `n`: the observed constant.
    pub fn observed_constant(&self) -> BigRational {
        self.rows.iter().map(|r| r.max_scaled_error.clone()).max().unwrap_or_else(BigRational::zero)
    }

    /// Whether the per-`n` maxima never increase along the grid.
    pub fn non_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].max_scaled_error <= w[0].max_scaled_error)
    }
}

/// Tracks how fast `chi^lambda(i-cycle)/d_lambda` approaches `1 - i t/n`
/// over all `lambda` with `lambda_1 = n - t`.
pub fn verify_ratio_asymptotics(i: usize, t: usize, n_list: &[usize]) -> Result<RatioAsymptoticsReport> {
    if i < 2 {
        return Err(Error::OutOfRange(format!("cycle length {i} < 2")));
    }
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        if n < t + i + 2 {
            return Err(Error::OutOfRange(format!("n = {n} below t + i + 2 = {}", t + i + 2)));
        }
        let nn = BigInt::from(n);
        let linear = BigRational::one() - BigRational::new(BigInt::from(i * t), nn.clone());
        let scale = BigRational::from_integer(&nn * &nn);
        let mut shapes = Vec::new();
        for lambda in partitions_with_large_first_row(n, t).filter(|l| l.first() == n - t) {
            let ratio = char_ratio_icycle(&lambda, i)?;
            let scaled_error = (&ratio - &linear).abs() * &scale;
            shapes.push(RatioDeviation { lambda, ratio, scaled_error });
        }
        let max_scaled_error =
            shapes.iter().map(|s| s.scaled_error.clone()).max().unwrap_or_else(BigRational::zero);
        rows.push(RatioAsymptoticsRow { n, shapes, max_scaled_error });
    }
    Ok(RatioAsymptoticsReport { i, t, rows })
}
