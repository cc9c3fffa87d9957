//! Integer partitions and the combinatorics of Young diagrams.
//!
//! Partitions are stored as weakly decreasing vectors of positive parts and
//! iterate in reverse lexicographic order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition, indexing an irreducible representation of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its parts. Trailing zeros are dropped; the
    /// remaining parts must be weakly decreasing and positive.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero part")));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` into decreasing order first; zeros are discarded.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// `(first, rest...)`, e.g. `Partition::with_first_row(n - 2, &[1, 1])`.
    pub fn with_first_row(first: usize, rest: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(rest.len() + 1);
        parts.push(first);
        parts.extend_from_slice(rest);
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `lambda_1`, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// `lambda_2`.
    pub fn second(&self) -> usize {
        self.part(1)
    }

    /// The partition with its largest part removed.
    pub fn without_first_row(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Cellwise containment of Young diagrams: `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-based).
    pub fn hook(&self, i: usize, j: usize, conj: &Partition) -> usize {
        debug_assert!(j < self.part(i));
        (self.parts[i] - j - 1) + (conj.parts[j] - i - 1) + 1
    }

    /// All hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(self.hook(i, j, &conj));
            }
        }
        out
    }

    /// Diagonal size: the largest `k` with `lambda_k >= k`.
    pub fn diagonal_size(&self) -> usize {
        self.parts.iter().enumerate().take_while(|&(i, &p)| p > i).count()
    }

    /// Frobenius coordinates `(a | b)` with `a_j = lambda_j - j`, `b_j = lambda'_j - j`
    /// (1-based `j`), both strictly decreasing.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let m = self.diagonal_size();
        let conj = self.conjugate();
        let a = (0..m).map(|j| self.parts[j] - j - 1).collect();
        let b = (0..m).map(|j| conj.parts[j] - j - 1).collect();
        (a, b)
    }

    /// Number of standard Young tableaux, `n! / prod(hooks)`.
    pub fn dim(&self) -> BigUint {
        let n = self.size();
        if n <= 1 {
            return BigUint::one();
        }
        let numerator = product_range(2, n);
        let mut hooks = self.hooks();
        hooks.retain(|&h| h > 1);
        let denominator = product_of(&hooks);
        debug_assert!((&numerator % &denominator) == BigUint::ZERO);
        numerator / denominator
    }

    /// Rows `i` whose last cell is a removable corner.
    pub fn corners(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.part(i) > self.part(i + 1))
    }

    /// Rows where a cell may be added (including the new row at the bottom).
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.len()).filter(move |&i| i == 0 || self.part(i - 1) > self.part(i))
    }

    /// Remove the last cell of row `i`, which must be a corner.
    pub fn remove_cell(&self, i: usize) -> Partition {
        debug_assert!(self.part(i) > self.part(i + 1));
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// Add a cell at the end of row `i`, which must be addable.
    pub fn add_cell(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Every way to remove a rim hook (border strip) of `length` cells,
    /// with the leg length (rows spanned minus one) of each strip.
    ///
    /// Works on the beta-set `beta_j = lambda_j + (len - 1 - j)`: removing a
    /// strip of length `L` moves one bead from `beta` to `beta - L`, and the
    /// leg length counts the beads strictly between.
    pub fn rim_hook_removals(&self, length: usize) -> Vec<(Partition, usize)> {
        if length == 0 {
            return Vec::new();
        }
        let l = self.len();
        let betas: Vec<usize> = self.parts.iter().enumerate().map(|(j, &p)| p + l - 1 - j).collect();
        let mut out = Vec::new();
        for (j, &b) in betas.iter().enumerate() {
            if b < length {
                continue;
            }
            let target = b - length;
            if betas.binary_search_by(|x| target.cmp(x)).is_ok() {
                continue;
            }
            let leg = betas.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = betas.clone();
            moved[j] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(k, &x)| x - (l - 1 - k))
                .filter(|&p| p > 0)
                .collect();
            out.push((Partition { parts }, leg));
        }
        out
    }
}

/// `lo * (lo + 1) * ... * hi` by balanced splitting, 1 when empty.
pub(crate) fn product_range(lo: usize, hi: usize) -> BigUint {
    if lo > hi {
        return BigUint::one();
    }
    if hi - lo < 16 {
        return (lo..=hi).fold(BigUint::one(), |acc, k| acc * k);
    }
    let mid = lo + (hi - lo) / 2;
    product_range(lo, mid) * product_range(mid + 1, hi)
}

fn product_of(xs: &[usize]) -> BigUint {
    if xs.len() <= 16 {
        return xs.iter().fold(BigUint::one(), |acc, &k| acc * k);
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    product_of(a) * product_of(b)
}

pub fn factorial(n: usize) -> BigUint {
    product_range(2, n)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

pub fn dim(lambda: &Partition) -> BigUint {
    lambda.dim()
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn frobenius(lambda: &Partition) -> (Vec<usize>, Vec<usize>) {
    lambda.frobenius()
}

/// Partitions of `n` with every part at most `max_part`, in reverse
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize, max_part: usize) -> Self {
        if n == 0 {
            return Partitions { next: Some(Vec::new()) };
        }
        if max_part == 0 {
            return Partitions { next: None };
        }
        let mut first = vec![max_part; n / max_part];
        if !n.is_multiple_of(max_part) {
            first.push(n % max_part);
        }
        Partitions { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // successor: shrink the last part > 1 and refill greedily
        if let Some(k) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..k].to_vec();
            let v = current[k] - 1;
            let mut rem = current.len() - k;
            succ.push(v);
            while rem > 0 {
                let p = rem.min(v);
                succ.push(p);
                rem -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_sorted_unchecked(current))
    }
}

/// All partitions of `n`, reverse lexicographic.
pub fn all_partitions(n: usize) -> Partitions {
    Partitions::new(n, n)
}

/// `{lambda ⊢ n : lambda_1 >= n - t_max}`, grouped by `t = n - lambda_1`
/// ascending, which keeps the overall order reverse lexicographic.
pub fn partitions_with_large_first_row(n: usize, t_max: usize) -> impl Iterator<Item = Partition> {
    let t_max = t_max.min(n);
    (0..=t_max).flat_map(move |t| {
        let first = n - t;
        Partitions::new(t, first.min(t)).filter_map(move |rest| {
            if first == 0 {
                // only t = n, rest = empty partition of 0
                return rest.is_empty().then(Partition::empty);
            }
            let mut parts = Vec::with_capacity(rest.len() + 1);
            parts.push(first);
            parts.extend_from_slice(rest.parts());
            Some(Partition::from_sorted_unchecked(parts))
        })
    })
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// Comma-separated parts with optional `^` multiplicity; whitespace is
/// ignored and parts may come in any order: `"3,2^2,1"` is `(3,2,2,1)`.
/// The empty string parses as the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned.trim_start_matches('(').trim_end_matches(')');
        let err = |reason: String| Error::Parse { what: "partition", input: s.to_string(), reason };
        let mut parts = Vec::new();
        if cleaned.is_empty() {
            return Ok(Partition::empty());
        }
        for token in cleaned.split(',') {
            let (base, mult) = match token.split_once('^') {
                Some((b, m)) => (b, m),
                None => (token, "1"),
            };
            let part: usize = base.parse().map_err(|_| err(format!("bad part {base:?}")))?;
            let mult: usize = mult.parse().map_err(|_| err(format!("bad multiplicity {mult:?}")))?;
            if part == 0 {
                return Err(err("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn count_partitions(n: usize) -> usize {
        // Euler's pentagonal recurrence, independent of the iterator
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                table[m] += sign * table[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    table[m] += sign * table[m - g2];
                }
                k += 1;
            }
        }
        table[n] as usize
    }

    #[test]
    fn dim_examples() {
        assert_eq!(p(&[5]).dim(), BigUint::from(1u8));
        assert_eq!(p(&[2, 1]).dim(), BigUint::from(2u8));
        for n in 2..=12 {
            assert_eq!(p(&[n - 1, 1]).dim(), BigUint::from(n - 1));
        }
        assert_eq!(Partition::empty().dim(), BigUint::from(1u8));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(p(&[1]).frobenius(), (vec![0], vec![0]));
        assert_eq!(p(&[7]).frobenius(), (vec![6], vec![0]));
        assert_eq!(p(&[3, 2]).frobenius(), (vec![2, 0], vec![1, 0]));
    }

    #[test]
    fn large_first_row_examples() {
        let got: Vec<_> = partitions_with_large_first_row(5, 0).collect();
        assert_eq!(got, vec![p(&[5])]);
        let got: Vec<_> = partitions_with_large_first_row(5, 1).collect();
        assert_eq!(got, vec![p(&[5]), p(&[4, 1])]);
        let got: Vec<_> = partitions_with_large_first_row(6, 2).collect();
        assert_eq!(got, vec![p(&[6]), p(&[5, 1]), p(&[4, 2]), p(&[4, 1, 1])]);
    }

    #[test]
    fn all_partitions_counts_and_order() {
        assert_eq!(all_partitions(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(all_partitions(4).count(), 5);
        assert_eq!(all_partitions(7).count(), 15);
        let four: Vec<_> = all_partitions(4).collect();
        assert_eq!(four, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        for n in 0..=20 {
            assert_eq!(all_partitions(n).count(), count_partitions(n), "p({n})");
        }
    }

    #[test]
    fn strata_cover_all_partitions() {
        for n in 0..=12 {
            let mut union: Vec<_> = partitions_with_large_first_row(n, n).collect();
            let all: Vec<_> = all_partitions(n).collect();
            assert_eq!(union, all, "n = {n}");
            for t in 0..=n {
                for lam in partitions_with_large_first_row(n, t) {
                    assert!(lam.first() + t >= n);
                }
            }
            union.dedup();
            assert_eq!(union.len(), all.len());
        }
    }

    #[test]
    fn sum_of_squared_dims_is_factorial() {
        for n in 0..=10 {
            let total: BigUint = all_partitions(n).map(|l| {
                let d = l.dim();
                &d * &d
            }).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn hook_formula_matches_branching() {
        use std::collections::HashMap;
        fn branch(l: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
            if l.is_empty() {
                return BigUint::one();
            }
            if let Some(v) = memo.get(l) {
                return v.clone();
            }
            let v = l.corners().map(|i| branch(&l.remove_cell(i), memo)).sum();
            memo.insert(l.clone(), v);
            memo[l].clone()
        }
        let mut memo = HashMap::new();
        for n in 0..=9 {
            for l in all_partitions(n) {
                assert_eq!(l.dim(), branch(&l, &mut memo), "{l}");
                assert_eq!(l.dim(), l.conjugate().dim());
            }
        }
    }

    #[test]
    fn rim_hooks_of_small_shape() {
        // the rim of (3,2) is (0,2),(0,1),(1,1),(1,0); only the first three
        // form a removable strip, spanning two rows
        let lam = p(&[3, 2]);
        assert_eq!(lam.rim_hook_removals(3), vec![(p(&[1, 1]), 1)]);
        assert_eq!(lam.rim_hook_removals(5), vec![]);
        assert_eq!(lam.rim_hook_removals(2), vec![(p(&[3]), 0)]);
        let ones = lam.rim_hook_removals(1);
        assert_eq!(ones.len(), lam.corners().count());
        assert!(ones.iter().all(|&(_, h)| h == 0));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!("2^3".parse::<Partition>().unwrap(), p(&[2, 2, 2]));
        assert_eq!(" 4, 1 ".parse::<Partition>().unwrap(), p(&[4, 1]));
        assert_eq!("1,3,2^2".parse::<Partition>().unwrap(), p(&[3, 2, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(parts in proptest::collection::vec(1usize..12, 0..10)) {
            let lam = Partition::from_unsorted(parts);
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            let (a, b) = lam.frobenius();
            prop_assert_eq!(a.len(), lam.diagonal_size());
            prop_assert!(a.windows(2).all(|w| w[0] > w[1]));
            prop_assert!(b.windows(2).all(|w| w[0] > w[1]));
            let total: usize = a.iter().zip(&b).map(|(x, y)| x + y + 1).sum();
            prop_assert_eq!(total, lam.size());
        }
    }
}
