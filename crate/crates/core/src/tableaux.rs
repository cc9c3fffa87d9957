//! Counting standard Young tableaux of skew shape.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{binomial, factorial, Partition};

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        SkewShape { outer, inner }
    }

    /// `lambda / (n - a)`; `None` when `a > n`, where the inner row is undefined.
    pub fn over_row(outer: &Partition, a: usize) -> Option<Self> {
        let n = outer.size();
        (a <= n).then(|| SkewShape::new(outer.clone(), Partition::row(n - a)))
    }

    pub fn is_valid(&self) -> bool {
        self.outer.contains(&self.inner)
    }

    /// `|outer| - |inner|`, or `None` if `inner` is not contained in `outer`.
    pub fn size(&self) -> Option<usize> {
        self.is_valid().then(|| self.outer.size() - self.inner.size())
    }
}

/// Number of standard fillings of `shape`; zero when `inner ⊄ outer`.
///
/// Peels corner cells off the outer shape until it meets the inner one,
/// memoising on the intermediate shape.
pub fn skew_syt_count(shape: &SkewShape) -> BigUint {
    if !shape.is_valid() {
        return BigUint::zero();
    }
    let mut memo = HashMap::new();
    peel(&shape.outer, &shape.inner, &mut memo)
}

fn peel(current: &Partition, inner: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
    if current == inner {
        return BigUint::one();
    }
    if let Some(v) = memo.get(current) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for row in current.corners() {
        // the corner must lie outside the inner shape
        if current.part(row) > inner.part(row) {
            total += peel(&current.remove_cell(row), inner, memo);
        }
    }
    memo.insert(current.clone(), total.clone());
    total
}

/// `d_{lambda/(n-a)}` for shapes whose second row fits under the removed
/// strip: `dim(lambda without its first row) * C(a, n - lambda_1)`.
///
/// Requires `lambda_2 <= n - a`; otherwise the first-row cells and the rest
/// interact and the product form is wrong.
pub fn skew_syt_large_first_row(lambda: &Partition, a: usize) -> Result<BigUint> {
    let n = lambda.size();
    let bound = n as i64 - a as i64;
    if (lambda.second() as i64) > bound {
        return Err(Error::LargeFirstRowGuard { second: lambda.second(), bound });
    }
    let rest = lambda.without_first_row();
    Ok(rest.dim() * binomial(a, rest.size()))
}

/// Aitken's determinant `N! det[1 / (lambda_i - mu_j - i + j)!]`, with
/// `1/m! = 0` for negative `m`. Exact rational elimination; an independent
/// route to the same count for cross-checks.
pub fn skew_syt_count_det(shape: &SkewShape) -> BigUint {
    if !shape.is_valid() {
        return BigUint::zero();
    }
    let size = shape.outer.size() - shape.inner.size();
    let l = shape.outer.len();
    if l == 0 {
        return BigUint::one();
    }
    let mut m: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let arg = shape.outer.part(i) as i64 - shape.inner.part(j) as i64 - i as i64 + j as i64;
                    if arg < 0 {
                        BigRational::zero()
                    } else {
                        BigRational::new(BigInt::one(), BigInt::from(factorial(arg as usize)))
                    }
                })
                .collect()
        })
        .collect();
    let det = determinant(&mut m);
    let value = det * BigRational::from_integer(BigInt::from(factorial(size)));
    assert!(value.is_integer(), "Aitken determinant produced a non-integer");
    value.to_integer().to_biguint().expect("negative tableau count")
}

fn determinant(m: &mut [Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}
