use std::fmt;

use crate::characters::CycleType;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A permutation of `{0, .., n-1}` in one-line form: `self[j]` is the image of `j`.
///
/// Products compose right to left: `(p * q)(j) = p(q(j))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::OutOfRange(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    /// The reversal `j -> n-1-j`.
    pub fn reverse(n: usize) -> Self {
        Permutation { images: (0..n as u32).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.len()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x as usize] = j as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(j, &x)| j as u32 == x).count()
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        CycleType::new(Partition::from_unsorted(lengths))
    }

    /// `g^-1 x^-1 g x`.
    pub fn commutator(g: &Permutation, x: &Permutation) -> Self {
        g.inverse().compose(&x.inverse()).compose(g).compose(x)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// Every permutation of `n` letters in lexicographic order of one-line form.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some((0..n as u32).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            next = Some(succ);
        }
        Some(Permutation::from_images_unchecked(current))
    })
}

fn next_lexicographic(a: &mut [u32]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).expect("pivot has a successor");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// A representative permutation of the class: cycles laid out on consecutive points.
pub fn class_representative(mu: &CycleType) -> Permutation {
    let mut images = Vec::with_capacity(mu.n());
    let mut start = 0u32;
    for &len in mu.cycles().parts() {
        let len = len as u32;
        for k in 0..len {
            images.push(start + (k + 1) % len);
        }
        start += len;
    }
    Permutation::from_images_unchecked(images)
}
