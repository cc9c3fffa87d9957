//! Brute-force oracles used only by the integration tests. None of them
//! shares code with the library beyond plain data types.
#![allow(dead_code)]

use std::collections::HashMap;

/// Every permutation of `0..n` (Heap's algorithm), as one-line vectors.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `(p q)(j) = p(q(j))`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&j| p[j]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (j, &x) in p.iter().enumerate() {
        inv[x] = j;
    }
    inv
}

pub fn fixed_points(p: &[usize]) -> usize {
    p.iter().enumerate().filter(|&(j, &x)| j == x).count()
}

pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn commutator(g: &[usize], x: &[usize]) -> Vec<usize> {
    compose(&compose(&compose(&inverse(g), &inverse(x)), g), x)
}

/// Standard fillings of the skew shape `outer / inner`, counted by trying
/// every bijection of labels to cells.
pub fn skew_syt_brute(outer: &[usize], inner: &[usize]) -> u64 {
    let mut cells = Vec::new();
    for (i, &len) in outer.iter().enumerate() {
        let start = inner.get(i).copied().unwrap_or(0);
        if start > len {
            return 0;
        }
        for j in start..len {
            cells.push((i, j));
        }
    }
    let m = cells.len();
    let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut count = 0;
    for labels in perms(m) {
        let ok = cells.iter().enumerate().all(|(k, &(i, j))| {
            let right = index.get(&(i, j + 1)).is_none_or(|&r| labels[r] > labels[k]);
            let below = index.get(&(i + 1, j)).is_none_or(|&b| labels[b] > labels[k]);
            right && below
        });
        if ok {
            count += 1;
        }
    }
    count
}

/// Standard Young tableaux of a straight shape, as `cell position of each label`.
pub fn standard_tableaux(shape: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn grow(shape: &[usize], filled: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if acc.len() == shape.iter().sum::<usize>() {
            out.push(acc.clone());
            return;
        }
        for i in 0..shape.len() {
            let j = filled[i];
            if j < shape[i] && (i == 0 || filled[i - 1] > j) {
                filled[i] += 1;
                acc.push((i, j));
                grow(shape, filled, acc, out);
                acc.pop();
                filled[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    grow(shape, &mut vec![0; shape.len()], &mut Vec::new(), &mut out);
    out
}

/// Character value from Young's orthogonal form: the representing matrix
/// of `g` is a product of adjacent-transposition matrices.
pub fn character_seminormal(shape: &[usize], g: &[usize]) -> i64 {
    let tabs = standard_tableaux(shape);
    let d = tabs.len();
    let pos: HashMap<Vec<(usize, usize)>, usize> = tabs.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
    let content = |c: (usize, usize)| c.1 as f64 - c.0 as f64;
    let s_matrix = |k: usize| {
        let mut m = vec![vec![0.0f64; d]; d];
        for (a, t) in tabs.iter().enumerate() {
            let rho = content(t[k + 1]) - content(t[k]);
            m[a][a] = 1.0 / rho;
            if rho.abs() > 1.0 {
                let mut swapped = t.clone();
                swapped.swap(k, k + 1);
                let b = pos[&swapped];
                m[b][a] = (1.0 - 1.0 / (rho * rho)).sqrt();
            }
        }
        m
    };
    // bubble sort g into the identity; record the adjacent swaps
    let mut word = g.to_vec();
    let mut swaps = Vec::new();
    for _ in 0..word.len() {
        for k in 0..word.len().saturating_sub(1) {
            if word[k] > word[k + 1] {
                word.swap(k, k + 1);
                swaps.push(k);
            }
        }
    }
    let mut acc: Vec<Vec<f64>> = (0..d).map(|a| (0..d).map(|b| if a == b { 1.0 } else { 0.0 }).collect()).collect();
    for k in swaps {
        let s = s_matrix(k);
        acc = (0..d).map(|a| (0..d).map(|b| (0..d).map(|c| acc[a][c] * s[c][b]).sum()).collect()).collect();
    }
    let trace: f64 = (0..d).map(|a| acc[a][a]).sum();
    let rounded = trace.round();
    assert!((trace - rounded).abs() < 1e-6, "non-integral trace {trace}");
    rounded as i64
}

pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            acc.push(p);
            go(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A permutation with the given cycle lengths.
pub fn representative(cycles: &[usize]) -> Vec<usize> {
    let mut p = Vec::new();
    let mut start = 0;
    for &len in cycles {
        for k in 0..len {
            p.push(start + (k + 1) % len);
        }
        start += len;
    }
    p
}

/// Set partitions of `{0..r}` counted by block number, via restricted
/// growth strings.
pub fn set_partition_counts(r: usize) -> Vec<u64> {
    fn go(pos: usize, r: usize, max: usize, counts: &mut Vec<u64>) {
        if pos == r {
            counts[max] += 1;
            return;
        }
        for b in 0..=max {
            go(pos + 1, r, max.max(b + 1), counts);
        }
    }
    let mut counts = vec![0u64; r + 1];
    if r == 0 {
        counts[0] = 1;
    } else {
        go(0, r, 0, &mut counts);
    }
    counts
}

/// O(n^2) longest increasing subsequence.
pub fn lis_dp(word: &[u32]) -> usize {
    let mut best = vec![1usize; word.len()];
    for j in 0..word.len() {
        for i in 0..j {
            if word[i] < word[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Law of the walk on `S_n` after `k` left multiplications by uniform
/// `i`-cycles, run as an explicit Markov chain. Returns exact numerators
/// over `(#i-cycles)^k`, indexed by fixed-point count.
pub fn walk_markov_chain(n: usize, i: usize, k: usize) -> (Vec<u128>, u128) {
    let all = perms(n);
    let index: HashMap<Vec<usize>, usize> = all.iter().cloned().enumerate().map(|(j, p)| (p, j)).collect();
    let cycles: Vec<&Vec<usize>> = all.iter().filter(|p| {
        let t = cycle_type(p);
        t[0] == i && t[1..].iter().all(|&c| c == 1)
    }).collect();
    let mut weights = vec![0u128; all.len()];
    weights[index[&(0..n).collect::<Vec<_>>()]] = 1;
    for _ in 0..k {
        let mut next = vec![0u128; all.len()];
        for (j, &w) in weights.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for c in &cycles {
                next[index[&compose(c, &all[j])]] += w;
            }
        }
        weights = next;
    }
    let mut by_fixed = vec![0u128; n + 1];
    for (p, w) in all.iter().zip(weights) {
        by_fixed[fixed_points(p)] += w;
    }
    (by_fixed, (cycles.len() as u128).pow(k as u32))
}
