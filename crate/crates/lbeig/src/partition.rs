//! Exact integer-partition arithmetic.
//!
//! A partition of `n` is a nonincreasing sequence of positive parts summing
//! to `n`. This module provides the combinatorial core used everywhere else:
//! conjugation, the weight `a(k) = sum (i-1) k_i`, restricted counting with
//! arbitrary precision, reverse-lexicographic enumeration, unranking (exact
//! uniform sampling needs it), and the hook-length dimension.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A partition `k_1 >= k_2 >= ... >= k_m >= 1` of `n = sum k_i`.
///
/// The empty partition (`n = 0`, `m = 0`) is valid.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u64>,
    n: u64,
}

impl Partition {
    /// Builds a partition, validating that parts are nonincreasing and positive.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain("partition parts must be nonincreasing".into()));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// Single-row partition `(n)`; empty when `n = 0`.
    pub fn single_row(n: u64) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The partitioned integer `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The number of parts `m`.
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `k_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// The transpose `k'` with `k'_j = #{i : k_i >= j}`.
    ///
    /// An involution: `conjugate(conjugate(k)) = k`.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let k1 = self.parts[0] as usize;
        let mut conj = vec![0u64; k1];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj, n: self.n }
    }

    /// The weight `a(k) = sum_{i=1}^m (i-1) k_i`, equivalently
    /// `sum_j C(k'_j, 2)` on the conjugate.
    pub fn weight_a(&self) -> u128 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &k)| i as u128 * k as u128)
            .sum()
    }

    /// `sum_i k_i^2`.
    pub fn sum_of_squares(&self) -> u128 {
        self.parts.iter().map(|&k| (k as u128) * (k as u128)).sum()
    }

    /// `sum_i i * k_i` with 1-based `i`.
    pub fn weighted_index_sum(&self) -> u128 {
        self.weight_a() + self.n as u128
    }

    /// Hook-length dimension `dim(k) = n! / prod_{(i,j)} (k_i - j + k'_j - i + 1)`.
    ///
    /// The hook product divides `n!` exactly. `dim(empty) = 1` by convention.
    pub fn dimension(&self) -> BigUint {
        if self.parts.is_empty() {
            return BigUint::one();
        }
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (i0, &k) in self.parts.iter().enumerate() {
            for j0 in 0..k as usize {
                // arm + leg + 1 with 1-based arm = k_i - j, leg = k'_j - i
                let hook = (k - j0 as u64 - 1) + (conj.parts[j0] - i0 as u64 - 1) + 1;
                hooks *= BigUint::from(hook);
            }
        }
        let mut factorial = BigUint::one();
        for t in 2..=self.n {
            factorial *= BigUint::from(t);
        }
        let rem = &factorial % &hooks;
        assert!(rem.is_zero(), "hook product must divide n! exactly");
        factorial / hooks
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Table of restricted partition counts `|P_n(m)|` (partitions of `n` into at
/// most `m` parts), exact in arbitrary precision.
///
/// Built once per experiment with the recurrence
/// `|P_n(m)| = |P_n(m-1)| + |P_{n-m}(m)|` (split on whether the partition has
/// fewer than `m` parts, or subtract one from each of exactly `m` parts).
/// `|P_n(n)| = p(n)`, the unrestricted count.
#[derive(Clone)]
pub struct CountTable {
    max_n: usize,
    max_m: usize,
    // row-major: counts[n * (max_m + 1) + m]
    counts: Vec<BigUint>,
}

impl CountTable {
    pub fn build(max_n: usize, max_m: usize) -> Self {
        let width = max_m + 1;
        let mut counts = vec![BigUint::zero(); (max_n + 1) * width];
        for m in 0..=max_m {
            counts[m] = BigUint::one(); // |P_0(m)| = 1 (the empty partition)
        }
        for n in 1..=max_n {
            for m in 1..=max_m {
                let mut c = counts[n * width + m - 1].clone();
                if n >= m {
                    c += counts[(n - m) * width + m].clone();
                }
                counts[n * width + m] = c;
            }
        }
        CountTable { max_n, max_m, counts }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    /// `|P_n(m)|`: partitions of `n` with at most `m` parts.
    ///
    /// `m > n` clamps to `m = n` (extra slots can never be used).
    pub fn count_bounded(&self, n: usize, m: usize) -> Result<&BigUint> {
        let m = m.min(n);
        if n > self.max_n || m > self.max_m {
            return Err(Error::Range(format!(
                "count_bounded({n}, {m}) outside table ({}, {})",
                self.max_n, self.max_m
            )));
        }
        Ok(&self.counts[n * (self.max_m + 1) + m])
    }

    /// `|P'_n(m)|`: partitions of `n` with exactly `m` parts, through the
    /// subtract-one-from-each-part bijection onto `P_{n-m}(m)`.
    pub fn count_exact_length(&self, n: usize, m: usize) -> Result<BigUint> {
        if m > n {
            return Ok(BigUint::zero());
        }
        if n == 0 {
            return Ok(BigUint::one()); // m == 0 here
        }
        if m == 0 {
            return Ok(BigUint::zero());
        }
        self.count_bounded(n - m, m).cloned()
    }

    /// The unrestricted partition count `p(n) = |P_n(n)|`.
    pub fn unrestricted(&self, n: usize) -> Result<&BigUint> {
        self.count_bounded(n, n)
    }
}

/// Iterator over all partitions of `n` with length in `[len_min, len_max]`,
/// in reverse-lexicographic order of parts: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub struct PartitionIter {
    len_min: usize,
    len_max: usize,
    // chosen parts so far; stack[i] pairs with parts[i]
    parts: Vec<u64>,
    // remaining sum before each chosen level
    remaining: Vec<u64>,
    yielded_empty: bool,
    done: bool,
}

/// Streams every partition of `n` with `len_min <= m <= len_max`, each
/// exactly once, largest-first within each prefix (reverse-lexicographic).
pub fn enumerate(n: u64, len_min: usize, len_max: usize) -> PartitionIter {
    let len_max = len_max.min(n as usize);
    PartitionIter {
        len_min,
        len_max,
        parts: Vec::new(),
        remaining: vec![n],
        yielded_empty: false,
        done: len_min > len_max && n > 0,
    }
}

/// All partitions of `n`, unrestricted.
pub fn enumerate_all(n: u64) -> PartitionIter {
    enumerate(n, 0, n as usize)
}

impl PartitionIter {
    /// Descend greedily from the current prefix, always taking the largest
    /// admissible part. Returns true when a complete partition is formed.
    fn descend(&mut self) -> bool {
        loop {
            let depth = self.parts.len();
            let rem = *self.remaining.last().unwrap();
            if rem == 0 {
                return depth >= self.len_min;
            }
            if depth >= self.len_max {
                return false;
            }
            let cap = if depth == 0 { rem } else { self.parts[depth - 1].min(rem) };
            let slots = (self.len_max - depth) as u64;
            // k must leave the remainder packable into the slots below it
            let lo = rem.div_ceil(slots);
            if lo > cap {
                return false;
            }
            self.parts.push(cap);
            self.remaining.push(rem - cap);
        }
    }

    /// Backtrack to the deepest level whose part can still be decremented,
    /// decrement it, and return true; false when exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(k) = self.parts.pop() {
            self.remaining.pop();
            let depth = self.parts.len();
            let rem = *self.remaining.last().unwrap();
            let slots = (self.len_max - depth) as u64;
            let lo = rem.div_ceil(slots);
            if k > lo {
                self.parts.push(k - 1);
                self.remaining.push(rem - (k - 1));
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        // n = 0: the empty partition, once, when the length window allows it
        if self.remaining[0] == 0 {
            self.done = true;
            if self.len_min == 0 && !self.yielded_empty {
                self.yielded_empty = true;
                return Some(Partition::empty());
            }
            return None;
        }
        loop {
            let complete = if self.parts.is_empty() && !self.yielded_empty {
                self.yielded_empty = true; // marks "started"
                self.descend()
            } else {
                if !self.backtrack() {
                    self.done = true;
                    return None;
                }
                self.descend()
            };
            if complete {
                return Some(Partition::from_parts_unchecked(self.parts.clone()));
            }
            // prefix completed too short (below len_min) or dead end: keep
            // backtracking
            if self.parts.is_empty() {
                self.done = true;
                return None;
            }
        }
    }
}

/// Returns the `index`-th partition of `P_n(m)` (at most `m` parts) in the
/// same reverse-lexicographic order `enumerate` uses.
///
/// Unranking descends on the conjugate family (partitions of `n` with parts
/// at most `m`): conjugation reverses lexicographic order on partitions of a
/// fixed `n`, so position `index` here corresponds to position
/// `count - 1 - index` there, and each descent step costs one table lookup.
pub fn unrank(n: u64, m: usize, index: &BigUint, table: &CountTable) -> Result<Partition> {
    let nu = n as usize;
    let total = table.count_bounded(nu, m)?.clone();
    if *index >= total {
        return Err(Error::Range(format!(
            "unrank index {index} out of range [0, {total}) for P_{n}({m})"
        )));
    }
    if n == 0 {
        return Ok(Partition::empty());
    }
    let mut rev = &total - index - 1u32;
    let mut cap = m.min(nu);
    let mut rem = nu;
    let mut conj_parts: Vec<u64> = Vec::new();
    while rem > 0 {
        let mut placed = false;
        for k in (1..=cap.min(rem)).rev() {
            let block = table.count_bounded(rem - k, k)?;
            if rev < *block {
                conj_parts.push(k as u64);
                rem -= k;
                cap = k;
                placed = true;
                break;
            }
            rev -= block;
        }
        debug_assert!(placed, "descent must place a part");
        if !placed {
            return Err(Error::Internal("unrank descent failed to place a part".into()));
        }
    }
    Ok(Partition::from_parts_unchecked(conj_parts).conjugate())
}

/// Unranks `P'_n(m)` (exactly `m` parts) via the subtract-one bijection:
/// the `index`-th element of `P_{n-m}(m)` with every part raised by one and
/// padded with ones to length `m`.
pub fn unrank_exact_length(n: u64, m: usize, index: &BigUint, table: &CountTable) -> Result<Partition> {
    if (m as u64) > n {
        return Err(Error::Domain(format!("P'_{n}({m}) is empty")));
    }
    if m == 0 {
        // n == 0 here
        return if index.is_zero() {
            Ok(Partition::empty())
        } else {
            Err(Error::Range("unrank index out of range for empty partition".into()))
        };
    }
    let base = unrank(n - m as u64, m, index, table)?;
    let mut parts: Vec<u64> = base.parts().iter().map(|&p| p + 1).collect();
    parts.resize(m, 1);
    Ok(Partition::from_parts_unchecked(parts))
}
