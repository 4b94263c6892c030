//! Exact integer sequences and integer partitions.
//!
//! Every value is a [`Count`]. Tables that are reused heavily (Stirling
//! numbers, the join-universal pair counts) are memoised process-wide.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every count.
pub type Count = BigUint;

/// Process-wide memo table. Lookups never hold the lock while computing, so
/// a value may be computed twice under contention but is never observed
/// half-written.
pub(crate) struct Memo<K> {
    map: OnceLock<RwLock<HashMap<K, Count>>>,
}

impl<K: Hash + Eq> Memo<K> {
    pub(crate) const fn new() -> Self {
        Memo {
            map: OnceLock::new(),
        }
    }

    pub(crate) fn get_or(&self, key: K, compute: impl FnOnce() -> Count) -> Count {
        let map = self.map.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(v) = map.read().expect("memo poisoned").get(&key) {
            return v.clone();
        }
        let value = compute();
        map.write()
            .expect("memo poisoned")
            .entry(key)
            .or_insert(value)
            .clone()
    }
}

/// `n!`
pub fn factorial(n: usize) -> Count {
    (2..=n).fold(Count::one(), |acc, k| acc * k)
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `k!! = k (k-2) ... 3 1` for odd `k >= -1`, with `(-1)!! = 1`.
pub fn odd_double_factorial(k: i64) -> Result<Count> {
    if k < -1 || k.rem_euclid(2) != 1 {
        return Err(Error::Domain(format!(
            "double factorial needs an odd argument >= -1, got {k}"
        )));
    }
    let mut acc = Count::one();
    let mut j = k;
    while j > 1 {
        acc *= j as u64;
        j -= 2;
    }
    Ok(acc)
}

/// `(2k - 1)!!`, the number of perfect matchings on `2k` points.
pub(crate) fn matchings(k: usize) -> Count {
    odd_double_factorial(2 * k as i64 - 1).expect("odd argument")
}

static BELL_TABLE: RwLock<Vec<Count>> = RwLock::new(Vec::new());

/// Bell number `B(n)`, via the Bell triangle.
pub fn bell(n: usize) -> Count {
    if let Some(v) = BELL_TABLE.read().expect("bell poisoned").get(n) {
        return v.clone();
    }
    let mut values = vec![Count::one()];
    let mut row = vec![Count::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("nonempty row").clone());
        for (i, x) in row.iter().enumerate() {
            let v = &next[i] + x;
            next.push(v);
        }
        values.push(next[0].clone());
        row = next;
    }
    let mut table = BELL_TABLE.write().expect("bell poisoned");
    if table.len() < values.len() {
        *table = values;
    }
    table[n].clone()
}

static STIRLING2: Memo<(usize, usize)> = Memo::new();

/// Stirling number of the second kind `S(n, r)`: set partitions of `n`
/// points into `r` blocks. Zero when `r > n`.
pub fn stirling2(n: usize, r: usize) -> Count {
    if r > n {
        return Count::zero();
    }
    if r == n {
        return Count::one();
    }
    if r == 0 {
        return Count::zero();
    }
    STIRLING2.get_or((n, r), || stirling2(n - 1, r) * r + stirling2(n - 1, r - 1))
}

static INVOLUTIONS: Memo<usize> = Memo::new();

/// Number of involutions of `n` points: `a_0 = a_1 = 1`,
/// `a_n = a_{n-1} + (n-1) a_{n-2}`.
pub fn involutions(n: usize) -> Count {
    if n < 2 {
        return Count::one();
    }
    INVOLUTIONS.get_or(n, || {
        let mut prev = Count::one();
        let mut cur = Count::one();
        for k in 2..=n {
            let next = &cur + &prev * (k - 1);
            prev = cur;
            cur = next;
        }
        cur
    })
}

/// Selector for [`base_sequence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    Bell,
    Stirling2,
    OddDoubleFactorial,
    Involutions,
    Binomial,
}

/// Uniform entry point for the basic sequences, taking signed arguments so
/// that out-of-range input is reported instead of wrapping.
pub fn base_sequence(kind: SequenceKind, args: &[i64]) -> Result<Count> {
    let nonneg = |i: usize| -> Result<usize> {
        let v = *args
            .get(i)
            .ok_or_else(|| Error::Domain(format!("{kind:?} needs argument {}", i + 1)))?;
        usize::try_from(v).map_err(|_| Error::Domain(format!("{kind:?}: negative argument {v}")))
    };
    match kind {
        SequenceKind::Bell => Ok(bell(nonneg(0)?)),
        SequenceKind::Involutions => Ok(involutions(nonneg(0)?)),
        SequenceKind::OddDoubleFactorial => {
            let k = *args
                .first()
                .ok_or_else(|| Error::Domain("double factorial needs an argument".into()))?;
            odd_double_factorial(k)
        }
        SequenceKind::Stirling2 => {
            let (n, r) = (nonneg(0)?, nonneg(1)?);
            if r > n {
                return Err(Error::Domain(format!("S({n}, {r}) needs r <= n")));
            }
            Ok(stirling2(n, r))
        }
        SequenceKind::Binomial => {
            let (n, k) = (nonneg(0)?, nonneg(1)?);
            Ok(binomial(n, k))
        }
    }
}

/// An integer partition of `n` in multiplicity form: `mu[i - 1]` parts of
/// size `i`. The unique partition of `0` has an empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPartitionSpec {
    n: usize,
    mu: Vec<usize>,
}

impl IntegerPartitionSpec {
    pub fn from_multiplicities(mu: Vec<usize>) -> Result<Self> {
        let n = mu.len();
        let total: usize = mu.iter().enumerate().map(|(i, &m)| (i + 1) * m).sum();
        if total != n {
            return Err(Error::Domain(format!(
                "multiplicities sum to {total}, expected {n}"
            )));
        }
        Ok(IntegerPartitionSpec { n, mu })
    }

    /// Builds the partition with the given parts (any order).
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        let mut mu = vec![0; n];
        for &p in parts {
            if p == 0 {
                return Err(Error::Domain("parts must be positive".into()));
            }
            mu[p - 1] += 1;
        }
        Ok(IntegerPartitionSpec { n, mu })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts of size `i` (1-based); zero outside `1..=n`.
    pub fn multiplicity(&self, i: usize) -> usize {
        if i == 0 || i > self.n {
            0
        } else {
            self.mu[i - 1]
        }
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mu
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<usize> {
        (1..=self.n)
            .rev()
            .flat_map(|i| std::iter::repeat_n(i, self.mu[i - 1]))
            .collect()
    }

    /// Number of parts.
    pub fn height(&self) -> usize {
        self.mu.iter().sum()
    }

    /// `mu_1 + mu_3 + mu_5 + ...`
    pub fn odd_part_count(&self) -> usize {
        self.mu.iter().step_by(2).sum()
    }

    /// Sizes `i` with `mu_i > 0`, paired with their multiplicities.
    pub fn size_classes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mu
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i + 1, m))
    }
}

/// Streams the partitions of `n` in reverse lexicographic order of their
/// non-increasing part lists: `(n)`, `(n-1, 1)`, ..., `(1, ..., 1)`.
pub fn integer_partitions(n: usize) -> IntegerPartitions {
    IntegerPartitions {
        n,
        parts: if n == 0 {
            Some(Vec::new())
        } else {
            Some(vec![n])
        },
    }
}

pub struct IntegerPartitions {
    n: usize,
    parts: Option<Vec<usize>>,
}

impl Iterator for IntegerPartitions {
    type Item = IntegerPartitionSpec;

    fn next(&mut self) -> Option<IntegerPartitionSpec> {
        let current = self.parts.take()?;
        let spec = IntegerPartitionSpec::from_parts(&current).expect("positive parts");
        debug_assert_eq!(spec.n, self.n);
        // Successor: drop trailing 1s, decrement the last part > 1, refill greedily.
        let mut next = current;
        let mut freed = 0;
        while next.last() == Some(&1) {
            next.pop();
            freed += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let p = freed.min(cap);
                next.push(p);
                freed -= p;
            }
            self.parts = Some(next);
        }
        Some(spec)
    }
}

/// Number of set partitions of `{1..n}` whose block sizes follow `mu`:
/// `n! / prod_i mu_i! (i!)^{mu_i}`.
pub fn pi_count(mu: &IntegerPartitionSpec) -> Count {
    let mut denom = Count::one();
    for (i, m) in mu.size_classes() {
        denom *= factorial(m) * num_traits::pow(factorial(i), m);
    }
    factorial(mu.n()) / denom
}

static ENRS: Memo<(usize, usize, usize)> = Memo::new();

/// Number of pairs of equivalences on `{1..n}` with `r` and `s` classes
/// whose join is the universal relation, for `1 <= r, s <= n`.
pub fn e_nrs(n: usize, r: usize, s: usize) -> Result<Count> {
    if r == 0 || s == 0 || r > n || s > n {
        return Err(Error::Domain(format!(
            "e({n},{r},{s}) needs 1 <= r, s <= n"
        )));
    }
    Ok(join_universal_pairs(n, r, s))
}

fn join_universal_pairs(n: usize, r: usize, s: usize) -> Count {
    if n == 0 || r == 0 || s == 0 || r > n || s > n {
        return Count::zero();
    }
    if s == 1 {
        return stirling2(n, r);
    }
    if r == 1 {
        return stirling2(n, s);
    }
    ENRS.get_or((n, r, s), || {
        let mut total = join_universal_pairs(n - 1, r - 1, s) * s
            + join_universal_pairs(n - 1, r, s - 1) * r
            + join_universal_pairs(n - 1, r, s) * (r * s);
        for m in 1..=n.saturating_sub(2) {
            let choose = binomial(n - 2, m);
            let mut inner = Count::zero();
            for a in 1..r {
                for b in 1..s {
                    let weight = a * (s - b) + b * (r - a);
                    let left = join_universal_pairs(m, a, b);
                    if left.is_zero() {
                        continue;
                    }
                    let right = join_universal_pairs(n - m - 1, r - a, s - b);
                    inner += left * right * weight;
                }
            }
            total += choose * inner;
        }
        total
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn double_factorial() {
        assert_eq!(odd_double_factorial(-1).unwrap(), c(1));
        assert_eq!(odd_double_factorial(1).unwrap(), c(1));
        assert_eq!(odd_double_factorial(9).unwrap(), c(945));
        assert!(matches!(odd_double_factorial(4), Err(Error::Domain(_))));
        assert!(matches!(odd_double_factorial(-3), Err(Error::Domain(_))));
    }

    #[test]
    fn small_values() {
        assert_eq!(bell(3), c(5));
        assert_eq!(bell(0), c(1));
        assert_eq!(stirling2(4, 2), c(7));
        assert_eq!(stirling2(0, 0), c(1));
        let inv: Vec<Count> = (0..=5).map(involutions).collect();
        assert_eq!(inv, [1, 1, 2, 4, 10, 26].map(c));
        assert_eq!(binomial(10, 3), c(120));
        assert_eq!(binomial(3, 4), c(0));
        assert_eq!(factorial(0), c(1));
    }

    #[test]
    fn base_sequence_dispatch() {
        assert_eq!(base_sequence(SequenceKind::Bell, &[6]).unwrap(), c(203));
        assert_eq!(
            base_sequence(SequenceKind::Stirling2, &[4, 2]).unwrap(),
            c(7)
        );
        assert_eq!(
            base_sequence(SequenceKind::OddDoubleFactorial, &[-1]).unwrap(),
            c(1)
        );
        assert!(base_sequence(SequenceKind::OddDoubleFactorial, &[2]).is_err());
        assert!(base_sequence(SequenceKind::Stirling2, &[2, 3]).is_err());
        assert!(base_sequence(SequenceKind::Bell, &[-2]).is_err());
    }

    #[test]
    fn partitions_of_zero_and_four() {
        let zero: Vec<_> = integer_partitions(0).collect();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].parts(), Vec::<usize>::new());
        let four: Vec<Vec<usize>> = integer_partitions(4).map(|p| p.parts()).collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(integer_partitions(10).count(), 42);
    }

    #[test]
    fn pi_small() {
        let ones = IntegerPartitionSpec::from_parts(&[1, 1, 1]).unwrap();
        assert_eq!(pi_count(&ones), c(1));
        let two_one = IntegerPartitionSpec::from_parts(&[2, 1]).unwrap();
        assert_eq!(pi_count(&two_one), c(3));
        let total: Count = integer_partitions(6).map(|m| pi_count(&m)).sum();
        assert_eq!(total, c(203));
    }

    #[test]
    fn partition_spec_accessors() {
        let p = IntegerPartitionSpec::from_parts(&[3, 1, 1, 2]).unwrap();
        assert_eq!(p.n(), 7);
        assert_eq!(p.height(), 4);
        assert_eq!(p.odd_part_count(), 3);
        assert_eq!(p.multiplicities(), &[2, 1, 1, 0, 0, 0, 0]);
        assert!(IntegerPartitionSpec::from_multiplicities(vec![1, 1]).is_err());
    }

    #[test]
    fn join_universal_small() {
        assert_eq!(e_nrs(2, 1, 1).unwrap(), c(1));
        assert_eq!(e_nrs(2, 2, 2).unwrap(), c(0));
        let total: Count = (1..=3)
            .flat_map(|r| (1..=3).map(move |s| e_nrs(3, r, s).unwrap()))
            .sum();
        assert_eq!(total, c(15));
        assert!(e_nrs(3, 0, 1).is_err());
        assert!(e_nrs(3, 4, 1).is_err());
    }
}
