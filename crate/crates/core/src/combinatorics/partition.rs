use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::numbers::factorial;
use crate::error::{Error, Result};

/// A nonempty partition, parts stored weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; they are sorted decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// `(1, 1, …, 1)`, the cycle type of the identity in `S_d`.
    pub fn ones(d: usize) -> Self {
        assert!(d > 0, "empty partition");
        Self { parts: vec![1; d] }
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.is_empty() && parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `d`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `m`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `k = Σ (α_i − 1)`, the branching over ∞.
    pub fn branching(&self) -> usize {
        self.size() - self.len()
    }

    /// Part value → multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// `#Aut(α)`: product of the factorials of the part multiplicities.
    pub fn aut_count(&self) -> BigUint {
        self.multiplicities().values().map(|&c| factorial(c)).product()
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `z_α = ∏ i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities()
            .iter()
            .map(|(&v, &c)| num_traits::pow(BigUint::from(v), c) * factorial(c))
            .fold(BigUint::one(), |a, b| a * b)
    }

    /// Number of permutations in `S_d` with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated positive integers, e.g. `3,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("'{p}' is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `d` into exactly `m` parts, lexicographically decreasing.
pub fn enumerate_partitions(d: usize, m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if m == 0 || d < m {
        return out;
    }
    let mut prefix = Vec::with_capacity(m);
    fill_parts(d, m, d, &mut prefix, &mut |p| out.push(Partition::from_sorted(p.to_vec())));
    out
}

// Positive parts, each ≤ cap, exactly `m` of them, summing to `d`.
fn fill_parts(d: usize, m: usize, cap: usize, prefix: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if m == 0 {
        if d == 0 {
            emit(prefix);
        }
        return;
    }
    if d < m {
        return;
    }
    let hi = cap.min(d - (m - 1));
    let lo = d.div_ceil(m);
    for first in (lo..=hi).rev() {
        prefix.push(first);
        fill_parts(d - first, m - 1, first, prefix, emit);
        prefix.pop();
    }
}

/// All partitions of `d` (any number of parts), lexicographically decreasing.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill_any(d, d, &mut prefix, &mut out);
    out
}

fn fill_any(d: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if d == 0 {
        if !prefix.is_empty() {
            out.push(Partition::from_sorted(prefix.clone()));
        }
        return;
    }
    for first in (1..=cap.min(d)).rev() {
        prefix.push(first);
        fill_any(d - first, first, prefix, out);
        prefix.pop();
    }
}

/// Weakly decreasing length-`len` vectors of nonnegative integers summing to
/// `total`, lexicographically decreasing.
pub fn nonneg_vectors(total: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    // a nonnegative weakly decreasing vector is a partition of total + len
    // into exactly len positive parts, shifted down by one
    let mut prefix = Vec::with_capacity(len);
    fill_parts(total + len, len, total + len, &mut prefix, &mut |p| {
        out.push(p.iter().map(|x| x - 1).collect())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_partitions(4, 2), vec![p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(enumerate_partitions(3, 3), vec![p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(5, 2), vec![p(&[4, 1]), p(&[3, 2])]);
        assert!(enumerate_partitions(2, 3).is_empty());
    }

    #[test]
    fn partition_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=10).map(|d| partitions_of(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for d in 1..=10 {
            let by_len: usize = (1..=d).map(|m| enumerate_partitions(d, m).len()).sum();
            assert_eq!(by_len, partitions_of(d).len());
            let all = partitions_of(d);
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn aut_count_examples() {
        assert_eq!(p(&[1, 1, 1]).aut_count(), BigUint::from(6u32));
        assert_eq!(p(&[2, 1]).aut_count(), BigUint::from(1u32));
        assert_eq!(p(&[3, 3, 2, 2, 2]).aut_count(), BigUint::from(12u32));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for d in 1..=8 {
            let total: BigUint = partitions_of(d).iter().map(Partition::class_size).sum();
            assert_eq!(total, factorial(d));
        }
    }

    #[test]
    fn parse_and_canonicalise() {
        assert_eq!("1,2".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!(" 3 , 1 ,1".parse::<Partition>().unwrap().to_string(), "(3,1,1)");
        assert!("2,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
    }

    #[test]
    fn nonneg_vectors_small() {
        assert_eq!(nonneg_vectors(2, 2), vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(nonneg_vectors(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(nonneg_vectors(4, 1), vec![vec![4]]);
    }
}
