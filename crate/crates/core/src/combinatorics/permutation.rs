use std::fmt;

use super::partition::Partition;
use super::union_find::RollbackUnionFind;
use crate::error::{Error, Result};

/// A permutation of `{0, …, d−1}` in one-line form: `images[x]` is the image of `x`.
///
/// Products compose right to left: `a.compose(&b)` applies `b` first, so the
/// product `τ_1 · τ_2 ⋯ τ_r` is `τ_1.compose(τ_2)…`. `Display` uses 1-based
/// cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Self { images: (0..d).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation of `d` points from 0-based disjoint cycles.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut used = vec![false; d];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= d || std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidPermutation(format!("bad cycles {cycles:?} on {d} points")));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    /// The transposition exchanging `i` and `j` (0-based, distinct).
    pub fn transposition(d: usize, i: usize, j: usize) -> Result<Self> {
        if i == j || i >= d || j >= d {
            return Err(Error::InvalidPermutation(format!("({i} {j}) is not a transposition on {d} points")));
        }
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(i, j);
        Ok(Self { images })
    }

    /// A fixed permutation of the given cycle type, with cycles on
    /// consecutive points: `(0 1 … α_1−1)(α_1 …)…`.
    pub fn of_type(alpha: &Partition) -> Self {
        let mut images = Vec::with_capacity(alpha.size());
        let mut start = 0;
        for &len in alpha.parts() {
            images.extend((start + 1..start + len).chain(std::iter::once(start)));
            start += len;
        }
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Self { images }
    }

    /// `ρ σ ρ⁻¹`.
    pub fn conjugate_by(&self, rho: &Self) -> Self {
        rho.compose(self).compose(&rho.inverse())
    }

    /// `self ∘ (i j)` in place.
    pub fn right_multiply_transposition(&mut self, i: usize, j: usize) {
        self.images.swap(i, j);
    }

    /// The two moved points if this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let mut moved = self.images.iter().enumerate().filter(|(x, &y)| *x != y).map(|(x, _)| x);
        let (a, b) = (moved.next()?, moved.next()?);
        (moved.next().is_none() && self.images[a] == b).then_some((a, b))
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle lengths as a partition of `d`. Panics for `d = 0`.
    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(lens)
    }

    /// Whether `a` and `b` lie on the same cycle.
    pub fn same_cycle(&self, a: usize, b: usize) -> bool {
        let mut x = self.images[a];
        loop {
            if x == b {
                return true;
            }
            if x == a {
                return false;
            }
            x = self.images[x];
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// All `d(d−1)/2` transpositions of `S_d`, ordered by `(i, j)` with `i < j`.
pub fn transpositions_of(d: usize) -> Vec<Permutation> {
    transposition_pairs(d)
        .into_iter()
        .map(|(i, j)| Permutation::transposition(d, i, j).expect("valid pair"))
        .collect()
}

pub(crate) fn transposition_pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect()
}

/// Whether the transpositions generate `S_d`.
///
/// A subgroup of `S_d` generated by transpositions is all of `S_d` exactly when
/// it acts transitively, i.e. when the graph with one edge per transposition is
/// connected, so this is a union–find connectivity check.
pub fn generates_transitively(taus: &[Permutation], d: usize) -> Result<bool> {
    let mut uf = RollbackUnionFind::new(d);
    for tau in taus {
        let pair = (tau.degree() == d).then(|| tau.as_transposition()).flatten();
        let Some((i, j)) = pair else {
            return Err(Error::NotATransposition { perm: tau.to_string(), degree: d });
        };
        uf.union(i, j);
    }
    Ok(d == 0 || uf.components() == 1)
}
