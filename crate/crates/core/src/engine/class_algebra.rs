//! Counting by cycle-type propagation plus a connectivity sieve.
//!
//! Step one counts all (possibly disconnected) r-tuples whose product lies in
//! each conjugacy class by iterating the transposition transition matrix.
//! Step two fixes a target permutation `ξ` and strips the disconnected tuples:
//! the orbits of a tuple partition `{1..d}` into blocks, each a union of cycles
//! of `ξ`, and the tuple splits into transitive sub-tuples on the blocks whose
//! slots interleave in `binom(r; r_1, …, r_l)` ways. Peeling off the block
//! containing the first cycle gives
//!
//! ```text
//! A(β, r) = Σ_{S ∋ c_1} Σ_{r_1} binom(r, r_1) · C(β|_S, r_1) · A(β|_{S^c}, r − r_1)
//! ```
//!
//! where `A` counts all tuples and `C` only transitive ones, both for a fixed
//! target. Solving for the `S = everything` term yields `C`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::{CountReport, HurwitzInstance, Method};
use crate::combinatorics::{binomial, partitions_of, transposition_pairs, Partition, Permutation};

/// For each cycle type `C` of `S_d` and a fixed representative `ρ` of type `C`,
/// the number of transpositions `τ` with `ρ·τ` of each type `C′`.
#[derive(Debug)]
pub struct TransitionTable {
    types: Vec<Partition>,
    index: HashMap<Partition, usize>,
    // sparse rows: (target type index, number of transpositions)
    rows: Vec<Vec<(usize, u64)>>,
}

impl TransitionTable {
    pub fn new(d: usize) -> Self {
        let types = partitions_of(d);
        let index: HashMap<Partition, usize> = types.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let pairs = transposition_pairs(d);
        let rows = types
            .iter()
            .map(|c| {
                let rho = Permutation::of_type(c);
                let mut counts: HashMap<usize, u64> = HashMap::new();
                for &(i, j) in &pairs {
                    let mut p = rho.clone();
                    p.right_multiply_transposition(i, j);
                    *counts.entry(index[&p.cycle_type()]).or_default() += 1;
                }
                let mut row: Vec<_> = counts.into_iter().collect();
                row.sort_unstable();
                row
            })
            .collect();
        Self { types, index, rows }
    }

    /// Memoized table for degree `d`.
    pub fn for_degree(d: usize) -> Arc<TransitionTable> {
        static TABLES: OnceLock<Mutex<HashMap<usize, Arc<TransitionTable>>>> = OnceLock::new();
        let tables = TABLES.get_or_init(Default::default);
        if let Some(t) = tables.lock().expect("table cache poisoned").get(&d) {
            return Arc::clone(t);
        }
        let table = Arc::new(TransitionTable::new(d));
        Arc::clone(tables.lock().expect("table cache poisoned").entry(d).or_insert(table))
    }

    pub fn types(&self) -> &[Partition] {
        &self.types
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `N(C → C′)`.
    pub fn count(&self, from: &Partition, to: &Partition) -> u64 {
        let (Some(f), Some(t)) = (self.index_of(from), self.index_of(to)) else {
            return 0;
        };
        self.rows[f].iter().find(|(j, _)| *j == t).map_or(0, |(_, n)| *n)
    }

    /// Class vectors after `0..=steps` multiplications, starting from the
    /// identity: entry `[s][C]` is the number of `s`-tuples of transpositions
    /// whose product has type `C`.
    pub fn propagate(&self, steps: usize) -> Vec<Vec<BigUint>> {
        let n = self.types.len();
        let mut current = vec![BigUint::zero(); n];
        // identity type (1^d) is last in lexicographically decreasing order
        current[n - 1] = BigUint::one();
        let mut out = Vec::with_capacity(steps + 1);
        for _ in 0..steps {
            let mut next = vec![BigUint::zero(); n];
            for (c, v) in current.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                for &(c2, k) in &self.rows[c] {
                    next[c2] += v * k;
                }
            }
            out.push(std::mem::replace(&mut current, next));
        }
        out.push(current);
        out
    }
}

/// Number of `t`-tuples of transpositions (any connectivity) with product
/// equal to one fixed permutation of each type, for `t = 0..=steps`.
pub fn fixed_target_counts(d: usize, steps: usize) -> Vec<Vec<BigUint>> {
    let table = TransitionTable::for_degree(d);
    let sizes: Vec<BigUint> = table.types().iter().map(Partition::class_size).collect();
    table
        .propagate(steps)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .zip(&sizes)
                .map(|(v, s)| {
                    debug_assert!((&v % s).is_zero());
                    v / s
                })
                .collect()
        })
        .collect()
}

#[derive(Default)]
struct Sieve {
    steps: usize,
    fixed: HashMap<usize, (Arc<TransitionTable>, Vec<Vec<BigUint>>)>,
    connected: HashMap<(Vec<usize>, usize), BigUint>,
}

impl Sieve {
    fn new(steps: usize) -> Self {
        Self { steps, ..Default::default() }
    }

    /// `A(β, t)`: all tuples with product a fixed permutation of type `β`.
    fn all(&mut self, beta: &[usize], t: usize) -> BigUint {
        if beta.is_empty() {
            return if t == 0 { BigUint::one() } else { BigUint::zero() };
        }
        let d: usize = beta.iter().sum();
        let steps = self.steps;
        let (table, counts) = self
            .fixed
            .entry(d)
            .or_insert_with(|| (TransitionTable::for_degree(d), fixed_target_counts(d, steps)));
        let idx = table.index_of(&Partition::from_sorted(beta.to_vec())).expect("known type");
        counts[t][idx].clone()
    }

    /// `C(β, t)`: transitive tuples with product a fixed permutation of type `β`.
    fn connected(&mut self, beta: &[usize], t: usize) -> BigUint {
        let d: usize = beta.iter().sum();
        let m = beta.len();
        // a transitive tuple on d points has t = d + m + 2g − 2 with g ≥ 0
        if t + 2 < d + m || (t + d + m) % 2 == 1 {
            return BigUint::zero();
        }
        let key = (beta.to_vec(), t);
        if let Some(v) = self.connected.get(&key) {
            return v.clone();
        }

        let mut acc = BigInt::from(self.all(beta, t));
        // S always contains cycle 0; mask ranges over the other m−1 cycles, excluding "all"
        let full = (1usize << (m - 1)) - 1;
        for mask in 0..full {
            let (mut inside, mut outside) = (vec![beta[0]], Vec::new());
            for (i, &part) in beta.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 1 {
                    inside.push(part);
                } else {
                    outside.push(part);
                }
            }
            // beta is sorted decreasing, so both halves already are
            for t1 in 0..=t {
                let c = self.connected(&inside, t1);
                if c.is_zero() {
                    continue;
                }
                let a = self.all(&outside, t - t1);
                if a.is_zero() {
                    continue;
                }
                acc -= BigInt::from(binomial(t, t1) * c * a);
            }
        }
        let value = match acc.sign() {
            Sign::Minus => unreachable!("sieve produced a negative count for {beta:?}, t = {t}"),
            _ => acc.to_biguint().expect("nonnegative"),
        };
        self.connected.insert(key, value.clone());
        value
    }
}

/// Same contract as [`super::hurwitz_brute`], computed without enumerating tuples.
pub fn hurwitz_class_algebra(inst: &HurwitzInstance) -> CountReport {
    let mut sieve = Sieve::new(inst.r());
    let per_target = sieve.connected(inst.alpha().parts(), inst.r());
    let tuple_count = per_target * inst.alpha().class_size();
    CountReport::new(inst.clone(), tuple_count, Method::ClassAlgebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{brute_fixed_target_factorizations, hurwitz_brute, EngineOptions};

    fn inst(g: i64, parts: &[usize]) -> HurwitzInstance {
        HurwitzInstance::new(g, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(hurwitz_class_algebra(&inst(1, &[2])).hurwitz_number.to_string(), "1/2");
        assert_eq!(hurwitz_class_algebra(&inst(0, &[3])).hurwitz_number.to_string(), "1");
        assert_eq!(hurwitz_class_algebra(&inst(1, &[1, 1])).hurwitz_number.to_string(), "1/2");
        let r = hurwitz_class_algebra(&inst(0, &[1]));
        assert_eq!(r.tuple_count, BigUint::one());
        assert_eq!(r.method, Method::ClassAlgebra);
    }

    #[test]
    fn transition_rows_sum_to_pool_size() {
        for d in 1..=7 {
            let t = TransitionTable::new(d);
            for c in t.types() {
                let s: u64 = t.types().iter().map(|c2| t.count(c, c2)).sum();
                assert_eq!(s as usize, d * (d - 1) / 2);
            }
        }
        let t = TransitionTable::new(3);
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(t.count(&p(&[1, 1, 1]), &p(&[2, 1])), 3);
        assert_eq!(t.count(&p(&[2, 1]), &p(&[3])), 2);
        assert_eq!(t.count(&p(&[2, 1]), &p(&[1, 1, 1])), 1);
        assert_eq!(t.count(&p(&[3]), &p(&[2, 1])), 3);
    }

    #[test]
    fn fixed_target_counts_match_brute() {
        let opts = EngineOptions::default();
        for d in 1..=4 {
            let counts = fixed_target_counts(d, 4);
            let table = TransitionTable::for_degree(d);
            for (idx, ty) in table.types().iter().enumerate() {
                let xi = Permutation::of_type(ty);
                for t in 0..=4 {
                    let brute = brute_fixed_target_factorizations(&xi, t, &opts).unwrap();
                    assert_eq!(counts[t][idx], brute, "d={d} type={ty} t={t}");
                }
            }
        }
    }

    #[test]
    fn agrees_with_brute_on_small_instances() {
        let opts = EngineOptions::default();
        for d in 1..=4 {
            for alpha in partitions_of(d) {
                for g in 0..=2 {
                    let i = HurwitzInstance::new(g, alpha.clone()).unwrap();
                    if i.r() > 7 {
                        continue;
                    }
                    assert_eq!(hurwitz_class_algebra(&i).tuple_count, hurwitz_brute(&i, &opts).unwrap().tuple_count, "{i}");
                }
            }
        }
    }
}
