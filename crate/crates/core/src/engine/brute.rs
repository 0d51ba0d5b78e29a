//! Depth-first enumeration of transposition tuples.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{CountReport, EngineOptions, HurwitzInstance, Method};
use crate::combinatorics::transposition_pairs;
use crate::combinatorics::{Partition, Permutation, RollbackUnionFind};
use crate::error::{Error, Result};

/// `(d(d−1)/2)^r`, the size of the unpruned search space.
pub fn candidate_tuples(d: usize, r: usize) -> BigUint {
    num_traits::pow(BigUint::from(d * d.saturating_sub(1) / 2), r)
}

fn check_budget(d: usize, r: usize, budget: u128) -> Result<()> {
    let candidates = candidate_tuples(d, r);
    if candidates > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { candidates: candidates.to_string(), budget });
    }
    Ok(())
}

struct Search<'a> {
    pairs: &'a [(usize, usize)],
    target_type: &'a Partition,
    product: Permutation,
    cycles: usize,
    uf: RollbackUnionFind,
}

impl Search<'_> {
    fn push(&mut self, i: usize, j: usize) {
        if self.product.same_cycle(i, j) {
            self.cycles += 1;
        } else {
            self.cycles -= 1;
        }
        self.product.right_multiply_transposition(i, j);
        self.uf.union(i, j);
    }

    fn pop(&mut self, i: usize, j: usize) {
        self.uf.undo();
        self.product.right_multiply_transposition(i, j);
        // i and j share a cycle of the restored product iff the push split it
        if self.product.same_cycle(i, j) {
            self.cycles -= 1;
        } else {
            self.cycles += 1;
        }
    }

    fn count(&mut self, remaining: usize) -> u128 {
        let m = self.target_type.len();
        // each transposition moves the cycle count and the component count by at most one
        if self.cycles.abs_diff(m) > remaining || self.uf.components() - 1 > remaining {
            return 0;
        }
        if remaining == 0 {
            let hit = self.uf.components() == 1 && self.product.cycle_type() == *self.target_type;
            return u128::from(hit);
        }
        let mut total = 0;
        for &(i, j) in self.pairs {
            self.push(i, j);
            total += self.count(remaining - 1);
            self.pop(i, j);
        }
        total
    }
}

/// Counts transitive r-tuples of transpositions with product of type α by
/// enumeration, fanning out over the first transposition.
pub fn hurwitz_brute(inst: &HurwitzInstance, opts: &EngineOptions) -> Result<CountReport> {
    let (d, r) = (inst.d(), inst.r());
    check_budget(d, r, opts.budget)?;
    let pairs = transposition_pairs(d);
    let fresh = || Search {
        pairs: &pairs,
        target_type: inst.alpha(),
        product: Permutation::identity(d),
        cycles: d,
        uf: RollbackUnionFind::new(d),
    };
    let total: u128 = if r == 0 {
        fresh().count(0)
    } else {
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let mut s = fresh();
                s.push(i, j);
                s.count(r - 1)
            })
            .sum()
    };
    Ok(CountReport::new(inst.clone(), BigUint::from(total), Method::Brute))
}

/// Number of ordered `t`-tuples of transpositions whose product is exactly
/// `xi`, with no transitivity requirement.
pub fn brute_fixed_target_factorizations(xi: &Permutation, t: usize, opts: &EngineOptions) -> Result<BigUint> {
    let d = xi.degree();
    check_budget(d, t, opts.budget)?;
    let pairs = transposition_pairs(d);
    let target_cycles = xi.cycle_count();

    fn walk(
        product: &mut Permutation,
        cycles: usize,
        remaining: usize,
        pairs: &[(usize, usize)],
        xi: &Permutation,
        target_cycles: usize,
    ) -> u128 {
        if cycles.abs_diff(target_cycles) > remaining {
            return 0;
        }
        if remaining == 0 {
            return u128::from(product == xi);
        }
        let mut total = 0;
        for &(i, j) in pairs {
            let next = if product.same_cycle(i, j) { cycles + 1 } else { cycles - 1 };
            product.right_multiply_transposition(i, j);
            total += walk(product, next, remaining - 1, pairs, xi, target_cycles);
            product.right_multiply_transposition(i, j);
        }
        total
    }

    let total: u128 = if t == 0 {
        u128::from(*xi == Permutation::identity(d))
    } else {
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let mut product = Permutation::identity(d);
                product.right_multiply_transposition(i, j);
                walk(&mut product, d - 1, t - 1, &pairs, xi, target_cycles)
            })
            .sum()
    };
    Ok(BigUint::from(total))
}
