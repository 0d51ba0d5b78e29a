//! Partitions, permutations and the counting helpers the engines share.

mod numbers;
mod partition;
mod permutation;
mod union_find;

pub use numbers::{binomial, factorial, pow_usize};
pub use partition::{enumerate_partitions, nonneg_vectors, partitions_of, Partition};
pub use permutation::{generates_transitively, transpositions_of, Permutation};
pub(crate) use permutation::transposition_pairs;
pub use union_find::RollbackUnionFind;
