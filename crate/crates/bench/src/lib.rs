//! Deterministic inputs shared by the benchmarks.

use hypertree_core::sampling::{sample_bipartite_tree, sample_hypertree, seeded};
use hypertree_core::{
    encode, encode_bipartite, BipartiteCode, BipartiteTree, Hypertree, HypertreeCode, SizePartition,
};

/// A uniform hypertree on `0..=n` whose hyperedges have four vertices (plus
/// one smaller edge when 3 does not divide `n`).
pub fn hypertree(n: usize, seed: u64) -> Hypertree {
    let mut parts = vec![3; n / 3];
    if !n.is_multiple_of(3) {
        parts.push(n % 3);
    }
    let lambda = SizePartition::new(parts).expect("positive parts");
    sample_hypertree(&lambda, None, &mut seeded(seed)).expect("no degree profile")
}

pub fn hypertree_code(n: usize, seed: u64) -> HypertreeCode {
    encode(&hypertree(n, seed)).expect("sampled trees are valid")
}

pub fn bipartite_tree(a: usize, b: usize, seed: u64) -> BipartiteTree {
    sample_bipartite_tree(a, b, None, None, &mut seeded(seed)).expect("no profile requested")
}

pub fn bipartite_code(a: usize, b: usize, seed: u64) -> BipartiteCode {
    encode_bipartite(&bipartite_tree(a, b, seed))
}
