//! Brute-force ground truth on small vertex sets.
//!
//! Hypertrees are found by depth-first search over sets of candidate
//! hyperedges (every vertex subset of size ≥ 2), bipartite trees over sets of
//! edges of `K_{a+1,b+1}`. Nothing here touches the codecs or the counting
//! formulas, so the results can certify both.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bipartite::BipartiteTree;
use crate::counting::{factorial, BigCount};
use crate::error::{Error, Result};
use crate::model::{validate_hypertree, Hypergraph, Hypertree};

/// Largest instances the oracle accepts unless told otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_n: usize,
    pub max_ab: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_n: 5,
            max_ab: 3,
        }
    }
}

/// Search for sets of `target` candidate edges that are pairwise meeting in at
/// most one vertex, have an acyclic incidence graph, and connect all vertices.
/// Candidates are tried in order, so results come out lexicographically.
struct SpanningSearch {
    vertices: usize,
    target: usize,
    candidates: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    /// Component label of every vertex after each prefix of `chosen`.
    labels: Vec<Vec<usize>>,
    /// `Σ (size − 1)` after each prefix of `chosen`.
    excess: Vec<usize>,
    cursor: usize,
    done: bool,
}

impl SpanningSearch {
    fn new(vertices: usize, target: usize, candidates: Vec<Vec<usize>>) -> Self {
        SpanningSearch {
            vertices,
            target,
            candidates,
            chosen: Vec::new(),
            labels: vec![(0..vertices).collect()],
            excess: vec![0],
            cursor: 0,
            done: false,
        }
    }

    fn fits(&self, c: usize) -> bool {
        let e = &self.candidates[c];
        let need = self.vertices - 1;
        let excess = self.excess.last().unwrap() + e.len() - 1;
        // Every later edge adds at least one to the excess.
        if excess + (self.target - self.chosen.len() - 1) > need {
            return false;
        }
        for &other in &self.chosen {
            let shared = self.candidates[other]
                .iter()
                .filter(|v| e.contains(v))
                .count();
            if shared > 1 {
                return false;
            }
        }
        let labels = self.labels.last().unwrap();
        let mut seen: Vec<usize> = e.iter().map(|&v| labels[v]).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    fn push(&mut self, c: usize) {
        let e = &self.candidates[c];
        let mut labels = self.labels.last().unwrap().clone();
        let merged: Vec<usize> = e.iter().map(|&v| labels[v]).collect();
        let into = *merged.iter().min().unwrap();
        for l in labels.iter_mut() {
            if merged.contains(l) {
                *l = into;
            }
        }
        let excess = self.excess.last().unwrap() + e.len() - 1;
        self.chosen.push(c);
        self.labels.push(labels);
        self.excess.push(excess);
    }

    fn pop(&mut self) -> bool {
        match self.chosen.pop() {
            Some(c) => {
                self.labels.pop();
                self.excess.pop();
                self.cursor = c + 1;
                true
            }
            None => false,
        }
    }

    fn spanning(&self) -> bool {
        let labels = self.labels.last().unwrap();
        labels.iter().all(|&l| l == labels[0]) && *self.excess.last().unwrap() == self.vertices - 1
    }
}

impl Iterator for SpanningSearch {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.done {
                return None;
            }
            if self.chosen.len() == self.target {
                let found = self.spanning().then(|| {
                    self.chosen
                        .iter()
                        .map(|&c| self.candidates[c].clone())
                        .collect()
                });
                if !self.pop() {
                    self.done = true;
                }
                if found.is_some() {
                    return found;
                }
                continue;
            }
            if self.cursor >= self.candidates.len() {
                if !self.pop() {
                    self.done = true;
                }
                continue;
            }
            let c = self.cursor;
            if self.fits(c) {
                self.push(c);
            }
            self.cursor = c + 1;
        }
    }
}

/// Every hypertree on `0..=n` with `k` hyperedges, in lexicographic order of
/// the canonical edge list.
pub struct Hypertrees {
    n: usize,
    search: SpanningSearch,
}

impl Iterator for Hypertrees {
    type Item = Hypertree;

    fn next(&mut self) -> Option<Hypertree> {
        let edges = self.search.next()?;
        let sizes: usize = edges.iter().map(Vec::len).sum();
        assert_eq!(sizes, self.n + edges.len());
        let g = Hypergraph::new(self.n, edges).expect("candidates are well formed");
        Some(validate_hypertree(g).expect("search only yields hypertrees"))
    }
}

pub fn enumerate_hypertrees(n: usize, k: usize) -> Result<Hypertrees> {
    enumerate_hypertrees_bounded(n, k, OracleBounds::default())
}

pub fn enumerate_hypertrees_bounded(
    n: usize,
    k: usize,
    bounds: OracleBounds,
) -> Result<Hypertrees> {
    if n > bounds.max_n {
        return Err(Error::BoundExceeded {
            parameter: "n",
            value: n,
            bound: bounds.max_n,
        });
    }
    if k == 0 || k > n {
        return Err(Error::ProfileMismatch(format!(
            "hyperedge count k = {k} outside 1..={n}"
        )));
    }
    let mut candidates: Vec<Vec<usize>> = (0u32..1 << (n + 1))
        .filter(|m| m.count_ones() >= 2)
        .map(|m| (0..=n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    candidates.sort_unstable();
    Ok(Hypertrees {
        n,
        search: SpanningSearch::new(n + 1, k, candidates),
    })
}

/// Every spanning tree of `K_{a+1,b+1}`, in lexicographic order of edges.
pub struct BipartiteTrees {
    a: usize,
    b: usize,
    search: SpanningSearch,
}

impl Iterator for BipartiteTrees {
    type Item = BipartiteTree;

    fn next(&mut self) -> Option<BipartiteTree> {
        let edges = self.search.next()?;
        let pairs = edges.iter().map(|e| (e[0], e[1] - self.a - 1)).collect();
        Some(BipartiteTree::new(self.a, self.b, pairs).expect("search only yields trees"))
    }
}

pub fn enumerate_bipartite_trees(a: usize, b: usize) -> Result<BipartiteTrees> {
    enumerate_bipartite_trees_bounded(a, b, OracleBounds::default())
}

pub fn enumerate_bipartite_trees_bounded(
    a: usize,
    b: usize,
    bounds: OracleBounds,
) -> Result<BipartiteTrees> {
    for (parameter, value) in [("a", a), ("b", b)] {
        if value > bounds.max_ab {
            return Err(Error::BoundExceeded {
                parameter,
                value,
                bound: bounds.max_ab,
            });
        }
    }
    let candidates = (0..=a)
        .flat_map(|i| (0..=b).map(move |j| vec![i, a + 1 + j]))
        .collect();
    Ok(BipartiteTrees {
        a,
        b,
        search: SpanningSearch::new(a + b + 2, a + b + 1, candidates),
    })
}

/// What a census counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Hypertrees { n: usize, k: usize },
    BipartiteTrees { a: usize, b: usize },
}

/// Exact counts grouped by profile: `(λ, μ)` for hypertrees, `(α, β)` for
/// bipartite trees.
#[derive(Debug, Clone)]
pub struct EnumerationReport {
    pub family: Family,
    pub total: BigCount,
    pub profiles: BTreeMap<(Vec<usize>, Vec<usize>), BigCount>,
    pub elapsed: Duration,
}

impl EnumerationReport {
    fn tally<I>(family: Family, keys: I, start: Instant) -> Self
    where
        I: Iterator<Item = (Vec<usize>, Vec<usize>)>,
    {
        let mut total = BigUint::zero();
        let mut profiles: BTreeMap<_, BigCount> = BTreeMap::new();
        for key in keys {
            total += 1u32;
            *profiles.entry(key).or_default() += 1u32;
        }
        EnumerationReport {
            family,
            total,
            profiles,
            elapsed: start.elapsed(),
        }
    }
}

pub fn profile_census(n: usize, k: usize) -> Result<EnumerationReport> {
    profile_census_bounded(n, k, OracleBounds::default())
}

pub fn profile_census_bounded(
    n: usize,
    k: usize,
    bounds: OracleBounds,
) -> Result<EnumerationReport> {
    let start = Instant::now();
    let trees = enumerate_hypertrees_bounded(n, k, bounds)?;
    let keys = trees.map(|t| {
        let (lambda, mu) = t.profile();
        (lambda.parts().to_vec(), mu.as_slice().to_vec())
    });
    Ok(EnumerationReport::tally(
        Family::Hypertrees { n, k },
        keys,
        start,
    ))
}

pub fn bipartite_census(a: usize, b: usize) -> Result<EnumerationReport> {
    bipartite_census_bounded(a, b, OracleBounds::default())
}

pub fn bipartite_census_bounded(
    a: usize,
    b: usize,
    bounds: OracleBounds,
) -> Result<EnumerationReport> {
    let start = Instant::now();
    let trees = enumerate_bipartite_trees_bounded(a, b, bounds)?;
    let keys = trees.map(|t| t.degree_profile());
    Ok(EnumerationReport::tally(
        Family::BipartiteTrees { a, b },
        keys,
        start,
    ))
}

/// `Σ_T ∏_j (λ_j − 1)!` over every hypertree with `k` edges on `0..=n`.
pub fn weighted_census(n: usize, k: usize) -> Result<BigCount> {
    weighted_census_bounded(n, k, OracleBounds::default())
}

pub fn weighted_census_bounded(n: usize, k: usize, bounds: OracleBounds) -> Result<BigCount> {
    let mut sum = BigUint::zero();
    for t in enumerate_hypertrees_bounded(n, k, bounds)? {
        let w: BigUint = t.edges().iter().map(|e| factorial(e.size() - 2)).product();
        sum += w;
    }
    Ok(sum)
}

/// Every partition of `{1, …, n}` into `k` blocks, via restricted growth strings.
pub fn set_partitions(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        x: usize,
        n: usize,
        k: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if x > n {
            if blocks.len() == k {
                out.push(blocks.clone());
            }
            return;
        }
        // Not enough elements left to open the missing blocks.
        if blocks.len() + (n - x + 1) < k {
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(x);
            rec(x + 1, n, k, blocks, out);
            blocks[i].pop();
        }
        if blocks.len() < k {
            blocks.push(vec![x]);
            rec(x + 1, n, k, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every word of `length` letters over `0..alphabet`, lexicographically.
pub fn all_words(length: usize, alphabet: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if alphabet == 0 && length > 0 {
        0
    } else {
        alphabet.pow(length as u32)
    };
    (0..total).map(move |mut idx| {
        let mut w = vec![0; length];
        for slot in w.iter_mut().rev() {
            *slot = idx % alphabet;
            idx /= alphabet;
        }
        w
    })
}

/// Number of elements of an iterator as an exact count.
pub fn count<I: Iterator>(it: I) -> BigCount {
    it.fold(BigUint::zero(), |acc, _| acc + BigUint::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_lists(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
        enumerate_hypertrees(n, k)
            .unwrap()
            .map(|t| t.graph().edge_lists())
            .collect()
    }

    #[test]
    fn single_edge() {
        assert_eq!(edge_lists(1, 1), vec![vec![vec![0, 1]]]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(edge_lists(3, 2).len(), 12);
        assert_eq!(edge_lists(4, 4).len(), 125);
        assert_eq!(enumerate_bipartite_trees(0, 0).unwrap().count(), 1);
        assert_eq!(enumerate_bipartite_trees(1, 1).unwrap().count(), 4);
        assert_eq!(enumerate_bipartite_trees(2, 1).unwrap().count(), 12);
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        for n in 1..=4 {
            for k in 1..=n {
                let all = edge_lists(n, k);
                assert!(all.windows(2).all(|w| w[0] < w[1]), "n={n} k={k}");
            }
        }
        let trees: Vec<_> = enumerate_bipartite_trees(2, 2).unwrap().collect();
        assert!(trees.windows(2).all(|w| w[0].edges() < w[1].edges()));
    }

    #[test]
    fn census_n3_k2() {
        let report = profile_census(3, 2).unwrap();
        assert_eq!(report.total, BigUint::from(12u32));
        let expected: BTreeMap<_, _> = [
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ]
        .into_iter()
        .map(|mu| ((vec![2, 1], mu), BigUint::from(3u32)))
        .collect();
        assert_eq!(report.profiles, expected);

        let single = profile_census(1, 1).unwrap();
        assert_eq!(single.profiles.len(), 1);
        assert_eq!(single.profiles[&(vec![1], vec![0, 0])], BigUint::from(1u32));
    }

    #[test]
    fn weighted() {
        assert_eq!(weighted_census(3, 2).unwrap(), BigUint::from(12u32));
        assert_eq!(weighted_census(4, 2).unwrap(), BigUint::from(55u32));
        assert_eq!(weighted_census(4, 4).unwrap(), BigUint::from(125u32));
    }

    #[test]
    fn bounds() {
        assert_eq!(
            enumerate_hypertrees(6, 2).err().unwrap().class(),
            "BoundExceeded"
        );
        assert_eq!(
            enumerate_bipartite_trees(4, 0).err().unwrap().class(),
            "BoundExceeded"
        );
        let wide = OracleBounds {
            max_n: 6,
            max_ab: 4,
        };
        assert_eq!(
            enumerate_hypertrees_bounded(6, 6, wide).unwrap().count(),
            16807
        );
        assert_eq!(
            enumerate_hypertrees(3, 0).err().unwrap().class(),
            "ProfileMismatch"
        );
    }

    #[test]
    fn helper_enumerations() {
        assert_eq!(set_partitions(4, 2).len(), 7);
        assert_eq!(set_partitions(3, 3), vec![vec![vec![1], vec![2], vec![3]]]);
        assert_eq!(set_partitions(0, 0).len(), 1);
        assert_eq!(all_words(2, 3).count(), 9);
        assert_eq!(
            all_words(0, 0).collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(all_words(2, 2).last().unwrap(), vec![1, 1]);
    }
}
