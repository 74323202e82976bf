//! Domain types: hypergraphs, validated hypertrees, size partitions, degree
//! vectors, set partitions and code words.
//!
//! Every type is stored in canonical form (sorted vertex lists, sorted edge
//! lists, blocks ordered by their minimum) so that structural equality is
//! plain `==`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Vertex label. A hypergraph on `n + 1` vertices uses exactly the labels `0..=n`.
pub type Vertex = usize;

/// A set of at least two vertices, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(Vec<Vertex>);

impl Hyperedge {
    /// Sorts the labels and rejects sets with fewer than two elements or repeats.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!(
                "vertex {} repeated in hyperedge {:?}",
                w[0], vertices
            )));
        }
        if vertices.len() < 2 {
            return Err(Error::Malformed(format!(
                "hyperedge {vertices:?} has fewer than two vertices"
            )));
        }
        Ok(Hyperedge(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl AsRef<[Vertex]> for Hyperedge {
    fn as_ref(&self) -> &[Vertex] {
        &self.0
    }
}

/// A hypergraph on the vertices `0..=n` with pairwise distinct hyperedges.
///
/// Only structural well-formedness is enforced here; see [`validate_hypertree`]
/// for the tree axioms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
}

impl Hypergraph {
    /// Builds a hypergraph from raw vertex lists, canonicalizing the order of
    /// vertices within each edge and of the edges themselves.
    pub fn new(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut canon = Vec::with_capacity(edges.len());
        for e in edges {
            let e = Hyperedge::new(e)?;
            if let Some(&v) = e.vertices().last().filter(|&&v| v > n) {
                return Err(Error::Malformed(format!(
                    "hyperedge {:?} uses label {v} > n = {n}",
                    e.vertices()
                )));
            }
            canon.push(e);
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!(
                "hyperedge {:?} listed twice",
                w[0].vertices()
            )));
        }
        Ok(Hypergraph { n, edges: canon })
    }

    /// Largest vertex label; the vertex set is `0..=n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.n + 1
    }

    /// Number of hyperedges.
    pub fn k(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for e in &self.edges {
            for &v in e.vertices() {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Edge indices incident to each vertex, in canonical edge order.
    pub(crate) fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n + 1];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e.vertices() {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Canonical edge list as plain vectors.
    pub fn edge_lists(&self) -> Vec<Vec<Vertex>> {
        self.edges.iter().map(|e| e.vertices().to_vec()).collect()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{:?}", e.vertices())?;
        }
        f.write_str("]")
    }
}

/// A connected hyperforest: distinct hyperedges meet in at most one vertex and
/// every cycle lies inside a single hyperedge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypertree {
    graph: Hypergraph,
}

/// Checks the hypertree axioms.
///
/// The checks run in a fixed order and the first failure wins: overlapping
/// edges, then cycles of the incidence graph, then connectivity, then
/// `sum of sizes = n + k`. Acyclicity is tested on the bipartite incidence
/// graph (vertices + edges), which is a forest exactly when every cycle of
/// the hypergraph lies inside a hyperedge and no two edges overlap.
pub fn validate_hypertree(g: Hypergraph) -> Result<Hypertree> {
    let n = g.n;
    let k = g.k();

    // Incidence-forest test: an edge closes a cycle iff two of its vertices
    // are already connected through earlier edges.
    let mut uf = UnionFind::new(n + 1);
    let mut closing = None;
    for (i, e) in g.edges.iter().enumerate() {
        let vs = e.vertices();
        if has_connected_pair(&mut uf, vs) {
            closing = Some(i);
            break;
        }
        for &w in &vs[1..] {
            uf.union(vs[0], w);
        }
    }
    if let Some(i) = closing {
        if let Some((a, b)) = first_overlap(&g) {
            return Err(Error::EdgeOverlap {
                first: g.edges[a].vertices().to_vec(),
                second: g.edges[b].vertices().to_vec(),
            });
        }
        return Err(Error::CycleOutsideEdge {
            edge: g.edges[i].vertices().to_vec(),
        });
    }

    if let Some(v) = (1..=n).find(|&v| !uf.same(0, v)) {
        return Err(Error::Disconnected { unreachable: v });
    }

    let sum: usize = g.edges.iter().map(Hyperedge::size).sum();
    if sum != n + k {
        return Err(Error::SizeIdentityViolated {
            sum,
            expected: n + k,
        });
    }
    debug_assert_eq!(g.degrees().iter().sum::<usize>(), sum);

    Ok(Hypertree { graph: g })
}

fn has_connected_pair(uf: &mut UnionFind, vs: &[Vertex]) -> bool {
    let mut roots: Vec<usize> = vs.iter().map(|&v| uf.find(v)).collect();
    roots.sort_unstable();
    roots.windows(2).any(|w| w[0] == w[1])
}

/// First pair `(i, j)`, `i < j`, ordered by `j` then `i`, of edges sharing two
/// or more vertices.
fn first_overlap(g: &Hypergraph) -> Option<(usize, usize)> {
    let inc = g.incidence();
    let mut shared = vec![0usize; g.k()];
    for (j, e) in g.edges.iter().enumerate() {
        let mut touched = Vec::new();
        let mut found = None;
        for &v in e.vertices() {
            for &i in inc[v].iter().take_while(|&&i| i < j) {
                if shared[i] == 0 {
                    touched.push(i);
                }
                shared[i] += 1;
                if shared[i] >= 2 {
                    found = Some(found.map_or(i, |f: usize| f.min(i)));
                }
            }
        }
        for i in touched {
            shared[i] = 0;
        }
        if let Some(i) = found {
            return Some((i, j));
        }
    }
    None
}

impl Hypertree {
    /// Convenience constructor: structural parse followed by validation.
    pub fn new(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        validate_hypertree(Hypergraph::new(n, edges)?)
    }

    /// Caller guarantees the edges already form a hypertree on `0..=n`.
    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<Hyperedge>) -> Self {
        let mut edges = edges;
        edges.sort_unstable();
        Hypertree {
            graph: Hypergraph { n, edges },
        }
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn into_graph(self) -> Hypergraph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn k(&self) -> usize {
        self.graph.k()
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.graph.edges
    }

    /// Breadth-first distances from `source` to every vertex.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let n = self.graph.n;
        let inc = self.graph.incidence();
        let mut dist = vec![usize::MAX; n + 1];
        let mut edge_seen = vec![false; self.k()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &ei in &inc[u] {
                if std::mem::replace(&mut edge_seen[ei], true) {
                    continue;
                }
                for &w in self.graph.edges[ei].vertices() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    /// Combinatorial distance: two vertices are adjacent when they share a hyperedge.
    pub fn distance(&self, v: Vertex, w: Vertex) -> Result<usize> {
        let n = self.graph.n;
        if v > n || w > n {
            return Err(Error::Malformed(format!(
                "vertex {} out of range 0..={n}",
                v.max(w)
            )));
        }
        Ok(self.distances_from(v)[w])
    }

    /// Marked vertex of every hyperedge, in canonical edge order.
    pub fn marks(&self) -> Result<Vec<Vertex>> {
        let dist = self.distances_from(0);
        self.graph
            .edges
            .iter()
            .map(|e| unique_closest(e, &dist))
            .collect()
    }

    /// The unique vertex of `e` closest to vertex 0.
    pub fn marked_vertex(&self, e: &Hyperedge) -> Result<Vertex> {
        if self.graph.edges.binary_search(e).is_err() {
            return Err(Error::UnknownEdge(e.vertices().to_vec()));
        }
        unique_closest(e, &self.distances_from(0))
    }

    /// Size partition `λ` (hyperedge sizes minus one) and degree vector `μ`
    /// (degrees minus one).
    ///
    /// For the one-vertex tree (`n = 0`, no edges) this returns `λ = ()` and
    /// `μ = (0)`.
    pub fn profile(&self) -> (SizePartition, DegreeVector) {
        let parts = self.graph.edges.iter().map(|e| e.size() - 1).collect();
        let mu = self
            .graph
            .degrees()
            .into_iter()
            .map(|d| d.saturating_sub(1))
            .collect();
        (SizePartition::from_parts_unchecked(parts), DegreeVector(mu))
    }

    /// True when every hyperedge contains vertex 0.
    pub fn is_hyperstar_at_zero(&self) -> bool {
        self.graph.edges.iter().all(|e| e.contains(0))
    }
}

fn unique_closest(e: &Hyperedge, dist: &[usize]) -> Result<Vertex> {
    let best = e
        .vertices()
        .iter()
        .map(|&v| dist[v])
        .min()
        .unwrap_or(usize::MAX);
    let mut closest = e.vertices().iter().filter(|&&v| dist[v] == best);
    match (closest.next(), closest.next()) {
        (Some(&v), None) => Ok(v),
        _ => Err(Error::NonUniqueMarked {
            edge: e.vertices().to_vec(),
        }),
    }
}

impl fmt::Display for Hypertree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.graph.fmt(f)
    }
}

/// An integer partition `λ_1 ≥ … ≥ λ_k ≥ 1` of `n`; hyperedge sizes are `1 + λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SizePartition {
    parts: Vec<usize>,
}

impl SizePartition {
    /// Accepts the parts in any order and stores them weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ProfileMismatch(format!(
                "size partition {parts:?} has a zero part"
            )));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        SizePartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (hyperedges).
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// `ν_j` = number of parts equal to `j`, for `j` in `0..=n`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut nu = vec![0; self.n() + 1];
        for &p in &self.parts {
            nu[p] += 1;
        }
        nu
    }

    pub fn hyperedge_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p + 1).collect()
    }
}

impl fmt::Display for SizePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.parts)
    }
}

/// Degrees minus one, `(μ_0, …, μ_n)`; for a hypertree with `k` edges the
/// entries sum to `k − 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    pub fn new(mu: Vec<usize>) -> Self {
        DegreeVector(mu)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Checks that this vector fits a hypertree on `0..=n` with `k ≥ 1` edges.
    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        if self.0.len() != n + 1 {
            return Err(Error::ProfileMismatch(format!(
                "degree vector has {} entries, expected n + 1 = {}",
                self.0.len(),
                n + 1
            )));
        }
        if k == 0 || self.total() != k - 1 {
            return Err(Error::ProfileMismatch(format!(
                "degree vector sums to {}, expected k - 1 for k = {k}",
                self.total()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// A partition of `{1, …, n}` into nonempty blocks, blocks sorted by minimum
/// and elements ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::BadPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n {
                    return Err(Error::BadPartition(format!("element {x} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::BadPartition(format!("element {x} appears twice")));
                }
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::BadPartition(format!("element {x} is missing")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Blocks must already be sorted internally and cover `1..=n` exactly.
    pub(crate) fn from_blocks_unchecked(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }

    /// Block sizes as a size partition.
    pub fn shape(&self) -> SizePartition {
        SizePartition::from_parts_unchecked(self.blocks.iter().map(Vec::len).collect())
    }
}

/// A word over the alphabet `{0, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CodeWord(Vec<usize>);

impl CodeWord {
    pub fn new(letters: Vec<usize>) -> Self {
        CodeWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Occurrence count of each letter of `0..alphabet`.
    pub fn multiplicities(&self, alphabet: usize) -> Vec<usize> {
        let mut m = vec![0; alphabet];
        for &x in &self.0 {
            m[x] += 1;
        }
        m
    }
}

impl From<Vec<usize>> for CodeWord {
    fn from(v: Vec<usize>) -> Self {
        CodeWord(v)
    }
}
