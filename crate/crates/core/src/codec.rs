//! The hypertree bijection `T ⟼ (P(T), W(T))` and its inverse.
//!
//! `P(T)` is the set partition of `{1, …, n}` obtained by deleting from each
//! hyperedge its marked vertex (the vertex closest to 0). `W(T)` is a word of
//! length `k − 1` over `{0, …, n}` recording, for each non-leaf `a ≥ 1` taken
//! from the largest down, which blocks hang below `a`. Letter `i` occurs
//! `deg(i) − 1` times.
//!
//! Both directions run the recursion iteratively: processing vertex `a`
//! merges `P(a)` with the blocks of the hyperedges marked at `a`, which is
//! exactly the partition of the contracted tree `T_a`. Blocks are ranked by
//! their minimum element, and the unassigned word positions are kept in an
//! ordered set, so the whole pass costs `O((n + k) log n)`.

use crate::error::{Error, Result};
use crate::model::{CodeWord, Hyperedge, Hypertree, SetPartition};
use crate::unionfind::{OrderedSet, UnionFind};

/// The pair `(P(T), W(T))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HypertreeCode {
    partition: SetPartition,
    word: CodeWord,
}

impl HypertreeCode {
    /// Checks that the word has length `k − 1` and letters in `0..=n`.
    pub fn new(partition: SetPartition, word: CodeWord) -> Result<Self> {
        let n = partition.n();
        let k = partition.k();
        if k == 0 {
            return Err(Error::EmptyTree);
        }
        if word.len() != k - 1 {
            return Err(Error::BadWordLength {
                expected: k - 1,
                found: word.len(),
            });
        }
        if let Some((position, &letter)) = word.letters().iter().enumerate().find(|(_, &x)| x > n) {
            return Err(Error::LetterOutOfRange {
                position,
                letter,
                max: n,
            });
        }
        Ok(HypertreeCode { partition, word })
    }

    /// Builds and checks a code from raw blocks and letters.
    pub fn from_parts(n: usize, blocks: Vec<Vec<usize>>, word: Vec<usize>) -> Result<Self> {
        Self::new(SetPartition::new(n, blocks)?, CodeWord::new(word))
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn k(&self) -> usize {
        self.partition.k()
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn word(&self) -> &CodeWord {
        &self.word
    }

    pub fn into_parts(self) -> (SetPartition, CodeWord) {
        (self.partition, self.word)
    }
}

/// `P(T)`: every hyperedge minus its marked vertex.
pub fn partition_of(t: &Hypertree) -> Result<SetPartition> {
    Ok(blocks_and_marks(t)?.0)
}

fn blocks_and_marks(t: &Hypertree) -> Result<(SetPartition, Vec<usize>)> {
    if t.k() == 0 {
        return Err(Error::EmptyTree);
    }
    let marks = t.marks()?;
    let mut pairs: Vec<(Vec<usize>, usize)> = t
        .edges()
        .iter()
        .zip(&marks)
        .map(|(e, &m)| {
            let block = e.vertices().iter().copied().filter(|&v| v != m).collect();
            (block, m)
        })
        .collect();
    pairs.sort_unstable_by_key(|(b, _)| b[0]);
    let (blocks, marks) = pairs.into_iter().unzip();
    Ok((SetPartition::from_blocks_unchecked(t.n(), blocks), marks))
}

/// Merge bookkeeping shared by both directions: blocks under union-find,
/// the ordered set of current block minima, and the unassigned word slots.
struct MergeState {
    uf: UnionFind,
    /// Minimum element of the current block, valid at union-find roots.
    min: Vec<usize>,
    /// Current block root owning a given minimum.
    root_of_min: Vec<usize>,
    mins: OrderedSet,
    slots: OrderedSet,
    /// Original block containing each element of `1..=n`.
    owner: Vec<usize>,
}

impl MergeState {
    fn new(partition: &SetPartition) -> Self {
        let n = partition.n();
        let k = partition.k();
        let mut owner = vec![usize::MAX; n + 1];
        let mut min = Vec::with_capacity(k);
        let mut root_of_min = vec![usize::MAX; n + 1];
        let mut mins = OrderedSet::new(n + 1);
        for (i, block) in partition.blocks().iter().enumerate() {
            for &x in block {
                owner[x] = i;
            }
            min.push(block[0]);
            root_of_min[block[0]] = i;
            mins.insert(block[0]);
        }
        MergeState {
            uf: UnionFind::new(k),
            min,
            root_of_min,
            mins,
            slots: OrderedSet::full(k - 1),
            owner,
        }
    }

    /// Root of the current block containing `a`, i.e. `P(a)`.
    fn block_of(&mut self, a: usize) -> usize {
        let b = self.owner[a];
        self.uf.find(b)
    }

    /// Merges `p` (the block of `a`) with `children`; returns the new root.
    fn merge(&mut self, p: usize, children: &[usize]) -> usize {
        let mut root = p;
        let mut lowest = self.min[p];
        self.mins.remove(lowest);
        for &c in children {
            let m = self.min[c];
            self.mins.remove(m);
            lowest = lowest.min(m);
            root = self.uf.union(root, c).expect("child block already merged");
        }
        self.min[root] = lowest;
        self.root_of_min[lowest] = root;
        self.mins.insert(lowest);
        root
    }
}

/// Computes `(P(T), W(T))`.
pub fn encode(t: &Hypertree) -> Result<HypertreeCode> {
    let (partition, marks) = blocks_and_marks(t)?;
    let n = partition.n();
    let k = partition.k();

    // Blocks of the hyperedges marked at each vertex.
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, &m) in marks.iter().enumerate() {
        children[m].push(i);
    }

    let mut st = MergeState::new(&partition);
    let mut word = vec![0; k - 1];
    let mut positions = Vec::new();
    let mut roots = Vec::new();
    for a in (1..=n).rev() {
        if children[a].is_empty() {
            continue;
        }
        let p = st.block_of(a);
        let pmin = st.min[p];
        positions.clear();
        roots.clear();
        for &c in &children[a] {
            let root = st.uf.find(c);
            let cmin = st.min[root];
            // Index among the blocks other than P(a), ordered by minimum.
            let rank = st.mins.rank(cmin) - usize::from(pmin < cmin);
            positions.push(st.slots.select(rank));
            roots.push(root);
        }
        for &pos in &positions {
            word[pos] = a;
            st.slots.remove(pos);
        }
        st.merge(p, &roots);
    }
    // What is left is a hyperstar at 0, whose word is all zeros.
    debug_assert_eq!(st.slots.len() + 1, st.mins.len());

    Ok(HypertreeCode {
        partition,
        word: CodeWord::new(word),
    })
}

/// Rebuilds the unique hypertree with the given code.
pub fn decode(code: &HypertreeCode) -> Result<Hypertree> {
    let partition = &code.partition;
    let n = partition.n();
    let k = partition.k();
    let word = code.word.letters();

    let mut by_letter: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (pos, &x) in word.iter().enumerate() {
        by_letter[x].push(pos);
    }

    // Every merge creates a node; original blocks are nodes 0..k. A node is
    // either a block hanging below a known vertex, or inherits the mark of
    // the node it was merged into.
    let mut mark: Vec<Option<usize>> = vec![None; k];
    let mut merged_into: Vec<Option<usize>> = vec![None; k];
    let mut node_at_root: Vec<usize> = (0..k).collect();

    let mut st = MergeState::new(partition);
    let mut roots = Vec::new();
    for a in (1..=n).rev() {
        let positions = &by_letter[a];
        if positions.is_empty() {
            continue;
        }
        let p = st.block_of(a);
        let prank = st.mins.rank(st.min[p]);
        roots.clear();
        for &pos in positions {
            let r = st.slots.rank(pos);
            let r = if r < prank { r } else { r + 1 };
            roots.push(st.root_of_min[st.mins.select(r)]);
        }
        for &pos in positions {
            st.slots.remove(pos);
        }

        let node = mark.len();
        mark.push(None);
        merged_into.push(None);
        merged_into[node_at_root[p]] = Some(node);
        for &c in &roots {
            let child = node_at_root[c];
            mark[child] = Some(a);
            merged_into[child] = Some(node);
        }
        let root = st.merge(p, &roots);
        node_at_root[root] = node;
    }

    // Nodes are created after everything merged into them, so a reverse sweep
    // sees each parent resolved first. Surviving blocks hang below 0.
    for i in (0..mark.len()).rev() {
        if mark[i].is_none() {
            mark[i] = Some(merged_into[i].map_or(0, |parent| mark[parent].unwrap()));
        }
    }

    let edges = partition
        .blocks()
        .iter()
        .zip(&mark)
        .map(|(block, m)| {
            let m = m.unwrap();
            debug_assert!(!block.contains(&m));
            let mut e = Vec::with_capacity(block.len() + 1);
            e.push(m);
            e.extend_from_slice(block);
            Hyperedge::new(e).map_err(|_| Error::BadPartition(format!("block {block:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let t = Hypertree::from_edges_unchecked(n, edges);
    #[cfg(debug_assertions)]
    {
        let check = crate::model::validate_hypertree(t.graph().clone());
        debug_assert!(
            check.is_ok(),
            "decode produced an invalid hypertree: {check:?}"
        );
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Vertex;

    fn tree(n: usize, edges: &[&[usize]]) -> Hypertree {
        Hypertree::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn code(n: usize, blocks: &[&[usize]], word: &[usize]) -> HypertreeCode {
        HypertreeCode::from_parts(
            n,
            blocks.iter().map(|b| b.to_vec()).collect(),
            word.to_vec(),
        )
        .unwrap()
    }

    /// Literal recursion: build `T_a` explicitly, sort the blocks, recurse.
    fn reference_word(t: &Hypertree) -> Vec<usize> {
        let k = t.k();
        let (lambda_mu, marks) = (t.profile().1, t.marks().unwrap());
        let mu = lambda_mu.as_slice();
        let Some(a) = (1..=t.n()).rev().find(|&v| mu[v] > 0) else {
            return vec![0; k - 1];
        };
        let blocks: Vec<(Vec<Vertex>, Vertex)> = t
            .edges()
            .iter()
            .zip(&marks)
            .map(|(e, &m)| {
                (
                    e.vertices().iter().copied().filter(|&v| v != m).collect(),
                    m,
                )
            })
            .collect();
        let mut others: Vec<&(Vec<Vertex>, Vertex)> =
            blocks.iter().filter(|(b, _)| !b.contains(&a)).collect();
        others.sort_by_key(|(b, _)| b[0]);
        let mut word = vec![None; k - 1];
        for (i, (_, m)) in others.iter().enumerate() {
            if *m == a {
                word[i] = Some(a);
            }
        }
        // T_a: all hyperedges containing a merged into one.
        let mut merged: Vec<Vertex> = Vec::new();
        let mut edges = Vec::new();
        for e in t.edges() {
            if e.contains(a) {
                merged.extend_from_slice(e.vertices());
            } else {
                edges.push(e.vertices().to_vec());
            }
        }
        merged.sort_unstable();
        merged.dedup();
        edges.push(merged);
        let ta = Hypertree::new(t.n(), edges).unwrap();
        let mut rest = reference_word(&ta).into_iter();
        word.into_iter()
            .map(|x| x.unwrap_or_else(|| rest.next().unwrap()))
            .collect()
    }

    #[test]
    fn partition_examples() {
        let p = partition_of(&tree(3, &[&[0, 1, 2], &[0, 3]])).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2], vec![3]]);
        let p = partition_of(&tree(3, &[&[0, 1], &[1, 2, 3]])).unwrap();
        assert_eq!(p.blocks(), &[vec![1], vec![2, 3]]);
        let p = partition_of(&tree(4, &[&[0, 1, 2, 3, 4]])).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2, 3, 4]]);
        assert_eq!(partition_of(&tree(0, &[])).unwrap_err(), Error::EmptyTree);
    }

    #[test]
    fn encode_examples() {
        assert_eq!(
            encode(&tree(3, &[&[0, 1, 2], &[0, 3]])).unwrap(),
            code(3, &[&[1, 2], &[3]], &[0])
        );
        assert_eq!(
            encode(&tree(3, &[&[0, 1], &[1, 2, 3]])).unwrap(),
            code(3, &[&[1], &[2, 3]], &[1])
        );
        assert_eq!(encode(&tree(1, &[&[0, 1]])).unwrap(), code(1, &[&[1]], &[]));
        assert_eq!(encode(&tree(0, &[])).unwrap_err(), Error::EmptyTree);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            decode(&code(3, &[&[1, 2], &[3]], &[0])).unwrap(),
            tree(3, &[&[0, 1, 2], &[0, 3]])
        );
        assert_eq!(
            decode(&code(3, &[&[1], &[2, 3]], &[1])).unwrap(),
            tree(3, &[&[0, 1], &[1, 2, 3]])
        );
        for n in 1..6 {
            let block: Vec<usize> = (1..=n).collect();
            let all: Vec<usize> = (0..=n).collect();
            let t = decode(&code(n, &[&block], &[])).unwrap();
            assert_eq!(t.graph().edge_lists(), vec![all]);
        }
    }

    #[test]
    fn code_errors() {
        let err = HypertreeCode::from_parts(3, vec![vec![1, 2]], vec![]).unwrap_err();
        assert_eq!(err.class(), "BadPartition");
        let err = HypertreeCode::from_parts(3, vec![vec![1], vec![2, 3]], vec![]).unwrap_err();
        assert_eq!(
            err,
            Error::BadWordLength {
                expected: 1,
                found: 0
            }
        );
        let err = HypertreeCode::from_parts(3, vec![vec![1], vec![2, 3]], vec![4]).unwrap_err();
        assert_eq!(
            err,
            Error::LetterOutOfRange {
                position: 0,
                letter: 4,
                max: 3
            }
        );
    }

    #[test]
    fn matches_literal_recursion_on_a_deep_tree() {
        // 0 - 5 - {2,7} ; 7 - {1,3} ; 5 - 6 ; 3 - {4,8}
        let t = tree(8, &[&[0, 5], &[2, 5, 7], &[1, 3, 7], &[5, 6], &[3, 4, 8]]);
        let c = encode(&t).unwrap();
        assert_eq!(c.word().letters(), reference_word(&t).as_slice());
        assert_eq!(decode(&c).unwrap(), t);
    }

    #[test]
    fn positions_of_a_pick_out_blocks_marked_at_a() {
        let t = tree(6, &[&[0, 6], &[1, 6], &[2, 3, 6], &[0, 4, 5]]);
        let c = encode(&t).unwrap();
        // Blocks other than P(6) = {6}, by minimum: {1}, {2,3}, {4,5}.
        assert_eq!(
            c.partition().blocks(),
            &[vec![1], vec![2, 3], vec![4, 5], vec![6]]
        );
        assert_eq!(c.word().letters(), &[6, 6, 0]);
        assert_eq!(reference_word(&t), vec![6, 6, 0]);
    }

    #[test]
    fn literal_recursion_agrees_exhaustively() {
        for n in 1..=5 {
            for k in 1..=n {
                for t in crate::oracle::enumerate_hypertrees(n, k).unwrap() {
                    let c = encode(&t).unwrap();
                    assert_eq!(c.word().letters(), reference_word(&t).as_slice(), "{t}");
                }
            }
        }
    }
}
