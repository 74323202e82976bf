/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn same(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }

    /// Merges the sets of `x` and `y`; returns the new root, or `None` if they
    /// were already joined.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> Option<usize> {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            return None;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        Some(rx)
    }
}

/// Fenwick tree over 0/1 flags supporting rank and select, used to keep an
/// ordered set of small integers under insertion and removal.
#[derive(Debug, Clone)]
pub(crate) struct OrderedSet {
    tree: Vec<usize>,
    len: usize,
}

impl OrderedSet {
    /// Empty set over the universe `0..universe`.
    pub(crate) fn new(universe: usize) -> Self {
        OrderedSet {
            tree: vec![0; universe + 1],
            len: 0,
        }
    }

    /// Set containing every element of `0..universe`.
    pub(crate) fn full(universe: usize) -> Self {
        let mut tree = vec![0; universe + 1];
        for i in 1..=universe {
            tree[i] += 1;
            let j = i + (i & i.wrapping_neg());
            if j <= universe {
                tree[j] += tree[i];
            }
        }
        OrderedSet {
            tree,
            len: universe,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    fn add(&mut self, x: usize, delta: isize) {
        let mut i = x + 1;
        while i < self.tree.len() {
            self.tree[i] = self.tree[i].wrapping_add_signed(delta);
            i += i & i.wrapping_neg();
        }
    }

    pub(crate) fn insert(&mut self, x: usize) {
        self.add(x, 1);
        self.len += 1;
    }

    /// Caller guarantees `x` is present.
    pub(crate) fn remove(&mut self, x: usize) {
        self.add(x, -1);
        self.len -= 1;
    }

    /// Number of elements strictly less than `x`.
    pub(crate) fn rank(&self, x: usize) -> usize {
        let mut i = x;
        let mut acc = 0;
        while i > 0 {
            acc += self.tree[i];
            i &= i - 1;
        }
        acc
    }

    /// The element with exactly `r` smaller elements (0-based). `r < len()`.
    pub(crate) fn select(&self, r: usize) -> usize {
        debug_assert!(r < self.len);
        let n = self.tree.len() - 1;
        let mut pos = 0;
        let mut remaining = r;
        let mut step = if n == 0 {
            0
        } else {
            1 << (usize::BITS - 1 - n.leading_zeros())
        };
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] <= remaining {
                pos = next;
                remaining -= self.tree[next];
            }
            step >>= 1;
        }
        pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn union_find_basics() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1).is_some());
        assert!(uf.union(3, 4).is_some());
        assert!(uf.union(1, 0).is_none());
        assert!(uf.same(0, 1));
        assert!(!uf.same(1, 3));
    }

    proptest! {
        #[test]
        fn ordered_set_matches_btreeset(ops in prop::collection::vec((any::<bool>(), 0usize..40), 0..200)) {
            let mut fw = OrderedSet::full(40);
            let mut reference: BTreeSet<usize> = (0..40).collect();
            for (insert, x) in ops {
                if insert && !reference.contains(&x) {
                    fw.insert(x);
                    reference.insert(x);
                } else if !insert && reference.contains(&x) {
                    fw.remove(x);
                    reference.remove(&x);
                }
                prop_assert_eq!(fw.len(), reference.len());
                prop_assert_eq!(fw.rank(x), reference.range(..x).count());
                for (r, &y) in reference.iter().enumerate() {
                    prop_assert_eq!(fw.select(r), y);
                }
            }
        }
    }
}
