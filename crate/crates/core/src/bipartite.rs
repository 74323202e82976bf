//! Labelled bipartite trees on `U = {u_0, …, u_a}` and `V = {v_0, …, v_b}`
//! and the bijection `T ⟼ (W, W')` onto `V^a × U^b`.
//!
//! The tree is rooted at `u_0`. `W` lists the parents of `u_1, …, u_a`.
//! `W'` is filled from `c = a` down to `c = 1`: the forest made of every
//! parent edge of `u_1..u_a` and every child edge of `u_{c+1}..u_a` has one
//! component per remaining `V`-root; dropping the component of `u_c`, the
//! ranks of the components rooted at the children of `u_c` (ordered by root
//! index) select the slots of letter `u_c` among the still-free slots of `W'`.
//! The slots left at the end hold `u_0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::unionfind::{OrderedSet, UnionFind};

/// A vertex of a bipartite graph, tagged with its class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    U(usize),
    V(usize),
}

/// A spanning tree of `K_{a+1,b+1}`; edge `(i, j)` joins `u_i` and `v_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BipartiteTree {
    a: usize,
    b: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteTree {
    pub fn new(a: usize, b: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i > a || j > b) {
            return Err(Error::Malformed(format!(
                "edge u{i}-v{j} outside u0..u{a}, v0..v{b}"
            )));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotATree(format!(
                "edge u{}-v{} repeated",
                w[0].0, w[0].1
            )));
        }
        if edges.len() != a + b + 1 {
            return Err(Error::NotATree(format!(
                "{} edges, a tree on {} vertices has {}",
                edges.len(),
                a + b + 2,
                a + b + 1
            )));
        }
        let mut uf = UnionFind::new(a + b + 2);
        for &(i, j) in &edges {
            if uf.union(i, a + 1 + j).is_none() {
                return Err(Error::NotATree(format!("edge u{i}-v{j} closes a cycle")));
            }
        }
        // a + b + 1 edges without a cycle on a + b + 2 vertices: connected.
        Ok(BipartiteTree { a, b, edges })
    }

    /// Builds a tree from class-tagged endpoints, rejecting same-class edges.
    pub fn from_sides(a: usize, b: usize, edges: &[(Side, Side)]) -> Result<Self> {
        let pairs = edges
            .iter()
            .map(|&(x, y)| match (x, y) {
                (Side::U(i), Side::V(j)) | (Side::V(j), Side::U(i)) => Ok((i, j)),
                _ => Err(Error::NotBipartite(format!("{x:?}-{y:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(a, b, pairs)
    }

    /// `|U| − 1`.
    pub fn a(&self) -> usize {
        self.a
    }

    /// `|V| − 1`.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `α_i = deg(u_i) − 1` and `β_j = deg(v_j) − 1`.
    pub fn degree_profile(&self) -> (Vec<usize>, Vec<usize>) {
        let mut alpha = vec![0usize; self.a + 1];
        let mut beta = vec![0usize; self.b + 1];
        for &(i, j) in &self.edges {
            alpha[i] += 1;
            beta[j] += 1;
        }
        // Every vertex of a tree with at least one edge has degree >= 1.
        for d in alpha.iter_mut().chain(beta.iter_mut()) {
            *d -= 1;
        }
        (alpha, beta)
    }

    /// Parents when rooted at `u_0`: `(p(u_i) for i ≥ 1, p(v_j))`.
    fn parents(&self) -> (Vec<usize>, Vec<usize>) {
        let (a, b) = (self.a, self.b);
        let mut u_adj = vec![Vec::new(); a + 1];
        let mut v_adj = vec![Vec::new(); b + 1];
        for &(i, j) in &self.edges {
            u_adj[i].push(j);
            v_adj[j].push(i);
        }
        let mut parent_u = vec![usize::MAX; a + 1];
        let mut parent_v = vec![usize::MAX; b + 1];
        let mut stack = vec![Side::U(0)];
        while let Some(x) = stack.pop() {
            match x {
                Side::U(i) => {
                    for &j in &u_adj[i] {
                        if parent_u[i] != j {
                            parent_v[j] = i;
                            stack.push(Side::V(j));
                        }
                    }
                }
                Side::V(j) => {
                    for &i in &v_adj[j] {
                        if parent_v[j] != i {
                            parent_u[i] = j;
                            stack.push(Side::U(i));
                        }
                    }
                }
            }
        }
        (parent_u, parent_v)
    }
}

impl fmt::Display for BipartiteTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} edges=[", self.a, self.b)?;
        for (n, (i, j)) in self.edges.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "u{i}-v{j}")?;
        }
        f.write_str("]")
    }
}

/// The pair `(W, W')`: `w` has length `a` over `V`-indices, `wprime` has
/// length `b` over `U`-indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BipartiteCode {
    a: usize,
    b: usize,
    w: Vec<usize>,
    wprime: Vec<usize>,
}

impl BipartiteCode {
    pub fn new(a: usize, b: usize, w: Vec<usize>, wprime: Vec<usize>) -> Result<Self> {
        if w.len() != a || wprime.len() != b {
            return Err(Error::BadLength {
                expected_w: a,
                expected_wprime: b,
                found_w: w.len(),
                found_wprime: wprime.len(),
            });
        }
        if let Some((position, &letter)) = w.iter().enumerate().find(|(_, &x)| x > b) {
            return Err(Error::LetterOutOfRange {
                position,
                letter,
                max: b,
            });
        }
        if let Some((position, &letter)) = wprime.iter().enumerate().find(|(_, &x)| x > a) {
            return Err(Error::LetterOutOfRange {
                position,
                letter,
                max: a,
            });
        }
        Ok(BipartiteCode { a, b, w, wprime })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn w(&self) -> &[usize] {
        &self.w
    }

    pub fn wprime(&self) -> &[usize] {
        &self.wprime
    }
}

/// Forest bookkeeping: union-find over `U ∪ V` (u_i ↦ i, v_j ↦ a + 1 + j),
/// the `V`-root of each component, and the ordered set of current roots.
struct Forest {
    a: usize,
    uf: UnionFind,
    root_of: Vec<usize>,
    roots: OrderedSet,
}

impl Forest {
    /// The forest made of the parent edges of `u_1..u_a`.
    fn from_parent_word(a: usize, b: usize, w: &[usize]) -> Self {
        let mut uf = UnionFind::new(a + b + 2);
        let mut root_of: Vec<usize> = vec![usize::MAX; a + b + 2];
        for j in 0..=b {
            root_of[a + 1 + j] = j;
        }
        for (i, &j) in w.iter().enumerate() {
            let r = uf.union(i + 1, a + 1 + j).expect("u_i is joined once");
            root_of[r] = j;
        }
        Forest {
            a,
            uf,
            root_of,
            roots: OrderedSet::full(b + 1),
        }
    }

    fn root_of_u(&mut self, i: usize) -> usize {
        let r = self.uf.find(i);
        self.root_of[r]
    }

    /// Hangs the component rooted at `v_j` below `u_c`, whose root is `rc`.
    fn attach(&mut self, c: usize, j: usize, rc: usize) -> Result<()> {
        let r = self
            .uf
            .union(c, self.a + 1 + j)
            .ok_or_else(|| Error::NonTreeCode(format!("u{c}-v{j} closes a cycle")))?;
        self.root_of[r] = rc;
        self.roots.remove(j);
        Ok(())
    }
}

/// Computes `(W(T), W'(T))`.
pub fn encode_bipartite(t: &BipartiteTree) -> BipartiteCode {
    let (a, b) = (t.a, t.b);
    let (parent_u, parent_v) = t.parents();
    let mut children = vec![Vec::new(); a + 1];
    for (j, &i) in parent_v.iter().enumerate() {
        children[i].push(j);
    }

    let w: Vec<usize> = parent_u[1..].to_vec();
    let mut forest = Forest::from_parent_word(a, b, &w);
    let mut slots = OrderedSet::full(b);
    let mut wprime = vec![0; b];
    let mut positions = Vec::new();
    for c in (1..=a).rev() {
        let rc = forest.root_of_u(c);
        positions.clear();
        for &j in &children[c] {
            let rank = forest.roots.rank(j) - usize::from(rc < j);
            positions.push(slots.select(rank));
        }
        for &pos in &positions {
            wprime[pos] = c;
            slots.remove(pos);
        }
        for &j in &children[c] {
            forest
                .attach(c, j, rc)
                .expect("children of u_c root separate components");
        }
    }
    debug_assert_eq!(forest.roots.len(), children[0].len());
    debug_assert_eq!(slots.len() + 1, children[0].len());

    BipartiteCode { a, b, w, wprime }
}

/// Rebuilds the unique bipartite tree with the given code.
pub fn decode_bipartite(code: &BipartiteCode) -> Result<BipartiteTree> {
    let (a, b) = (code.a, code.b);
    let mut by_letter = vec![Vec::new(); a + 1];
    for (pos, &i) in code.wprime.iter().enumerate() {
        by_letter[i].push(pos);
    }

    let mut edges: Vec<(usize, usize)> = code
        .w
        .iter()
        .enumerate()
        .map(|(i, &j)| (i + 1, j))
        .collect();
    let mut forest = Forest::from_parent_word(a, b, &code.w);
    let mut slots = OrderedSet::full(b);
    let mut picked = Vec::new();
    for c in (1..=a).rev() {
        let positions = &by_letter[c];
        if positions.is_empty() {
            continue;
        }
        let rc = forest.root_of_u(c);
        let rc_rank = forest.roots.rank(rc);
        picked.clear();
        for &pos in positions {
            let r = slots.rank(pos);
            let r = if r < rc_rank { r } else { r + 1 };
            picked.push(forest.roots.select(r));
        }
        for &pos in positions {
            slots.remove(pos);
        }
        for &j in &picked {
            forest.attach(c, j, rc)?;
            edges.push((c, j));
        }
    }

    // u_0 adopts every remaining root.
    if forest.roots.len() != slots.len() + 1 {
        return Err(Error::NonTreeCode(format!(
            "{} components left for {} copies of u0",
            forest.roots.len(),
            slots.len()
        )));
    }
    edges.extend((0..forest.roots.len()).map(|r| (0, forest.roots.select(r))));
    BipartiteTree::new(a, b, edges).map_err(|e| Error::NonTreeCode(e.to_string()))
}
