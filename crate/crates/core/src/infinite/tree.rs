//! Matched quotients, depth-first (normal) spanning trees, and lifting a
//! quotient tree back to a spanning tree that contains the matching.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex};
use crate::matching::{Matching, MatchingError};

/// Graph on the matched pairs of `g`: pair `i` is the `i`-th entry of
/// `m.pairs()`, and two pairs are adjacent when `g` has an edge between them.
pub fn matched_quotient(g: &Graph, m: &Matching) -> Result<Graph, MatchingError> {
    m.validate_perfect_in(g)?;
    let pair_of = pair_index(m);
    let edges = g
        .edges()
        .map(|(u, v)| (pair_of[u], pair_of[v]))
        .filter(|(p, q)| p != q);
    Ok(Graph::from_edges(m.size(), edges).expect("pair ids are dense"))
}

fn pair_index(m: &Matching) -> Vec<usize> {
    let mut pair_of = vec![0; m.n()];
    for (i, (u, v)) in m.pairs().into_iter().enumerate() {
        pair_of[u] = i;
        pair_of[v] = i;
    }
    pair_of
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    Disconnected { reached: usize, n: usize },
    RootOutOfRange(Vertex),
    /// A quotient-tree edge whose endpoints are not joined in `G`.
    EmptyCut(usize, usize),
    /// The chosen lift of a quotient edge is not an edge between its pairs.
    ChoiceOutsideCut { pair: (usize, usize), chosen: (Vertex, Vertex) },
    QuotientTreeSize { expected: usize, found: usize },
    NotASpanningTree,
    Matching(MatchingError),
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::Disconnected { reached, n } => {
                write!(f, "graph is disconnected: reached {reached} of {n} vertices")
            }
            TreeError::RootOutOfRange(v) => write!(f, "root {v} is not a vertex"),
            TreeError::EmptyCut(p, q) => write!(f, "no edge joins pairs {p} and {q}"),
            TreeError::ChoiceOutsideCut { pair, chosen } => write!(
                f,
                "chosen edge {} {} does not join pairs {} and {}",
                chosen.0, chosen.1, pair.0, pair.1
            ),
            TreeError::QuotientTreeSize { expected, found } => {
                write!(f, "quotient tree has {found} vertices, expected {expected}")
            }
            TreeError::NotASpanningTree => write!(f, "quotient tree is not a spanning tree"),
            TreeError::Matching(e) => write!(f, "{e}"),
        }
    }
}

impl From<MatchingError> for TreeError {
    fn from(e: MatchingError) -> Self {
        TreeError::Matching(e)
    }
}

/// Spanning tree with a root, parent pointers and DFS entry/exit times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    pub root: Vertex,
    pub parent: Vec<Option<Vertex>>,
    /// Vertices in DFS preorder.
    pub preorder: Vec<Vertex>,
    enter: Vec<usize>,
    exit: Vec<usize>,
}

impl RootedTree {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Tree edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<_> = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p.min(v), p.max(v))))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n(), self.edges()).expect("tree edges are in range")
    }

    /// Whether `a` is an ancestor of `b` (every vertex is its own ancestor).
    pub fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        self.enter[a] <= self.enter[b] && self.exit[b] <= self.exit[a]
    }

    /// Every edge of `g` joins two tree-comparable vertices.
    pub fn is_normal_in(&self, g: &Graph) -> bool {
        g.n() == self.n() && g.edges().all(|(u, v)| self.is_ancestor(u, v) || self.is_ancestor(v, u))
    }
}

/// Depth-first spanning tree rooted at `root`, children taken in increasing
/// order. Any depth-first tree of a finite graph is normal.
pub fn normal_spanning_tree(g: &Graph, root: Vertex) -> Result<RootedTree, TreeError> {
    normal_spanning_tree_guided(g, root, &BTreeSet::new())
}

/// Like [`normal_spanning_tree`], but at every vertex the children listed in
/// `preferred` as `(parent, child)` are explored first. Passing the edges of
/// a tree on a smaller vertex set keeps that tree inside the new one when it
/// is itself a depth-first tree of the corresponding subgraph.
pub fn normal_spanning_tree_guided(
    g: &Graph,
    root: Vertex,
    preferred: &BTreeSet<(Vertex, Vertex)>,
) -> Result<RootedTree, TreeError> {
    let n = g.n();
    if root >= n {
        return Err(TreeError::RootOutOfRange(root));
    }
    let order_of = |v: Vertex| -> Vec<Vertex> {
        let (mut first, rest): (Vec<Vertex>, Vec<Vertex>) =
            g.neighbors(v).iter().partition(|&&w| preferred.contains(&(v, w)));
        first.extend(rest);
        first
    };
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut enter = vec![0; n];
    let mut exit = vec![0; n];
    let mut preorder = Vec::with_capacity(n);
    let mut clock = 0;
    seen[root] = true;
    enter[root] = clock;
    clock += 1;
    preorder.push(root);
    let mut stack = vec![(root, order_of(root), 0usize)];
    while let Some((v, children, next)) = stack.last_mut() {
        if let Some(&w) = children.get(*next) {
            *next += 1;
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(*v);
                enter[w] = clock;
                clock += 1;
                preorder.push(w);
                stack.push((w, order_of(w), 0));
            }
        } else {
            exit[*v] = clock;
            clock += 1;
            stack.pop();
        }
    }
    if preorder.len() < n {
        return Err(TreeError::Disconnected {
            reached: preorder.len(),
            n,
        });
    }
    Ok(RootedTree {
        root,
        parent,
        preorder,
        enter,
        exit,
    })
}

/// Edges of `g` between the `p`-th and `q`-th matched pairs, sorted.
pub fn pair_cut(g: &Graph, m: &Matching, p: usize, q: usize) -> Vec<(Vertex, Vertex)> {
    let pairs = m.pairs();
    cut_between(g, pairs[p], pairs[q])
}

fn cut_between(g: &Graph, a: (Vertex, Vertex), b: (Vertex, Vertex)) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for u in [a.0, a.1] {
        for v in [b.0, b.1] {
            if g.has_edge(u, v) {
                out.push((u.min(v), u.max(v)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Spanning tree of `g` made of the matching plus one chosen `g`-edge per
/// edge of the quotient tree `qtree`. `choose` receives the sorted cut
/// between the two pairs and must return one of its edges.
pub fn lift_tree<F>(g: &Graph, m: &Matching, qtree: &Graph, mut choose: F) -> Result<Graph, TreeError>
where
    F: FnMut(&[(Vertex, Vertex)]) -> (Vertex, Vertex),
{
    m.validate_perfect_in(g)?;
    if qtree.n() != m.size() {
        return Err(TreeError::QuotientTreeSize {
            expected: m.size(),
            found: qtree.n(),
        });
    }
    if !crate::graph::is_tree(qtree) {
        return Err(TreeError::NotASpanningTree);
    }
    let pairs = m.pairs();
    let mut edges = pairs.clone();
    for (p, q) in qtree.edges() {
        let cut = cut_between(g, pairs[p], pairs[q]);
        if cut.is_empty() {
            return Err(TreeError::EmptyCut(p, q));
        }
        let (u, v) = choose(&cut);
        let chosen = (u.min(v), u.max(v));
        if !cut.contains(&chosen) {
            return Err(TreeError::ChoiceOutsideCut { pair: (p, q), chosen });
        }
        edges.push(chosen);
    }
    Ok(Graph::from_edges(g.n(), edges).expect("edges come from g"))
}

/// The canonical lift: the lexicographically smallest edge of each cut.
pub fn canonical_lift(g: &Graph, m: &Matching, qtree: &Graph) -> Result<Graph, TreeError> {
    lift_tree(g, m, qtree, |cut| cut[0])
}
