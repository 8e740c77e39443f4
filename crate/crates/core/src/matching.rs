//! Matchings: maximum bipartite matching, the unique perfect matching of a
//! tree, and spanning trees that contain a prescribed perfect matching.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dsu::DisjointSets;
use crate::graph::{is_connected, is_tree, Bipartition, Graph, Side, Vertex};

/// A matching stored as a partial involution `mate`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    /// `mate` is not an involution at this vertex.
    NotInvolution(Vertex),
    VertexOutOfRange(Vertex),
    /// Pair `(u, v)` is not an edge of the host graph.
    NotAnEdge(Vertex, Vertex),
    /// Vertex left uncovered where a perfect matching was required.
    NotPerfect(Vertex),
    SizeMismatch { matching: usize, graph: usize },
    NotATree,
    Disconnected,
    /// A tree has no perfect matching; `stranded` could not be matched.
    NoPerfectMatching { stranded: Vertex },
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::NotInvolution(v) => write!(f, "mate map is not an involution at {v}"),
            MatchingError::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            MatchingError::NotAnEdge(u, v) => write!(f, "matched pair {u} {v} is not an edge"),
            MatchingError::NotPerfect(v) => write!(f, "matching is not perfect: {v} is unmatched"),
            MatchingError::SizeMismatch { matching, graph } => write!(
                f,
                "matching covers {matching} vertices but the graph has {graph}"
            ),
            MatchingError::NotATree => write!(f, "input is not a tree"),
            MatchingError::Disconnected => write!(f, "graph is disconnected"),
            MatchingError::NoPerfectMatching { stranded } => {
                write!(f, "no perfect matching: vertex {stranded} is stranded")
            }
        }
    }
}

impl Matching {
    /// Empty matching on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut mate = vec![None; n];
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(MatchingError::VertexOutOfRange(w));
                }
            }
            if u == v || mate[u].is_some_and(|m| m != v) || mate[v].is_some_and(|m| m != u) {
                return Err(MatchingError::NotInvolution(if u == v || mate[u].is_some() {
                    u
                } else {
                    v
                }));
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        Ok(Matching { mate })
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    /// Mate of `v` in a matching known to be perfect.
    pub(crate) fn partner(&self, v: Vertex) -> Vertex {
        self.mate[v].expect("perfect matching covers every vertex")
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.mate[u] == Some(v)
    }

    /// Number of matched pairs.
    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
            .collect()
    }

    /// Checks that this is a matching of `g`.
    pub fn validate_in(&self, g: &Graph) -> Result<(), MatchingError> {
        if self.n() != g.n() {
            return Err(MatchingError::SizeMismatch {
                matching: self.n(),
                graph: g.n(),
            });
        }
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = *m {
                if self.mate[v] != Some(u) {
                    return Err(MatchingError::NotInvolution(u));
                }
                if !g.has_edge(u, v) {
                    return Err(MatchingError::NotAnEdge(u.min(v), u.max(v)));
                }
            }
        }
        Ok(())
    }

    /// Checks that this is a perfect matching of `g`.
    pub fn validate_perfect_in(&self, g: &Graph) -> Result<(), MatchingError> {
        self.validate_in(g)?;
        match self.mate.iter().position(Option::is_none) {
            Some(v) => Err(MatchingError::NotPerfect(v)),
            None => Ok(()),
        }
    }

    /// As a graph on the same vertex set.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n(), self.pairs()).expect("matched pairs are in range")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Matching").field(&self.pairs()).finish()
    }
}

/// Maximum-cardinality matching of a bipartite graph (Hopcroft–Karp).
///
/// X-vertices are processed in increasing id order and neighbor lists are
/// scanned in order, so the result is deterministic.
pub fn maximum_matching(g: &Graph, parts: &Bipartition) -> Matching {
    const FREE: usize = usize::MAX;
    let n = g.n();
    let left: Vec<Vertex> = parts.part(Side::X);
    let mut mate = vec![FREE; n];
    let mut layer = vec![usize::MAX; n];

    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u] == FREE {
                layer[u] = 0;
                queue.push_back(u);
            } else {
                layer[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                match mate[w] {
                    FREE => found = true,
                    next if layer[next] == usize::MAX => {
                        layer[next] = layer[u] + 1;
                        queue.push_back(next);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }

        // iterative DFS along layers, one augmenting path per free left vertex
        let mut cursor = vec![0usize; n];
        for &root in &left {
            if mate[root] != FREE {
                continue;
            }
            let mut stack: Vec<Vertex> = vec![root];
            let mut reached = None;
            while let Some(&u) = stack.last() {
                let nbrs = g.neighbors(u);
                let mut advanced = false;
                while cursor[u] < nbrs.len() {
                    let w = nbrs[cursor[u]];
                    cursor[u] += 1;
                    match mate[w] {
                        FREE => {
                            reached = Some(w);
                            break;
                        }
                        next if layer[next] == layer[u].wrapping_add(1) => {
                            stack.push(next);
                            advanced = true;
                            break;
                        }
                        _ => {}
                    }
                }
                if reached.is_some() {
                    break;
                }
                if !advanced {
                    layer[u] = usize::MAX;
                    stack.pop();
                }
            }
            if let Some(mut free_right) = reached {
                // each stack vertex re-matches to the right vertex it was reached through
                while let Some(u) = stack.pop() {
                    let previous = mate[u];
                    mate[u] = free_right;
                    mate[free_right] = u;
                    free_right = previous;
                }
            }
        }
    }

    Matching {
        mate: mate
            .into_iter()
            .map(|m| if m == FREE { None } else { Some(m) })
            .collect(),
    }
}

/// The unique perfect matching of a tree, found by repeatedly matching a leaf
/// with its only remaining neighbor.
pub fn tree_perfect_matching(t: &Graph) -> Result<Matching, MatchingError> {
    if !is_tree(t) {
        return Err(MatchingError::NotATree);
    }
    let n = t.n();
    if n % 2 == 1 {
        return Err(MatchingError::NoPerfectMatching { stranded: n - 1 });
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut mate: Vec<Option<Vertex>> = vec![None; n];
    let mut removed = vec![false; n];
    // leaves in increasing order; a stack keeps the choice deterministic
    let mut leaves: Vec<Vertex> = (0..n).rev().filter(|&v| degree[v] == 1).collect();
    while let Some(leaf) = leaves.pop() {
        if removed[leaf] {
            continue;
        }
        let partner = t
            .neighbors(leaf)
            .iter()
            .copied()
            .find(|&w| !removed[w])
            .ok_or(MatchingError::NoPerfectMatching { stranded: leaf })?;
        mate[leaf] = Some(partner);
        mate[partner] = Some(leaf);
        removed[leaf] = true;
        removed[partner] = true;
        for &w in t.neighbors(partner) {
            if !removed[w] {
                degree[w] -= 1;
                match degree[w] {
                    0 => return Err(MatchingError::NoPerfectMatching { stranded: w }),
                    1 => leaves.push(w),
                    _ => {}
                }
            }
        }
    }
    match mate.iter().position(Option::is_none) {
        Some(v) => Err(MatchingError::NoPerfectMatching { stranded: v }),
        None => Ok(Matching { mate }),
    }
}

/// Spanning tree of `g` that contains every edge of the perfect matching `m`.
///
/// All matching edges seed a union-find; the remaining edges are then added in
/// lexicographic order whenever they join two different trees.
pub fn spanning_tree_with_matching(g: &Graph, m: &Matching) -> Result<Graph, MatchingError> {
    m.validate_perfect_in(g)?;
    if !is_connected(g) {
        return Err(MatchingError::Disconnected);
    }
    let mut sets = DisjointSets::new(g.n());
    let mut edges = m.pairs();
    for &(u, v) in &edges {
        sets.union(u, v);
    }
    for (u, v) in g.edges() {
        if !m.contains(u, v) && sets.union(u, v) {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(g.n(), edges).expect("edges come from the host graph"))
}
