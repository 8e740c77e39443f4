//! Finite simple undirected graphs on dense vertex ids `0..n`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Dense vertex id.
pub type Vertex = usize;

/// Finite simple undirected graph stored as sorted adjacency lists.
///
/// Neighbor lists are sorted ascending and duplicate-free, so every traversal
/// that walks them in order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: Vertex, n: usize },
    Loop(Vertex),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::Loop(v) => write!(f, "loop at vertex {v}"),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates raw (symmetric) adjacency lists.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut degree_sum = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Graph {
            adj,
            m: degree_sum / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<(Vertex, Vertex)> {
        self.edges().collect()
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    ///
    /// Returns the subgraph together with the map from new ids to old ids.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        (Self::from_raw_adjacency(adj), vertices.to_vec())
    }

    /// Copy of the graph without the edges in `removed`.
    pub fn without_edges(&self, removed: &[(Vertex, Vertex)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        Self::from_raw_adjacency(adj)
    }

    /// Union of the edge sets of two graphs on the same vertex count.
    pub fn union(&self, other: &Graph) -> Graph {
        assert_eq!(self.n(), other.n(), "graph union needs equal vertex counts");
        let adj = self
            .adj
            .iter()
            .zip(&other.adj)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        Self::from_raw_adjacency(adj)
    }

    pub fn is_subgraph_of(&self, host: &Graph) -> bool {
        self.n() == host.n() && self.edges().all(|(u, v)| host.has_edge(u, v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_vec())
            .finish()
    }
}

/// Parse failure in the edge-list text format, tagged with a 1-based line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    Malformed(String),
    OutOfRange { vertex: Vertex, n: usize },
    Loop(Vertex),
    EdgeCount { expected: usize, found: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::MissingHeader => write!(f, "missing \"n m\" header"),
            ParseErrorKind::Malformed(text) => write!(f, "malformed line {text:?}"),
            ParseErrorKind::OutOfRange { vertex, n } => {
                write!(f, "vertex id {vertex} out of range (n = {n})")
            }
            ParseErrorKind::Loop(v) => write!(f, "loop edge at vertex {v}"),
            ParseErrorKind::EdgeCount { expected, found } => {
                write!(f, "expected {expected} edge lines, found {found}")
            }
        }
    }
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
///
/// Blank lines are ignored. Vertex ids must be dense integers.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let (n, m) = parse_pair(header).ok_or_else(|| ParseError {
        line: header_line,
        kind: ParseErrorKind::Malformed(header.into()),
    })?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let (u, v) = parse_pair(text).ok_or_else(|| ParseError {
            line,
            kind: ParseErrorKind::Malformed(text.into()),
        })?;
        for w in [u, v] {
            if w >= n {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::OutOfRange { vertex: w, n },
                });
            }
        }
        if u == v {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::Loop(u),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCount {
                expected: m,
                found: edges.len(),
            },
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated while parsing"))
}

/// Serializes to the edge-list format accepted by [`parse_graph`].
pub fn to_edge_list(g: &Graph) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Unweighted distances from `source`, omitting vertices farther than `cap`.
pub fn bfs_distance(g: &Graph, source: Vertex, cap: usize) -> BTreeMap<Vertex, usize> {
    let mut dist = BTreeMap::new();
    dist.insert(source, 0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        if d == cap {
            continue;
        }
        for &w in g.neighbors(u) {
            if !dist.contains_key(&w) {
                dist.insert(w, d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Two-colouring of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn from_sides(side: Vec<Side>) -> Self {
        Bipartition { side }
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn part(&self, s: Side) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    /// True when every edge of `g` joins the two sides.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.n() && g.edges().all(|(u, v)| self.side[u] != self.side[v])
    }
}

/// Odd closed walk witnessing that a graph is not bipartite.
///
/// Consecutive vertices are adjacent, and the last is adjacent to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotBipartite {
    pub odd_cycle: Vec<Vertex>,
}

impl fmt::Display for NotBipartite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph is not bipartite: odd cycle {:?}", self.odd_cycle)
    }
}

/// Canonical bipartition: the smallest vertex of every component is on side X.
pub fn bipartition(g: &Graph) -> Result<Bipartition, NotBipartite> {
    let n = g.n();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(Side::X);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.other());
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(NotBipartite {
                            odd_cycle: tree_cycle(&parent, u, w),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Bipartition {
        side: side.into_iter().map(Option::unwrap).collect(),
    })
}

/// Cycle formed by the BFS-tree paths from `u` and `w` plus the edge `uw`.
fn tree_cycle(parent: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
    let ancestors = |mut v: Vertex| {
        let mut chain = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            chain.push(v);
        }
        chain
    };
    let mut up_u = ancestors(u);
    let mut up_w = ancestors(w);
    // strip the common suffix but keep the lowest common ancestor once
    while up_u.len() > 1
        && up_w.len() > 1
        && up_u[up_u.len() - 2] == up_w[up_w.len() - 2]
    {
        up_u.pop();
        up_w.pop();
    }
    up_w.pop();
    up_w.reverse();
    up_u.extend(up_w);
    up_u
}

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || connected_components(g).len() == 1
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.m() + 1 == g.n() && is_connected(g)
}
