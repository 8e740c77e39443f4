//! Independent checkers and exhaustive oracles.
//!
//! Nothing here calls into the constructors: distances come from their own
//! capped BFS and crossing counts from a side labelling of `T - e`, so a bug in
//! the construction cannot certify itself.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{is_tree, Graph, Vertex};
use crate::ham::{HamCycle, HamPath};

/// One reason a claimed path or cycle is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceFailure {
    WrongStart { expected: Vertex, found: Option<Vertex> },
    WrongEnd { expected: Vertex, found: Option<Vertex> },
    OutOfRange(Vertex),
    Repeated(Vertex),
    Missing(Vertex),
    TooShort(usize),
    /// Consecutive vertices whose distance is even, exceeds the cap, or is
    /// infinite (`None`).
    BadStep {
        from: Vertex,
        to: Vertex,
        distance: Option<usize>,
    },
}

impl fmt::Display for SequenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceFailure::WrongStart { expected, found } => {
                write!(f, "path starts at {found:?}, expected {expected}")
            }
            SequenceFailure::WrongEnd { expected, found } => {
                write!(f, "path ends at {found:?}, expected {expected}")
            }
            SequenceFailure::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            SequenceFailure::Repeated(v) => write!(f, "vertex {v} appears more than once"),
            SequenceFailure::Missing(v) => write!(f, "vertex {v} missing"),
            SequenceFailure::TooShort(len) => write!(f, "sequence of length {len} is too short"),
            SequenceFailure::BadStep { from, to, distance } => match distance {
                Some(d) => write!(f, "step {from} -> {to} has distance {d}"),
                None => write!(f, "step {from} -> {to} has distance beyond the cap"),
            },
        }
    }
}

/// Outcome of [`verify_bipower_path`] or [`verify_bipower_cycle`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SequenceReport {
    pub failures: Vec<SequenceFailure>,
}

impl SequenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn sorted_meet(a: &[Vertex], b: &[Vertex]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Distance from `u` to `v` if at most `cap`.
///
/// Distances up to 3 are read off the sorted neighbor lists; longer ones
/// fall back to a capped BFS.
fn capped_distance(g: &Graph, u: Vertex, v: Vertex, cap: usize) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    if cap >= 1 && g.has_edge(u, v) {
        return Some(1);
    }
    if cap >= 2 && sorted_meet(g.neighbors(u), g.neighbors(v)) {
        return Some(2);
    }
    if cap >= 3 && g.neighbors(u).iter().any(|&a| sorted_meet(g.neighbors(a), g.neighbors(v))) {
        return Some(3);
    }
    if cap <= 3 {
        return None;
    }
    let mut seen = BTreeMap::new();
    seen.insert(u, 0usize);
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        let d = seen[&a];
        if d == cap {
            continue;
        }
        for &b in g.neighbors(a) {
            if b == v {
                return Some(d + 1);
            }
            if !seen.contains_key(&b) {
                seen.insert(b, d + 1);
                queue.push_back(b);
            }
        }
    }
    None
}

fn check_sequence(g: &Graph, seq: &[Vertex], t: usize, closed: bool) -> SequenceReport {
    let mut failures = Vec::new();
    let n = g.n();
    let mut count = vec![0usize; n];
    for &v in seq {
        if v >= n {
            failures.push(SequenceFailure::OutOfRange(v));
        } else {
            count[v] += 1;
            if count[v] == 2 {
                failures.push(SequenceFailure::Repeated(v));
            }
        }
    }
    failures.extend((0..n).filter(|&v| count[v] == 0).map(SequenceFailure::Missing));
    let closing = (closed && seq.len() > 2).then(|| (seq[seq.len() - 1], seq[0]));
    for (from, to) in seq.windows(2).map(|w| (w[0], w[1])).chain(closing) {
        if from >= n || to >= n {
            continue;
        }
        let distance = capped_distance(g, from, to, t);
        if !matches!(distance, Some(d) if d % 2 == 1) {
            failures.push(SequenceFailure::BadStep { from, to, distance });
        }
    }
    SequenceReport { failures }
}

/// Checks that `seq` is a Hamiltonian `(x, y)`-path of `G_B^t`.
pub fn verify_bipower_path(
    g: &Graph,
    seq: &[Vertex],
    x: Vertex,
    y: Vertex,
    t: usize,
) -> SequenceReport {
    let mut report = check_sequence(g, seq, t, false);
    if seq.first() != Some(&x) {
        report.failures.insert(
            0,
            SequenceFailure::WrongStart {
                expected: x,
                found: seq.first().copied(),
            },
        );
    }
    if seq.last() != Some(&y) {
        report.failures.insert(
            0,
            SequenceFailure::WrongEnd {
                expected: y,
                found: seq.last().copied(),
            },
        );
    }
    report
}

/// Checks that `seq`, read cyclically, is a Hamiltonian cycle of `G_B^t`.
pub fn verify_bipower_cycle(g: &Graph, seq: &[Vertex], t: usize) -> SequenceReport {
    let mut report = check_sequence(g, seq, t, true);
    if seq.len() < 3 {
        report.failures.insert(0, SequenceFailure::TooShort(seq.len()));
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossingError {
    NotATree,
    NotTreeEdge(Vertex, Vertex),
    OutOfRange(Vertex),
}

impl fmt::Display for CrossingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossingError::NotATree => write!(f, "reference graph is not a tree"),
            CrossingError::NotTreeEdge(u, v) => write!(f, "{u} {v} is not a tree edge"),
            CrossingError::OutOfRange(v) => write!(f, "vertex {v} is not a tree vertex"),
        }
    }
}

/// Whether the sequence is read as an open path or as a closed cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Traversal {
    Open,
    Closed,
}

/// Labels every vertex by whether it lies on `u`'s side of `T - uv`.
fn side_of_cut(tree: &Graph, u: Vertex, v: Vertex) -> Vec<bool> {
    let mut on_u_side = vec![false; tree.n()];
    on_u_side[u] = true;
    let mut stack = vec![u];
    while let Some(a) = stack.pop() {
        for &b in tree.neighbors(a) {
            if !on_u_side[b] && !(a == u && b == v) {
                on_u_side[b] = true;
                stack.push(b);
            }
        }
    }
    on_u_side
}

/// Number of times `seq` crosses the tree edge `e`: the number of
/// consecutive pairs (cyclically, for closed traversals) that lie on
/// different sides of `T - e`.
pub fn crossing_count(
    tree: &Graph,
    seq: &[Vertex],
    traversal: Traversal,
    e: (Vertex, Vertex),
) -> Result<usize, CrossingError> {
    if !is_tree(tree) {
        return Err(CrossingError::NotATree);
    }
    if !tree.has_edge(e.0, e.1) {
        return Err(CrossingError::NotTreeEdge(e.0, e.1));
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= tree.n()) {
        return Err(CrossingError::OutOfRange(v));
    }
    let side = side_of_cut(tree, e.0, e.1);
    let mut changes = seq.windows(2).filter(|w| side[w[0]] != side[w[1]]).count();
    if traversal == Traversal::Closed && seq.len() > 1 && side[seq[0]] != side[seq[seq.len() - 1]] {
        changes += 1;
    }
    Ok(changes)
}

/// Crossing counts of every tree edge at once.
///
/// A consecutive pair `(u, v)` changes sides across `e` exactly when `e` lies
/// on the tree path from `u` to `v`, so each step adds one to every edge of
/// that path. This is an independent route to the same numbers as
/// [`crossing_count`] and runs in time proportional to the total step length.
pub fn crossing_counts(
    tree: &Graph,
    seq: &[Vertex],
    traversal: Traversal,
) -> Result<BTreeMap<(Vertex, Vertex), usize>, CrossingError> {
    if !is_tree(tree) {
        return Err(CrossingError::NotATree);
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= tree.n()) {
        return Err(CrossingError::OutOfRange(v));
    }
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    parent[0] = 0;
    let mut order = vec![0];
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                depth[w] = depth[u] + 1;
                order.push(w);
            }
        }
    }
    // hits[v] counts crossings of the edge from v to its parent
    let mut hits = vec![0usize; n];
    let closing = (traversal == Traversal::Closed && seq.len() > 1)
        .then(|| (seq[seq.len() - 1], seq[0]));
    for (mut a, mut b) in seq.windows(2).map(|w| (w[0], w[1])).chain(closing) {
        while a != b {
            if depth[a] >= depth[b] {
                hits[a] += 1;
                a = parent[a];
            } else {
                hits[b] += 1;
                b = parent[b];
            }
        }
    }
    Ok((1..n)
        .map(|v| {
            let p = parent[v];
            ((v.min(p), v.max(p)), hits[v])
        })
        .collect())
}

/// Largest instance the exhaustive oracles accept unless told otherwise.
pub const DEFAULT_ORACLE_BOUND: usize = 20;

/// Hard ceiling of the bitmask search.
pub const MAX_ORACLE_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, bound: usize },
    OutOfRange(Vertex),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, bound } => {
                write!(f, "refusing exhaustive search on {n} vertices (bound {bound})")
            }
            OracleError::OutOfRange(v) => write!(f, "vertex {v} out of range"),
        }
    }
}

struct Search {
    adj: Vec<u64>,
    all: u64,
    path: Vec<Vertex>,
    target: Target,
}

#[derive(Clone, Copy)]
enum Target {
    /// Path ending at this vertex.
    Vertex(Vertex),
    /// Cycle closing back to this vertex.
    Close(Vertex),
}

impl Search {
    fn new(g: &Graph, target: Target) -> Self {
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
            .collect();
        let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
        Search {
            adj,
            all,
            path: Vec::with_capacity(g.n()),
            target,
        }
    }

    fn hopeless(&self, cur: Vertex, visited: u64) -> bool {
        let unvisited = self.all & !visited;
        let cur_bit = 1u64 << cur;
        let mut avail = unvisited | cur_bit;
        let mut needs_one = 0u64;
        match self.target {
            Target::Vertex(y) => {
                if cur == y {
                    return unvisited != 0;
                }
                needs_one = 1 << y;
            }
            Target::Close(start) => {
                avail |= 1 << start;
                if unvisited != 0 && cur != start && self.adj[start] & unvisited == 0 {
                    return true;
                }
            }
        }
        let mut rest = unvisited;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let need = if needs_one & (1 << u) != 0 { 1 } else { 2 };
            if (self.adj[u] & avail).count_ones() < need {
                return true;
            }
        }
        // every unvisited vertex must stay reachable from cur through unvisited ones
        let mut reach = self.adj[cur] & unvisited;
        let mut frontier = reach;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[u] & unvisited & !reach;
            reach |= fresh;
            frontier |= fresh;
        }
        reach != unvisited
    }

    fn extend(&mut self, cur: Vertex, visited: u64) -> bool {
        if visited == self.all {
            return match self.target {
                Target::Vertex(y) => cur == y,
                Target::Close(start) => self.adj[cur] & (1 << start) != 0,
            };
        }
        if self.hopeless(cur, visited) {
            return false;
        }
        let mut options = self.adj[cur] & !visited;
        while options != 0 {
            let next = options.trailing_zeros() as usize;
            options &= options - 1;
            self.path.push(next);
            if self.extend(next, visited | (1 << next)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<(), OracleError> {
    let bound = bound.min(MAX_ORACLE_BOUND);
    if g.n() > bound {
        return Err(OracleError::TooLarge { n: g.n(), bound });
    }
    Ok(())
}

/// Lexicographically smallest Hamiltonian `(x, y)`-path of `g`, if any.
pub fn brute_ham_path(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    bound: usize,
) -> Result<Option<HamPath>, OracleError> {
    check_bound(g, bound)?;
    for v in [x, y] {
        if v >= g.n() {
            return Err(OracleError::OutOfRange(v));
        }
    }
    if x == y {
        return Ok((g.n() == 1).then(|| HamPath::from_sequence(vec![x])));
    }
    let mut search = Search::new(g, Target::Vertex(y));
    search.path.push(x);
    Ok(search
        .extend(x, 1 << x)
        .then(|| HamPath::from_sequence(search.path)))
}

/// Lexicographically smallest Hamiltonian cycle of `g` (starting at 0), if any.
pub fn brute_ham_cycle(g: &Graph, bound: usize) -> Result<Option<HamCycle>, OracleError> {
    check_bound(g, bound)?;
    if g.n() < 3 {
        return Ok(None);
    }
    let mut search = Search::new(g, Target::Close(0));
    search.path.push(0);
    Ok(search
        .extend(0, 1)
        .then(|| HamCycle::from_sequence(search.path)))
}

/// Outcome of [`independence_nonham_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub set_size: usize,
    pub n: usize,
    /// An edge inside the set, if the set is not independent.
    pub inner_edge: Option<(Vertex, Vertex)>,
    /// Vertex ids of the set that are out of range or repeated.
    pub invalid_members: Vec<Vertex>,
    pub exceeds_half: bool,
}

impl IndependenceReport {
    /// True when the set certifies that `g` has no Hamiltonian cycle.
    pub fn passed(&self) -> bool {
        self.inner_edge.is_none() && self.invalid_members.is_empty() && self.exceeds_half
    }
}

/// Checks that `set` is independent in `g` and holds more than half of the
/// vertices, which rules out a Hamiltonian cycle: every member would need two
/// cycle neighbours outside the set.
pub fn independence_nonham_witness(g: &Graph, set: &[Vertex]) -> IndependenceReport {
    let mut member = vec![false; g.n()];
    let mut invalid_members = Vec::new();
    for &v in set {
        if v >= g.n() || member[v] {
            invalid_members.push(v);
        } else {
            member[v] = true;
        }
    }
    let inner_edge = g.edges().find(|&(u, v)| member[u] && member[v]);
    let set_size = member.iter().filter(|&&b| b).count();
    IndependenceReport {
        set_size,
        n: g.n(),
        inner_edge,
        invalid_members,
        exceeds_half: 2 * set_size > g.n(),
    }
}
