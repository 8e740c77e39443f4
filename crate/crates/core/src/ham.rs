//! Hamiltonian paths and cycles in third bi-powers.
//!
//! The tree construction follows the inductive argument for matched trees:
//! for an anchor edge `xy` of the matching, every component of `T - {x, y}`
//! hangs off `x` or off `y`, is itself a matched tree, and is threaded by a
//! recursive anchor path. Stitching those paths in a fixed order produces a
//! Hamiltonian `(x, y)`-path of `T_B^3` that crosses every non-matching tree
//! edge exactly twice. Recursion is replaced by an explicit task stack so deep
//! path-like trees do not exhaust the call stack.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{bipartition, is_connected, is_tree, Graph, Vertex};
use crate::matching::{spanning_tree_with_matching, Matching, MatchingError};

/// Vertex sequence claimed to be a Hamiltonian path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamPath {
    seq: Vec<Vertex>,
}

/// Cyclic vertex sequence claimed to be a Hamiltonian cycle; the closing edge
/// joins the last vertex back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamCycle {
    seq: Vec<Vertex>,
}

macro_rules! sequence_type {
    ($ty:ident) => {
        impl $ty {
            /// Wraps a raw sequence. Nothing is checked; see [`crate::verify`].
            pub fn from_sequence(seq: Vec<Vertex>) -> Self {
                $ty { seq }
            }

            pub fn vertices(&self) -> &[Vertex] {
                &self.seq
            }

            pub fn len(&self) -> usize {
                self.seq.len()
            }

            pub fn is_empty(&self) -> bool {
                self.seq.is_empty()
            }

            pub fn into_vec(self) -> Vec<Vertex> {
                self.seq
            }
        }
    };
}

sequence_type!(HamPath);
sequence_type!(HamCycle);

impl HamPath {
    pub fn first(&self) -> Option<Vertex> {
        self.seq.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.seq.last().copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamError {
    NotATree,
    NotBipartite,
    Disconnected,
    Matching(MatchingError),
    VertexOutOfRange(Vertex),
    /// The anchor pair of the tree construction must be a matching edge.
    NotMatched(Vertex, Vertex),
    /// Laceable paths join the two sides of the bipartition.
    SameSide(Vertex, Vertex),
    /// Hamiltonian cycles of the bi-power need at least four vertices.
    TooSmall(usize),
}

impl fmt::Display for HamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HamError::NotATree => write!(f, "input is not a tree"),
            HamError::NotBipartite => write!(f, "input is not bipartite"),
            HamError::Disconnected => write!(f, "input is disconnected"),
            HamError::Matching(e) => write!(f, "{e}"),
            HamError::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            HamError::NotMatched(x, y) => write!(f, "{x} {y} is not a matching edge"),
            HamError::SameSide(x, y) => {
                write!(f, "{x} and {y} lie on the same side of the bipartition")
            }
            HamError::TooSmall(n) => write!(f, "graph has order {n}, need at least 4"),
        }
    }
}

impl From<MatchingError> for HamError {
    fn from(e: MatchingError) -> Self {
        HamError::Matching(e)
    }
}

/// A tree with some non-matching edges deleted; every region (component) is
/// closed under the matching.
struct Forest<'a> {
    tree: &'a Graph,
    matching: &'a Matching,
    cut: BTreeSet<(Vertex, Vertex)>,
}

enum Task {
    Emit(Vertex),
    Solve {
        first: Vertex,
        second: Vertex,
        reversed: bool,
    },
}

impl<'a> Forest<'a> {
    fn new(tree: &'a Graph, matching: &'a Matching) -> Self {
        Forest {
            tree,
            matching,
            cut: BTreeSet::new(),
        }
    }

    fn is_cut(&self, u: Vertex, v: Vertex) -> bool {
        !self.cut.is_empty() && self.cut.contains(&(u.min(v), u.max(v)))
    }

    fn region_neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.tree
            .neighbors(u)
            .iter()
            .copied()
            .filter(move |&w| !self.is_cut(u, w))
    }

    /// Anchor path between the matched pair `x, y` through the region of `x`.
    fn anchor_path(&self, x: Vertex, y: Vertex, out: &mut Vec<Vertex>) {
        let n = self.tree.n();
        // root the region at x; children lists and subtree minima
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![x];
        parent[x] = x;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for w in self.region_neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        let mut subtree_min = vec![usize::MAX; n];
        for &u in order.iter().rev() {
            subtree_min[u] = subtree_min[u].min(u);
            if u != x {
                let p = parent[u];
                subtree_min[p] = subtree_min[p].min(subtree_min[u]);
            }
        }
        let children = |u: Vertex, skip: Vertex| -> Vec<Vertex> {
            let mut kids: Vec<Vertex> = self
                .region_neighbors(u)
                .filter(|&w| w != skip && parent[w] == u)
                .collect();
            kids.sort_by_key(|&c| subtree_min[c]);
            kids
        };

        let mut stack = vec![Task::Solve {
            first: x,
            second: y,
            reversed: false,
        }];
        let mut plan = Vec::new();
        while let Some(task) = stack.pop() {
            let (first, second, reversed) = match task {
                Task::Emit(v) => {
                    out.push(v);
                    continue;
                }
                Task::Solve {
                    first,
                    second,
                    reversed,
                } => (first, second, reversed),
            };
            // components hanging off `first` and off `second`
            let at_first = children(first, second);
            let at_second = children(second, first);
            plan.clear();
            if !reversed {
                plan.push(Task::Emit(first));
                for &c in &at_second {
                    let mate = self.matching.partner(c);
                    plan.push(Task::Solve {
                        first: c,
                        second: mate,
                        reversed: true,
                    });
                }
                for &c in &at_first {
                    let mate = self.matching.partner(c);
                    plan.push(Task::Solve {
                        first: mate,
                        second: c,
                        reversed: true,
                    });
                }
                plan.push(Task::Emit(second));
            } else {
                plan.push(Task::Emit(second));
                for &c in at_first.iter().rev() {
                    let mate = self.matching.partner(c);
                    plan.push(Task::Solve {
                        first: mate,
                        second: c,
                        reversed: false,
                    });
                }
                for &c in at_second.iter().rev() {
                    let mate = self.matching.partner(c);
                    plan.push(Task::Solve {
                        first: c,
                        second: mate,
                        reversed: false,
                    });
                }
                plan.push(Task::Emit(first));
            }
            stack.extend(plan.drain(..).rev());
        }
    }

    /// Unique path from `x` to `y` inside the region of `x`.
    fn region_path(&self, x: Vertex, y: Vertex) -> Vec<Vertex> {
        let mut parent = vec![usize::MAX; self.tree.n()];
        parent[x] = x;
        let mut queue = vec![x];
        let mut head = 0;
        while head < queue.len() && parent[y] == usize::MAX {
            let u = queue[head];
            head += 1;
            for w in self.region_neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push(w);
                }
            }
        }
        let mut path = vec![y];
        let mut v = y;
        while v != x {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        path
    }

    /// Hamiltonian path of the bi-power of the region of `x` from `x` to `y`,
    /// where `x` and `y` lie on opposite sides.
    fn laceable_path(&mut self, x: Vertex, y: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            if self.matching.contains(x, y) {
                self.anchor_path(x, y, &mut out);
                continue;
            }
            let path = self.region_path(x, y);
            let i = (0..path.len() - 1)
                .find(|&i| !self.matching.contains(path[i], path[i + 1]))
                .expect("a path between unmatched ends has a non-matching edge");
            let (a, b) = (path[i], path[i + 1]);
            self.cut.insert((a.min(b), a.max(b)));
            if i % 2 == 0 {
                // a lies on x's side of the bipartition and stays with x
                let (end1, start2) = (self.matching.partner(a), self.matching.partner(b));
                stack.push((start2, y));
                stack.push((x, end1));
            } else {
                stack.push((b, y));
                stack.push((x, a));
            }
        }
        out
    }
}

/// Hamiltonian `(x, y)`-path of `T_B^3` for a tree `T` with perfect matching
/// `M` and `xy ∈ M`, crossing every non-matching edge of `T` exactly twice.
pub fn tree_ham_path(
    tree: &Graph,
    matching: &Matching,
    x: Vertex,
    y: Vertex,
) -> Result<HamPath, HamError> {
    if !is_tree(tree) {
        return Err(HamError::NotATree);
    }
    matching.validate_perfect_in(tree)?;
    check_range(tree, x, y)?;
    if !matching.contains(x, y) {
        return Err(HamError::NotMatched(x, y));
    }
    let mut seq = Vec::with_capacity(tree.n());
    Forest::new(tree, matching).anchor_path(x, y, &mut seq);
    debug_assert!(steps_are_odd_within_three(tree, &seq, false));
    Ok(HamPath { seq })
}

/// Hamiltonian `(x, y)`-path of `G_B^3` for a connected bipartite `G` with a
/// perfect matching and `x`, `y` on opposite sides.
pub fn laceable_ham_path(
    g: &Graph,
    matching: &Matching,
    x: Vertex,
    y: Vertex,
) -> Result<HamPath, HamError> {
    check_range(g, x, y)?;
    let parts = bipartition(g).map_err(|_| HamError::NotBipartite)?;
    if parts.side(x) == parts.side(y) {
        return Err(HamError::SameSide(x, y));
    }
    if !is_connected(g) {
        return Err(HamError::Disconnected);
    }
    let tree = spanning_tree_with_matching(g, matching)?;
    let seq = Forest::new(&tree, matching).laceable_path(x, y);
    debug_assert!(steps_are_odd_within_three(&tree, &seq, false));
    Ok(HamPath { seq })
}

/// Hamiltonian cycle of `G_B^3`: the anchor path of the tree construction for
/// the matching edge with the smallest endpoint, closed by that edge.
pub fn ham_cycle(g: &Graph, matching: &Matching) -> Result<HamCycle, HamError> {
    if g.n() < 4 {
        return Err(HamError::TooSmall(g.n()));
    }
    bipartition(g).map_err(|_| HamError::NotBipartite)?;
    if !is_connected(g) {
        return Err(HamError::Disconnected);
    }
    let tree = spanning_tree_with_matching(g, matching)?;
    let (x, y) = matching.pairs()[0];
    let mut seq = Vec::with_capacity(g.n());
    Forest::new(&tree, matching).anchor_path(x, y, &mut seq);
    debug_assert!(steps_are_odd_within_three(&tree, &seq, true));
    Ok(HamCycle { seq })
}

fn check_range(g: &Graph, x: Vertex, y: Vertex) -> Result<(), HamError> {
    for v in [x, y] {
        if v >= g.n() {
            return Err(HamError::VertexOutOfRange(v));
        }
    }
    Ok(())
}

fn steps_are_odd_within_three(tree: &Graph, seq: &[Vertex], closed: bool) -> bool {
    let odd_within_three = |u: Vertex, v: Vertex| {
        tree.has_edge(u, v)
            || tree.neighbors(u).iter().any(|&a| {
                tree.neighbors(a)
                    .iter()
                    .any(|&b| b != u && tree.has_edge(b, v) && a != v)
            })
    };
    let closing = closed.then(|| (seq[seq.len() - 1], seq[0]));
    seq.windows(2)
        .map(|w| (w[0], w[1]))
        .chain(closing)
        .all(|(u, v)| odd_within_three(u, v))
}
