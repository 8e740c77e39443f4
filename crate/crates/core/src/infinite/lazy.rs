//! Locally finite infinite graphs given by neighbor oracles, and their
//! finite matching-saturated truncations.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex};
use crate::matching::Matching;

/// Vertex label of a lazy graph.
pub type Label = i64;

/// A locally finite graph known only through its neighbor oracle.
///
/// Oracles must be pure: repeated queries return the same sorted list.
pub trait LazyGraph {
    fn name(&self) -> &str;
    fn base(&self) -> Label;
    /// Sorted, duplicate-free neighbor list of `v`.
    fn neighbors(&self, v: Label) -> Vec<Label>;
    /// Partner of `v` in the perfect matching, when the graph carries one.
    fn mate(&self, v: Label) -> Option<Label>;
}

/// The two-way infinite path on the integers, matched as `(2i, 2i + 1)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DoubleRay;

impl LazyGraph for DoubleRay {
    fn name(&self) -> &str {
        "double-ray"
    }
    fn base(&self) -> Label {
        0
    }
    fn neighbors(&self, v: Label) -> Vec<Label> {
        vec![v - 1, v + 1]
    }
    fn mate(&self, v: Label) -> Option<Label> {
        Some(v ^ 1)
    }
}

/// The two-way infinite ladder `Z x {0, 1}` with its rungs as matching.
///
/// Vertex `(x, s)` has label `2x + s`, so rails step by 2 and the rung
/// partner is `v ^ 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ladder;

impl LazyGraph for Ladder {
    fn name(&self) -> &str {
        "ladder"
    }
    fn base(&self) -> Label {
        0
    }
    fn neighbors(&self, v: Label) -> Vec<Label> {
        let mut out = vec![v - 2, v ^ 1, v + 2];
        out.sort_unstable();
        out
    }
    fn mate(&self, v: Label) -> Option<Label> {
        Some(v ^ 1)
    }
}

/// Rooted infinite binary tree with every node `n >= 1` blown up into a
/// matched edge `a_n = 2n`, `b_n = 2n + 1`; `b_n` carries the two children
/// `a_{2n}` and `a_{2n+1}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct MatchedBinaryTree;

impl LazyGraph for MatchedBinaryTree {
    fn name(&self) -> &str {
        "matched-tree"
    }
    fn base(&self) -> Label {
        2
    }
    fn neighbors(&self, v: Label) -> Vec<Label> {
        if v < 2 {
            return Vec::new();
        }
        let node = v / 2;
        if v % 2 == 0 {
            let mut out = Vec::with_capacity(2);
            if node > 1 {
                out.push(2 * (node / 2) + 1);
            }
            out.push(v + 1);
            out
        } else {
            vec![v - 1, 4 * node, 4 * node + 2]
        }
    }
    fn mate(&self, v: Label) -> Option<Label> {
        (v >= 2).then_some(v ^ 1)
    }
}

/// Names accepted by [`family`].
pub const FAMILY_NAMES: [&str; 3] = ["double-ray", "ladder", "matched-tree"];

/// Built-in family by name.
pub fn family(name: &str) -> Option<Box<dyn LazyGraph>> {
    match name {
        "double-ray" => Some(Box::new(DoubleRay)),
        "ladder" => Some(Box::new(Ladder)),
        "matched-tree" => Some(Box::new(MatchedBinaryTree)),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// `v` lists `u` as a neighbor but not the other way round.
    Asymmetric { u: Label, v: Label },
    Unsorted(Label),
    SelfLoop(Label),
    NoMate(Label),
    /// The mate oracle is not an involution along edges at `v`.
    BadMate { v: Label, mate: Label },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Asymmetric { u, v } => {
                write!(f, "oracle asymmetry: {v} lists {u} but {u} does not list {v}")
            }
            OracleError::Unsorted(v) => write!(f, "neighbor list of {v} is not sorted and duplicate-free"),
            OracleError::SelfLoop(v) => write!(f, "{v} lists itself as a neighbor"),
            OracleError::NoMate(v) => write!(f, "{v} has no mate"),
            OracleError::BadMate { v, mate } => write!(f, "mate {mate} of {v} is not a matched neighbor"),
        }
    }
}

/// Finite matching-saturated ball around the base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncation {
    pub radius: usize,
    /// Induced subgraph on dense ids.
    pub graph: Graph,
    /// `labels[id]` is the lazy label of dense id `id`.
    pub labels: Vec<Label>,
    /// Dense ids with at least one neighbor outside the truncation.
    pub boundary: Vec<Vertex>,
    pub matching: Matching,
    index: BTreeMap<Label, Vertex>,
}

impl Truncation {
    pub fn id(&self, label: Label) -> Option<Vertex> {
        self.index.get(&label).copied()
    }

    pub fn label(&self, id: Vertex) -> Label {
        self.labels[id]
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }
}

fn checked_neighbors(lazy: &dyn LazyGraph, v: Label) -> Result<Vec<Label>, OracleError> {
    let list = lazy.neighbors(v);
    if list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(OracleError::Unsorted(v));
    }
    if list.binary_search(&v).is_ok() {
        return Err(OracleError::SelfLoop(v));
    }
    Ok(list)
}

/// BFS ball of radius `r` around the base, closed under the mate oracle.
///
/// Dense ids are assigned in order of (distance from the base, label), with
/// mates added by the closure counted at distance `r + 1`. The ordering only
/// depends on the ball, so a vertex keeps its relative position across radii.
pub fn truncate_saturated(lazy: &dyn LazyGraph, r: usize) -> Result<Truncation, OracleError> {
    let base = lazy.base();
    let mut dist: BTreeMap<Label, usize> = BTreeMap::new();
    let mut adjacency: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    dist.insert(base, 0);
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        let list = checked_neighbors(lazy, v)?;
        if d < r {
            for &w in &list {
                if !dist.contains_key(&w) {
                    dist.insert(w, d + 1);
                    queue.push_back(w);
                }
            }
        }
        adjacency.insert(v, list);
    }
    let ball: Vec<Label> = dist.keys().copied().collect();
    for v in ball {
        let mate = lazy.mate(v).ok_or(OracleError::NoMate(v))?;
        if !adjacency[&v].contains(&mate) || lazy.mate(mate) != Some(v) {
            return Err(OracleError::BadMate { v, mate });
        }
        if !dist.contains_key(&mate) {
            dist.insert(mate, r + 1);
            adjacency.insert(mate, checked_neighbors(lazy, mate)?);
        }
    }
    // every queried pair must be listed from both sides
    for (&v, list) in &adjacency {
        for w in list {
            if let Some(back) = adjacency.get(w) {
                if back.binary_search(&v).is_err() {
                    return Err(OracleError::Asymmetric { u: *w, v });
                }
            }
        }
    }
    let mut order: Vec<(usize, Label)> = dist.iter().map(|(&v, &d)| (d, v)).collect();
    order.sort_unstable();
    let labels: Vec<Label> = order.into_iter().map(|(_, v)| v).collect();
    let index: BTreeMap<Label, Vertex> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    let mut boundary = Vec::new();
    for (id, v) in labels.iter().enumerate() {
        let mut outside = false;
        for w in &adjacency[v] {
            match index.get(w) {
                Some(&j) if id < j => edges.push((id, j)),
                Some(_) => {}
                None => outside = true,
            }
        }
        if outside {
            boundary.push(id);
        }
    }
    let graph = Graph::from_edges(labels.len(), edges).expect("ids are dense");
    let pairs = labels
        .iter()
        .enumerate()
        .filter_map(|(id, v)| {
            let j = index[&lazy.mate(*v).expect("checked above")];
            (id < j).then_some((id, j))
        })
        .collect::<Vec<_>>();
    let matching = Matching::from_pairs(labels.len(), pairs).expect("the mate oracle is an involution");
    Ok(Truncation {
        radius: r,
        graph,
        labels,
        boundary,
        matching,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_labels(t: &Truncation) -> Vec<Label> {
        let mut l = t.labels.clone();
        l.sort_unstable();
        l
    }

    #[test]
    fn double_ray_ball() {
        let t = truncate_saturated(&DoubleRay, 2).unwrap();
        assert_eq!(sorted_labels(&t), vec![-2, -1, 0, 1, 2, 3]);
        assert_eq!(t.labels, vec![0, -1, 1, -2, 2, 3]);
        assert_eq!(t.graph.m(), 5);
        let boundary: Vec<Label> = t.boundary.iter().map(|&v| t.label(v)).collect();
        assert_eq!(boundary, vec![-2, 3]);
        assert!(t.matching.is_perfect());
    }

    #[test]
    fn radius_zero_is_base_pair() {
        for name in FAMILY_NAMES {
            let lazy = family(name).unwrap();
            let t = truncate_saturated(lazy.as_ref(), 0).unwrap();
            let base = lazy.base();
            let mut expected = vec![base, lazy.mate(base).unwrap()];
            expected.sort_unstable();
            assert_eq!(sorted_labels(&t), expected, "{name}");
        }
    }

    #[test]
    fn ladder_ball() {
        let t = truncate_saturated(&Ladder, 1).unwrap();
        assert_eq!(sorted_labels(&t), vec![-2, -1, 0, 1, 2, 3]);
        // three rungs and two rail pairs
        assert_eq!(t.graph.m(), 7);
    }

    #[test]
    fn binary_tree_ball() {
        let t = truncate_saturated(&MatchedBinaryTree, 2).unwrap();
        // a_1, b_1, a_2, a_3 and their mates b_2, b_3
        assert_eq!(sorted_labels(&t), vec![2, 3, 4, 5, 6, 7]);
        assert_eq!(t.graph.m(), 5);
    }

    struct OneWay;
    impl LazyGraph for OneWay {
        fn name(&self) -> &str {
            "one-way"
        }
        fn base(&self) -> Label {
            0
        }
        fn neighbors(&self, v: Label) -> Vec<Label> {
            // 0 sees 2 but 2 does not see 0
            match v {
                0 => vec![1, 2],
                1 => vec![0],
                2 => vec![3],
                _ => vec![2],
            }
        }
        fn mate(&self, v: Label) -> Option<Label> {
            Some(v ^ 1)
        }
    }

    #[test]
    fn asymmetry_is_detected() {
        assert_eq!(
            truncate_saturated(&OneWay, 1),
            Err(OracleError::Asymmetric { u: 2, v: 0 })
        );
    }
}
