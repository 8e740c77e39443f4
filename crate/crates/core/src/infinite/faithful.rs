//! Finite separator test standing in for faithfulness: removing a separator
//! must leave the boundary-touching components of the host graph and of its
//! spanning subgraph in one-to-one correspondence.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{is_connected, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaithfulnessError {
    /// `H` does not have the vertex set of `G` or uses an edge outside `G`.
    NotSpanning,
    Disconnected,
    OutOfRange(Vertex),
}

impl fmt::Display for FaithfulnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaithfulnessError::NotSpanning => write!(f, "H is not a spanning subgraph of G"),
            FaithfulnessError::Disconnected => write!(f, "H is not connected"),
            FaithfulnessError::OutOfRange(v) => write!(f, "vertex {v} is not a vertex of G"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeparatorReport {
    pub separator: Vec<Vertex>,
    /// The separator together with every vertex within `widen` steps of it in `H`.
    pub removed: Vec<Vertex>,
    /// Boundary-touching components of `G` minus the removed set.
    pub host_ends: usize,
    /// Boundary-touching components of `H` minus the removed set.
    pub sub_ends: usize,
    pub refines: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FaithfulnessReport {
    pub widen: usize,
    pub samples: Vec<SeparatorReport>,
    pub passed: bool,
}

fn component_labels(g: &Graph, removed: &[bool]) -> Vec<Option<usize>> {
    let mut label = vec![None; g.n()];
    let mut next = 0;
    for s in 0..g.n() {
        if removed[s] || label[s].is_some() {
            continue;
        }
        label[s] = Some(next);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !removed[w] && label[w].is_none() {
                    label[w] = Some(next);
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// For each separator `S`, removes `S` and its `widen`-neighbourhood in `H`,
/// then checks that every component of `H` lies inside one component of `G`
/// and that each boundary-touching component of `G` contains exactly one
/// boundary-touching component of `H`.
///
/// Widening matters for powers: in `T_B^3` an edge can jump over a
/// separator of `T` that is thinner than two vertices on each side.
pub fn faithfulness_check(
    g: &Graph,
    h: &Graph,
    separators: &[Vec<Vertex>],
    boundary: &[Vertex],
    widen: usize,
) -> Result<FaithfulnessReport, FaithfulnessError> {
    let n = g.n();
    if h.n() != n || !h.is_subgraph_of(g) {
        return Err(FaithfulnessError::NotSpanning);
    }
    if !is_connected(h) {
        return Err(FaithfulnessError::Disconnected);
    }
    if let Some(&v) = separators.iter().flatten().chain(boundary).find(|&&v| v >= n) {
        return Err(FaithfulnessError::OutOfRange(v));
    }
    let mut on_boundary = vec![false; n];
    for &v in boundary {
        on_boundary[v] = true;
    }
    let mut samples = Vec::with_capacity(separators.len());
    for sep in separators {
        let mut removed = vec![false; n];
        let mut frontier: Vec<Vertex> = sep.clone();
        for &v in sep {
            removed[v] = true;
        }
        for _ in 0..widen {
            let mut next = Vec::new();
            for v in frontier {
                for &w in h.neighbors(v) {
                    if !removed[w] {
                        removed[w] = true;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        let host = component_labels(g, &removed);
        let sub = component_labels(h, &removed);
        let host_count = host.iter().flatten().max().map_or(0, |&c| c + 1);
        let sub_count = sub.iter().flatten().max().map_or(0, |&c| c + 1);
        let mut host_of_sub: Vec<Option<usize>> = vec![None; sub_count];
        let mut refines = true;
        let mut host_touch = vec![false; host_count];
        let mut sub_touch = vec![false; sub_count];
        for v in 0..n {
            if let (Some(a), Some(b)) = (host[v], sub[v]) {
                match host_of_sub[b] {
                    None => host_of_sub[b] = Some(a),
                    Some(c) if c != a => refines = false,
                    _ => {}
                }
                if on_boundary[v] {
                    host_touch[a] = true;
                    sub_touch[b] = true;
                }
            }
        }
        let mut ends_inside = vec![0usize; host_count];
        for b in 0..sub_count {
            if sub_touch[b] {
                ends_inside[host_of_sub[b].expect("every component has a vertex")] += 1;
            }
        }
        let host_ends = host_touch.iter().filter(|&&t| t).count();
        let sub_ends = sub_touch.iter().filter(|&&t| t).count();
        let matched = (0..host_count).all(|a| !host_touch[a] || ends_inside[a] == 1);
        samples.push(SeparatorReport {
            separator: sep.clone(),
            removed: (0..n).filter(|&v| removed[v]).collect(),
            host_ends,
            sub_ends,
            refines,
            passed: refines && matched && host_ends == sub_ends,
        });
    }
    let passed = samples.iter().all(|s| s.passed);
    Ok(FaithfulnessReport { widen, samples, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipower::bipower;
    use crate::infinite::lazy::{truncate_saturated, DoubleRay};

    #[test]
    fn identical_graphs_pass() {
        let t = truncate_saturated(&DoubleRay, 4).unwrap();
        let r = faithfulness_check(&t.graph, &t.graph, &[vec![0, 2]], &t.boundary, 0).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn path_inside_its_bipower() {
        let t = truncate_saturated(&DoubleRay, 4).unwrap();
        let g = bipower(&t.graph, 3);
        let middle = vec![t.id(0).unwrap(), t.id(1).unwrap()];
        let r = faithfulness_check(&g, &t.graph, &[middle.clone()], &t.boundary, 1).unwrap();
        assert!(r.passed);
        assert_eq!((r.samples[0].host_ends, r.samples[0].sub_ends), (2, 2));
        // without widening the bi-power jumps over the pair and merges the sides
        let r = faithfulness_check(&g, &t.graph, &[middle], &t.boundary, 0).unwrap();
        assert!(!r.passed);
        assert_eq!(r.samples[0].host_ends, 1);
    }

    #[test]
    fn tree_merging_ends_fails() {
        // ladder segment x = -3..=3, vertex (x, s) = 2(x + 3) + s; the tree
        // keeps both rails and only the leftmost rung, so the two right
        // rails stay apart in H although the rungs join them in G
        let id = |x: i64, s: i64| (2 * (x + 3) + s) as usize;
        let mut g_edges = Vec::new();
        let mut h_edges = Vec::new();
        for x in -3..=3 {
            g_edges.push((id(x, 0), id(x, 1)));
            if x < 3 {
                for s in 0..2 {
                    g_edges.push((id(x, s), id(x + 1, s)));
                    h_edges.push((id(x, s), id(x + 1, s)));
                }
            }
        }
        h_edges.push((id(-3, 0), id(-3, 1)));
        let g = Graph::from_edges(14, g_edges).unwrap();
        let h = Graph::from_edges(14, h_edges).unwrap();
        let boundary = vec![id(-3, 0), id(-3, 1), id(3, 0), id(3, 1)];
        let rung = vec![id(0, 0), id(0, 1)];
        let r = faithfulness_check(&g, &h, &[rung], &boundary, 1).unwrap();
        assert!(!r.passed);
        assert_eq!((r.samples[0].host_ends, r.samples[0].sub_ends), (2, 3));
    }

    #[test]
    fn errors() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let other = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(
            faithfulness_check(&p3, &other, &[], &[], 0),
            Err(FaithfulnessError::NotSpanning)
        );
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            faithfulness_check(&p3, &split, &[], &[], 0),
            Err(FaithfulnessError::Disconnected)
        );
    }
}
