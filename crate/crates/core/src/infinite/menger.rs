//! Maximum number of vertex-disjoint paths between two vertex sets, with a
//! minimum separator, via unit vertex capacities and augmenting paths.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MengerError {
    /// `A` and `B` must be disjoint.
    Overlap(Vertex),
    OutOfRange(Vertex),
}

impl fmt::Display for MengerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MengerError::Overlap(v) => write!(f, "vertex {v} lies in both A and B"),
            MengerError::OutOfRange(v) => write!(f, "vertex {v} is not a vertex of the graph"),
        }
    }
}

/// Result of [`disjoint_paths`]: `paths.len() == count == separator.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPaths {
    pub count: usize,
    /// Pairwise vertex-disjoint paths, each from a vertex of `A` to a vertex of `B`.
    pub paths: Vec<Vec<Vertex>>,
    /// A set of `count` vertices meeting every `(A, B)`-path.
    pub separator: Vec<Vertex>,
}

struct Network {
    head: Vec<usize>,
    cap: Vec<i64>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: i64) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn tail(&self, arc: usize) -> usize {
        self.head[arc ^ 1]
    }

    /// Residual BFS from `source`; returns the arc used to enter each node.
    fn search(&self, source: usize) -> Vec<Option<usize>> {
        let mut via = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = Some(a);
                    queue.push_back(y);
                }
            }
        }
        via
    }
}

/// Maximum number of pairwise vertex-disjoint `(A, B)`-paths in `g`.
///
/// Every vertex `v` becomes an arc `v_in -> v_out` of capacity one; edges
/// and the source/sink attachments are uncapacitated, so the minimum cut
/// found after the last augmentation consists of vertex arcs only and gives
/// a separator of the same size.
pub fn disjoint_paths(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<DisjointPaths, MengerError> {
    let n = g.n();
    if let Some(&v) = a.iter().chain(b).find(|&&v| v >= n) {
        return Err(MengerError::OutOfRange(v));
    }
    let mut in_a = vec![false; n];
    for &v in a {
        in_a[v] = true;
    }
    if let Some(&v) = b.iter().find(|&&v| in_a[v]) {
        return Err(MengerError::Overlap(v));
    }
    let big = n as i64 + 1;
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut net = Network::new(2 * n + 2);
    let mut vertex_arc = vec![0; n];
    for v in 0..n {
        vertex_arc[v] = net.head.len();
        net.arc(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, big);
        net.arc(2 * v + 1, 2 * u, big);
    }
    let mut in_b = vec![false; n];
    for &v in a {
        net.arc(source, 2 * v, big);
    }
    for &v in b {
        if !in_b[v] {
            in_b[v] = true;
            net.arc(2 * v + 1, sink, big);
        }
    }
    let mut count = 0;
    let via = loop {
        let via = net.search(source);
        if via[sink].is_none() {
            break via;
        }
        let mut x = sink;
        while let Some(arc) = via[x] {
            net.cap[arc] -= 1;
            net.cap[arc ^ 1] += 1;
            x = net.tail(arc);
        }
        count += 1;
    };
    let reached = |x: usize| x == source || via[x].is_some();
    let separator: Vec<Vertex> = (0..n).filter(|&v| reached(2 * v) && !reached(2 * v + 1)).collect();

    // flow decomposition: a vertex arc carries flow when its capacity is used
    let used = |v: Vertex| net.cap[vertex_arc[v]] == 0;
    let mut paths = Vec::with_capacity(count);
    for &start in a {
        if !used(start) || paths.iter().any(|p: &Vec<Vertex>| p[0] == start) {
            continue;
        }
        // only start a path where flow enters from the source
        let from_source = net.out[2 * start]
            .iter()
            .any(|&arc| net.head[arc] == source && net.cap[arc] > 0 && arc % 2 == 1);
        if !from_source {
            continue;
        }
        let mut path = vec![start];
        let mut v = start;
        while !in_b[v] || !ends_here(&net, v, sink) {
            let next = net.out[2 * v + 1]
                .iter()
                .filter(|&&arc| arc % 2 == 0 && net.head[arc] != sink)
                .find(|&&arc| net.cap[arc ^ 1] > 0)
                .map(|&arc| net.head[arc] / 2)
                .expect("flow leaving a used vertex continues");
            path.push(next);
            v = next;
        }
        paths.push(path);
    }
    Ok(DisjointPaths {
        count,
        paths,
        separator,
    })
}

fn ends_here(net: &Network, v: Vertex, sink: usize) -> bool {
    net.out[2 * v + 1]
        .iter()
        .any(|&arc| arc % 2 == 0 && net.head[arc] == sink && net.cap[arc ^ 1] > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::layered_counterexample;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn check_paths(g: &Graph, a: &[Vertex], b: &[Vertex], r: &DisjointPaths) {
        assert_eq!(r.paths.len(), r.count);
        assert_eq!(r.separator.len(), r.count);
        let mut used = vec![false; g.n()];
        for p in &r.paths {
            assert!(a.contains(&p[0]));
            assert!(b.contains(p.last().unwrap()));
            for w in p.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
            for &v in p {
                assert!(!used[v]);
                used[v] = true;
            }
        }
    }

    #[test]
    fn path_example() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let r = disjoint_paths(&p4, &[0], &[3]).unwrap();
        assert_eq!(r.count, 1);
        assert_eq!(r.paths, vec![vec![0, 1, 2, 3]]);
        check_paths(&p4, &[0], &[3], &r);
    }

    #[test]
    fn complete_bipartite_example() {
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                edges.push((u, v));
            }
        }
        let k33 = graph(6, &edges);
        let r = disjoint_paths(&k33, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert_eq!(r.count, 3);
        check_paths(&k33, &[0, 1, 2], &[3, 4, 5], &r);
    }

    #[test]
    fn layered_width() {
        for k in 1..=3 {
            let l = layered_counterexample(k, 3, 4).unwrap();
            let (a, b) = (&l.layers[0], &l.layers[5]);
            let r = disjoint_paths(&l.graph, a, b).unwrap();
            assert_eq!(r.count, k);
            check_paths(&l.graph, a, b, &r);
            // the separator is one of the inner layers
            assert!(l.layers[1..5].iter().any(|layer| *layer == r.separator));
        }
    }

    #[test]
    fn errors() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(disjoint_paths(&p4, &[0, 1], &[1]), Err(MengerError::Overlap(1)));
        assert_eq!(disjoint_paths(&p4, &[0], &[9]), Err(MengerError::OutOfRange(9)));
        let r = disjoint_paths(&p4, &[], &[3]).unwrap();
        assert_eq!(r.count, 0);
    }
}
