//! Limit graph, cut bounds, and the bundled certificate with its re-check.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bipower::bipower;
use crate::graph::{is_tree, Graph, Vertex};
use crate::infinite::faithful::{faithfulness_check, FaithfulnessReport};
use crate::infinite::lazy::{Label, LazyGraph};
use crate::infinite::sequence::{
    cycle_sequence, stabilization_check, step_reports, CycleSequence, Ids, SequenceError, Stabilization, StepReport,
};
use crate::matching::Matching;

/// Largest allowed number of limit-graph edges across a cut edge.
pub const CUT_BOUND: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndDegreeError {
    NotATree,
    SizeMismatch,
    NotTreeEdge(Vertex, Vertex),
    /// A component of `T - F` reaches the boundary but splits a matched
    /// pair, so it cannot be certified finite.
    OpenComponent(Vertex),
}

impl fmt::Display for EndDegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndDegreeError::NotATree => write!(f, "reference graph is not a tree"),
            EndDegreeError::SizeMismatch => write!(f, "graphs and matching disagree on the vertex count"),
            EndDegreeError::NotTreeEdge(u, v) => write!(f, "{u} {v} is not a tree edge"),
            EndDegreeError::OpenComponent(v) => {
                write!(f, "component of T - F at {v} touches the boundary without being mate-closed")
            }
        }
    }
}

/// Number of `gp`-edges between the two sides of `T - e`, for each `e` in `f`.
pub fn cut_sizes(
    gp: &Graph,
    tree: &Graph,
    f: &[(Vertex, Vertex)],
    matching: &Matching,
    boundary: &[Vertex],
) -> Result<Vec<usize>, EndDegreeError> {
    let n = tree.n();
    if gp.n() != n || matching.n() != n {
        return Err(EndDegreeError::SizeMismatch);
    }
    if !is_tree(tree) {
        return Err(EndDegreeError::NotATree);
    }
    let removed: BTreeSet<(Vertex, Vertex)> = f.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    if let Some(&(u, v)) = removed.iter().find(|&&(u, v)| !tree.has_edge(u, v)) {
        return Err(EndDegreeError::NotTreeEdge(u, v));
    }
    // components of T - F that reach the boundary must be unions of pairs
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in tree.neighbors(v) {
                if comp[w] == usize::MAX && !removed.contains(&(v.min(w), v.max(w))) {
                    comp[w] = s;
                    stack.push(w);
                }
            }
        }
    }
    let touching: BTreeSet<usize> = boundary.iter().filter(|&&b| b < n).map(|&b| comp[b]).collect();
    for v in 0..n {
        if touching.contains(&comp[v]) && matching.mate(v).map_or(true, |w| comp[w] != comp[v]) {
            return Err(EndDegreeError::OpenComponent(v));
        }
    }
    let mut out = Vec::with_capacity(f.len());
    for &(u, v) in f {
        let side = side_of(tree, u, v);
        out.push(gp.edges().filter(|&(a, b)| side[a] != side[b]).count());
    }
    Ok(out)
}

fn side_of(tree: &Graph, u: Vertex, v: Vertex) -> Vec<bool> {
    let mut side = vec![false; tree.n()];
    side[u] = true;
    let mut stack = vec![u];
    while let Some(a) = stack.pop() {
        for &b in tree.neighbors(a) {
            if !side[b] && !(a == u && b == v) {
                side[b] = true;
                stack.push(b);
            }
        }
    }
    side
}

/// Maximum over `e` in `F` of the number of `gp`-edges between the two
/// components of `T - e`; zero when `F` is empty.
pub fn end_degree_bound(
    gp: &Graph,
    tree: &Graph,
    f: &[(Vertex, Vertex)],
    matching: &Matching,
    boundary: &[Vertex],
) -> Result<usize, EndDegreeError> {
    Ok(cut_sizes(gp, tree, f, matching, boundary)?.into_iter().max().unwrap_or(0))
}

/// The tree together with the edges of the given cycles.
pub fn limit_graph(tree: &Graph, cycles: &[&[Vertex]]) -> Graph {
    let mut edges = tree.edge_vec();
    for c in cycles {
        for i in 0..c.len() {
            edges.push((c[i], c[(i + 1) % c.len()]));
        }
    }
    Graph::from_edges(tree.n(), edges).expect("cycle vertices are tree vertices")
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CycleCoverReport {
    /// Every cycle is a cycle of the limit graph.
    pub cycles_in_limit: bool,
    /// Each cycle's vertex set contains the previous one.
    pub increasing: bool,
    pub passed: bool,
}

/// Checks that each sequence is a cycle of `gp` and that their vertex sets grow.
pub fn cycle_cover_check(gp: &Graph, cycles: &[&[Vertex]]) -> CycleCoverReport {
    let is_cycle = |c: &[Vertex]| {
        let distinct: BTreeSet<Vertex> = c.iter().copied().collect();
        c.len() >= 3
            && distinct.len() == c.len()
            && c.iter().all(|&v| v < gp.n())
            && (0..c.len()).all(|i| gp.has_edge(c[i], c[(i + 1) % c.len()]))
    };
    let cycles_in_limit = cycles.iter().all(|c| is_cycle(c));
    let increasing = cycles.windows(2).all(|w| {
        let later: BTreeSet<Vertex> = w[1].iter().copied().collect();
        w[0].iter().all(|v| later.contains(v))
    });
    CycleCoverReport {
        cycles_in_limit,
        increasing,
        passed: cycles_in_limit && increasing,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LimitReport {
    /// Host-tree edges leaving the sets of the extraction stages.
    pub cut_edges: Vec<(Label, Label)>,
    /// Limit-graph edges across each cut edge, in the order of `cut_edges`.
    pub cut_sizes: Vec<usize>,
    pub cut_bound: usize,
    pub cycle_cover: CycleCoverReport,
}

/// Finite evidence for a Hamiltonian circle in the third bi-power of a
/// locally finite graph. Everything needed to re-check it is stored inline.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub family: String,
    pub schedule: Vec<usize>,
    pub sequence: CycleSequence,
    pub steps: Vec<StepReport>,
    pub stabilization: Stabilization,
    pub limit: LimitReport,
    /// Matched pairs used as separators, in labels.
    pub separators: Vec<Vec<Label>>,
    /// Host tree inside its third bi-power, separators widened by one;
    /// vertices are host positions.
    pub power_faithfulness: FaithfulnessReport,
    /// Host tree inside the host truncation.
    pub tree_faithfulness: FaithfulnessReport,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateError {
    Sequence(SequenceError),
    /// The stored data does not describe a consistent host.
    Malformed(String),
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::Sequence(e) => write!(f, "{e}"),
            CertificateError::Malformed(e) => write!(f, "malformed certificate: {e}"),
        }
    }
}

impl From<SequenceError> for CertificateError {
    fn from(e: SequenceError) -> Self {
        CertificateError::Sequence(e)
    }
}

fn empty_faithfulness(widen: usize) -> FaithfulnessReport {
    FaithfulnessReport {
        widen,
        samples: Vec::new(),
        passed: false,
    }
}

/// Runs every check on a stored sequence and separator sample.
fn assess(
    family: String,
    schedule: Vec<usize>,
    sequence: CycleSequence,
    separators: Vec<Vec<Label>>,
) -> Result<Certificate, CertificateError> {
    let malformed = CertificateError::Malformed;
    let mut failures = Vec::new();
    let steps = step_reports(&sequence);
    for r in &steps {
        if !r.passed() {
            failures.push(alloc::format!("step {}: {}", r.step, r.failures.join("; ")));
        }
    }
    let host = &sequence.host;
    let ids = Ids::new(&host.vertices);
    let tree = ids.graph(&host.tree_edges).map_err(malformed)?;
    let graph = ids.graph(&host.edges).map_err(malformed)?;
    let mgraph = ids.graph(&host.matching).map_err(malformed)?;
    let matching = Matching::from_pairs(tree.n(), mgraph.edges())
        .map_err(|e| CertificateError::Malformed(e.to_string()))?;
    let boundary = ids.seq(&host.boundary).map_err(malformed)?;
    if !is_tree(&tree) || !tree.is_subgraph_of(&graph) || !matching.is_perfect() {
        failures.push("host tree is not a spanning tree with a perfect matching".to_string());
    }

    let stabilization = stabilization_check(&sequence).map_err(malformed)?;
    if stabilization.windows.is_empty() {
        failures.push("no window lies away from the boundary".to_string());
    }
    for w in &stabilization.windows {
        if w.largest.is_empty() {
            failures.push(alloc::format!("window {} has no stabilized subsequence", w.step));
        }
    }
    if stabilization.stages.is_empty() {
        failures.push("nested extraction produced no stage".to_string());
    }

    let cycles: Vec<Vec<Vertex>> = stabilization
        .diagonal
        .iter()
        .map(|&j| ids.seq(&sequence.steps[j].cycle))
        .collect::<Result<_, _>>()
        .map_err(malformed)?;
    let cycle_refs: Vec<&[Vertex]> = cycles.iter().map(Vec::as_slice).collect();
    let gp = limit_graph(&tree, &cycle_refs);
    let mut cut_edges: Vec<(Label, Label)> = stabilization
        .stages
        .iter()
        .flat_map(|s| s.tree_cut.iter().copied())
        .collect();
    cut_edges.sort_unstable();
    cut_edges.dedup();
    let f: Vec<(Vertex, Vertex)> = cut_edges
        .iter()
        .map(|&(a, b)| Ok((ids.get(a).ok_or(a)?, ids.get(b).ok_or(b)?)))
        .collect::<Result<_, Label>>()
        .map_err(|l| CertificateError::Malformed(alloc::format!("cut vertex {l} is not listed")))?;
    let sizes = match cut_sizes(&gp, &tree, &f, &matching, &boundary) {
        Ok(s) => s,
        Err(e) => {
            failures.push(alloc::format!("cut bound: {e}"));
            Vec::new()
        }
    };
    let cut_bound = sizes.iter().copied().max().unwrap_or(0);
    if cut_bound > CUT_BOUND {
        failures.push(alloc::format!("limit graph has {cut_bound} edges across a cut edge"));
    }
    let cycle_cover = cycle_cover_check(&gp, &cycle_refs);
    if !cycle_cover.passed {
        failures.push("diagonal cycles do not form a growing cycle cover of the limit graph".to_string());
    }

    let sep_ids: Vec<Vec<Vertex>> = separators
        .iter()
        .map(|s| ids.seq(s))
        .collect::<Result<_, _>>()
        .map_err(malformed)?;
    if sep_ids.is_empty() {
        failures.push("no separator was sampled".to_string());
    }
    let power_faithfulness = faithfulness_check(&bipower(&tree, 3), &tree, &sep_ids, &boundary, 1)
        .unwrap_or_else(|e| {
            failures.push(alloc::format!("faithfulness in the bi-power: {e}"));
            empty_faithfulness(1)
        });
    let tree_faithfulness = faithfulness_check(&graph, &tree, &sep_ids, &boundary, 0).unwrap_or_else(|e| {
        failures.push(alloc::format!("faithfulness in the truncation: {e}"));
        empty_faithfulness(0)
    });
    for (name, report) in [("bi-power", &power_faithfulness), ("truncation", &tree_faithfulness)] {
        for s in report.samples.iter().filter(|s| !s.passed) {
            failures.push(alloc::format!("faithfulness in the {name} fails at separator {:?}", s.separator));
        }
    }

    Ok(Certificate {
        family,
        schedule,
        steps,
        stabilization,
        limit: LimitReport {
            cut_edges,
            cut_sizes: sizes,
            cut_bound,
            cycle_cover,
        },
        separators,
        power_faithfulness,
        tree_faithfulness,
        passed: failures.is_empty(),
        failures,
        sequence,
    })
}

/// Matched pairs of the host at tree distance at least three from the boundary.
fn interior_pairs(seq: &CycleSequence) -> Vec<Vec<Label>> {
    let host = &seq.host;
    let ids = Ids::new(&host.vertices);
    let Ok(tree) = ids.graph(&host.tree_edges) else {
        return Vec::new();
    };
    let mut depth = vec![usize::MAX; tree.n()];
    let mut queue: alloc::collections::VecDeque<Vertex> = host.boundary.iter().filter_map(|&b| ids.get(b)).collect();
    for &v in &queue {
        depth[v] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for &w in tree.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    host.matching
        .iter()
        .filter(|&&(a, b)| [a, b].iter().all(|&l| ids.get(l).is_some_and(|v| depth[v] >= 3)))
        .map(|&(a, b)| vec![a, b])
        .collect()
}

/// Builds the cycle sequence for `schedule` and certifies it.
pub fn infinite_certificate(lazy: &dyn LazyGraph, schedule: &[usize]) -> Result<Certificate, CertificateError> {
    let sequence = cycle_sequence(lazy, schedule)?;
    let separators = interior_pairs(&sequence);
    assess(lazy.name().to_string(), schedule.to_vec(), sequence, separators)
}

/// Outcome of re-checking a stored certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recheck {
    /// Every report recomputed from the stored data.
    pub recomputed: Certificate,
    /// The stored reports agree with the recomputed ones.
    pub consistent: bool,
}

impl Recheck {
    pub fn passed(&self) -> bool {
        self.consistent && self.recomputed.passed
    }
}

/// Recomputes every report of `cert` from its stored sequence and separators
/// without querying any oracle, and compares with what was stored.
pub fn recheck_certificate(cert: &Certificate) -> Result<Recheck, CertificateError> {
    let recomputed = assess(
        cert.family.clone(),
        cert.schedule.clone(),
        cert.sequence.clone(),
        cert.separators.clone(),
    )?;
    let consistent = recomputed == *cert;
    Ok(Recheck { recomputed, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinite::lazy::{truncate_saturated, DoubleRay, Ladder, MatchedBinaryTree};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn path_matching(n: usize) -> Matching {
        Matching::from_pairs(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1))).unwrap()
    }

    #[test]
    fn tree_alone_has_bound_one() {
        let t = path(6);
        let f = [(1, 2), (3, 4)];
        assert_eq!(end_degree_bound(&t, &t, &f, &path_matching(6), &[0, 5]), Ok(1));
    }

    #[test]
    fn tree_with_cycle_has_bound_three() {
        let t = truncate_saturated(&DoubleRay, 4).unwrap();
        let m = &t.matching;
        let cycle = crate::ham::ham_cycle(&t.graph, m).unwrap();
        let gp = limit_graph(&t.graph, &[cycle.vertices()]);
        let f: Vec<_> = t.graph.edges().filter(|&(u, v)| !m.contains(u, v)).collect();
        assert_eq!(end_degree_bound(&gp, &t.graph, &f, m, &t.boundary), Ok(3));
    }

    #[test]
    fn full_bipower_exceeds_three() {
        let t = path(6);
        let all = t.edge_vec();
        assert_eq!(end_degree_bound(&bipower(&t, 3), &t, &all, &path_matching(6), &[]), Ok(4));
    }

    #[test]
    fn end_degree_errors() {
        let t = path(6);
        let m = path_matching(6);
        assert_eq!(
            end_degree_bound(&t, &t, &[(0, 2)], &m, &[]),
            Err(EndDegreeError::NotTreeEdge(0, 2))
        );
        // cutting a matching edge leaves the boundary component split from its mate
        assert_eq!(
            end_degree_bound(&t, &t, &[(0, 1)], &m, &[0]),
            Err(EndDegreeError::OpenComponent(0))
        );
    }

    #[test]
    fn cycle_cover_examples() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let ok = cycle_cover_check(&c4, &[&[0, 1, 2, 3]]);
        assert!(ok.passed);
        let bad = cycle_cover_check(&c4, &[&[0, 2, 1, 3]]);
        assert!(!bad.cycles_in_limit);
    }

    #[test]
    fn families_certify_and_recheck() {
        let cases: [(&dyn LazyGraph, usize); 3] = [(&DoubleRay, 8), (&Ladder, 6), (&MatchedBinaryTree, 5)];
        for (lazy, top) in cases {
            let schedule: Vec<usize> = (1..=top).collect();
            let cert = infinite_certificate(lazy, &schedule).unwrap();
            assert!(cert.passed, "{}: {:?}", lazy.name(), cert.failures);
            assert!(cert.limit.cut_bound <= CUT_BOUND);
            let again = recheck_certificate(&cert).unwrap();
            assert!(again.passed());
        }
    }

    #[test]
    fn tampered_certificate_fails_recheck() {
        let mut cert = infinite_certificate(&DoubleRay, &[1, 2, 3, 4, 5, 6]).unwrap();
        cert.sequence.steps[2].cycle.swap(0, 1);
        let again = recheck_certificate(&cert).unwrap();
        assert!(!again.passed());
        assert!(!again.consistent);
    }
}
