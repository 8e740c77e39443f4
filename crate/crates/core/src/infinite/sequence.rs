//! Cycle sequences over growing truncations and the extraction of a
//! stabilized diagonal subsequence.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bipower::bipower;
use crate::graph::{is_tree, Graph, Vertex};
use crate::ham::{ham_cycle, HamError};
use crate::infinite::lazy::{truncate_saturated, Label, LazyGraph, OracleError};
use crate::infinite::tree::{lift_tree, matched_quotient, normal_spanning_tree_guided, TreeError};
use crate::matching::Matching;
use crate::verify::{crossing_counts, verify_bipower_cycle, Traversal};

/// Smallest vertex count for which a Hamiltonian cycle makes sense.
const MIN_CYCLE: usize = 4;

/// How far past a requested radius the truncation may grow to reach
/// [`MIN_CYCLE`] vertices.
const MAX_ADVANCE: usize = 64;

/// One finite stage: a matched subtree and a Hamiltonian cycle of its third
/// bi-power, all in lazy labels.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Step {
    pub requested_radius: usize,
    /// Radius actually used after advancing past too-small truncations.
    pub radius: usize,
    pub vertices: Vec<Label>,
    pub tree_edges: Vec<(Label, Label)>,
    pub matching: Vec<(Label, Label)>,
    pub cycle: Vec<Label>,
}

/// The largest truncation: the graph, its lifted spanning tree, and the
/// vertices that still have unexplored neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Host {
    pub vertices: Vec<Label>,
    pub edges: Vec<(Label, Label)>,
    pub tree_edges: Vec<(Label, Label)>,
    pub matching: Vec<(Label, Label)>,
    pub boundary: Vec<Label>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CycleSequence {
    pub family: String,
    pub steps: Vec<Step>,
    pub host: Host,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceError {
    EmptySchedule,
    NotIncreasing { previous: usize, next: usize },
    /// The truncation stayed below four vertices for every radius tried.
    TooSmall { radius: usize, vertices: usize },
    Oracle(OracleError),
    Tree(TreeError),
    Ham(HamError),
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::EmptySchedule => write!(f, "radius schedule is empty"),
            SequenceError::NotIncreasing { previous, next } => {
                write!(f, "radius schedule must increase strictly ({previous} then {next})")
            }
            SequenceError::TooSmall { radius, vertices } => {
                write!(f, "truncation at radius {radius} has only {vertices} vertices")
            }
            SequenceError::Oracle(e) => write!(f, "{e}"),
            SequenceError::Tree(e) => write!(f, "{e}"),
            SequenceError::Ham(e) => write!(f, "{e}"),
        }
    }
}

impl From<OracleError> for SequenceError {
    fn from(e: OracleError) -> Self {
        SequenceError::Oracle(e)
    }
}

impl From<TreeError> for SequenceError {
    fn from(e: TreeError) -> Self {
        SequenceError::Tree(e)
    }
}

impl From<HamError> for SequenceError {
    fn from(e: HamError) -> Self {
        SequenceError::Ham(e)
    }
}

fn ordered(a: Label, b: Label) -> (Label, Label) {
    (a.min(b), a.max(b))
}

/// Builds `T_i` and `C_i` for every radius of `schedule`.
///
/// Each truncation is reduced to its matched quotient, which gets a
/// depth-first tree that first follows the previous step's quotient tree;
/// the tree is lifted back using the cut edge with the smallest labels, and
/// the cycle comes from the finite construction on the lifted tree.
pub fn cycle_sequence(lazy: &dyn LazyGraph, schedule: &[usize]) -> Result<CycleSequence, SequenceError> {
    if schedule.is_empty() {
        return Err(SequenceError::EmptySchedule);
    }
    for w in schedule.windows(2) {
        if w[0] >= w[1] {
            return Err(SequenceError::NotIncreasing {
                previous: w[0],
                next: w[1],
            });
        }
    }
    let mut steps: Vec<Step> = Vec::new();
    let mut host = None;
    // previous quotient tree as (parent pair, child pair), pairs keyed by smaller label
    let mut previous_qtree: BTreeSet<(Label, Label)> = BTreeSet::new();
    for &requested in schedule {
        let mut radius = requested;
        if let Some(last) = steps.last() {
            if radius <= last.radius {
                // an earlier step already advanced past this radius
                continue;
            }
        }
        let mut trunc = truncate_saturated(lazy, radius)?;
        while trunc.n() < MIN_CYCLE {
            if radius >= requested + MAX_ADVANCE {
                return Err(SequenceError::TooSmall {
                    radius,
                    vertices: trunc.n(),
                });
            }
            radius += 1;
            trunc = truncate_saturated(lazy, radius)?;
        }
        let g = &trunc.graph;
        let m = &trunc.matching;
        let quotient = matched_quotient(g, m).map_err(TreeError::from)?;
        let pairs = m.pairs();
        let key = |p: usize| trunc.label(pairs[p].0).min(trunc.label(pairs[p].1));
        let pair_of_key: BTreeMap<Label, usize> = (0..pairs.len()).map(|p| (key(p), p)).collect();
        let preferred: BTreeSet<(Vertex, Vertex)> = previous_qtree
            .iter()
            .filter_map(|(a, b)| Some((*pair_of_key.get(a)?, *pair_of_key.get(b)?)))
            .collect();
        // the base is dense id 0, so its pair comes first
        let qtree = normal_spanning_tree_guided(&quotient, 0, &preferred)?;
        previous_qtree = qtree
            .parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (key(p), key(c))))
            .collect();
        let tree = lift_tree(g, m, &qtree.to_graph(), |cut| {
            *cut.iter()
                .min_by_key(|&&(u, v)| ordered(trunc.label(u), trunc.label(v)))
                .expect("cuts handed to the chooser are nonempty")
        })?;
        let cycle = ham_cycle(&tree, m)?;
        let label_edges = |h: &Graph| -> Vec<(Label, Label)> {
            let mut e: Vec<_> = h.edges().map(|(u, v)| ordered(trunc.label(u), trunc.label(v))).collect();
            e.sort_unstable();
            e
        };
        let mut matching: Vec<(Label, Label)> =
            pairs.iter().map(|&(u, v)| ordered(trunc.label(u), trunc.label(v))).collect();
        matching.sort_unstable();
        steps.push(Step {
            requested_radius: requested,
            radius,
            vertices: trunc.labels.clone(),
            tree_edges: label_edges(&tree),
            matching: matching.clone(),
            cycle: cycle.vertices().iter().map(|&v| trunc.label(v)).collect(),
        });
        host = Some(Host {
            vertices: trunc.labels.clone(),
            edges: label_edges(g),
            tree_edges: label_edges(&tree),
            matching,
            boundary: trunc.boundary.iter().map(|&v| trunc.label(v)).collect(),
        });
    }
    Ok(CycleSequence {
        family: lazy.name().to_string(),
        steps,
        host: host.expect("schedule is nonempty"),
    })
}

/// Label-to-id table of a vertex list.
pub(crate) struct Ids(BTreeMap<Label, Vertex>);

impl Ids {
    pub(crate) fn new(labels: &[Label]) -> Self {
        Ids(labels.iter().enumerate().map(|(i, &l)| (l, i)).collect())
    }

    pub(crate) fn get(&self, l: Label) -> Option<Vertex> {
        self.0.get(&l).copied()
    }

    pub(crate) fn graph(&self, edges: &[(Label, Label)]) -> Result<Graph, String> {
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            match (self.get(a), self.get(b)) {
                (Some(u), Some(v)) if u != v => out.push((u, v)),
                _ => return Err(alloc::format!("edge {a} {b} leaves the vertex list")),
            }
        }
        Ok(Graph::from_edges(self.0.len(), out).expect("ids come from the table"))
    }

    pub(crate) fn seq(&self, labels: &[Label]) -> Result<Vec<Vertex>, String> {
        labels
            .iter()
            .map(|&l| self.get(l).ok_or_else(|| alloc::format!("vertex {l} is not listed")))
            .collect()
    }
}

/// The two finite conditions checked at every step, plus nesting.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StepReport {
    pub step: usize,
    pub vertices: usize,
    /// The recorded tree is a spanning tree of the step's vertices and the
    /// recorded matching is a perfect matching inside it.
    pub tree_ok: bool,
    /// Every tree vertex lies on the cycle.
    pub covers: bool,
    /// The cycle is a Hamiltonian cycle of the third bi-power of the tree.
    pub cycle_valid: bool,
    /// Every non-matching tree edge is crossed exactly twice.
    pub crossings_ok: bool,
    /// The tree contains the previous step's tree.
    pub nested: bool,
    pub failures: Vec<String>,
}

impl StepReport {
    pub fn passed(&self) -> bool {
        self.tree_ok && self.covers && self.cycle_valid && self.crossings_ok
    }
}

/// Re-checks every step from its recorded data alone.
pub fn step_reports(seq: &CycleSequence) -> Vec<StepReport> {
    let mut out = Vec::with_capacity(seq.steps.len());
    for (i, step) in seq.steps.iter().enumerate() {
        let mut failures = Vec::new();
        let ids = Ids::new(&step.vertices);
        let tree = ids.graph(&step.tree_edges);
        let matching = ids.graph(&step.matching);
        let cycle = ids.seq(&step.cycle);
        let (mut tree_ok, mut cycle_valid, mut crossings_ok) = (false, false, false);
        let cycle_labels: BTreeSet<Label> = step.cycle.iter().copied().collect();
        let covers = step.vertices.iter().all(|v| cycle_labels.contains(v));
        if !covers {
            failures.push("cycle misses tree vertices".to_string());
        }
        match (tree, matching) {
            (Ok(tree), Ok(mgraph)) => {
                let perfect = Matching::from_pairs(tree.n(), mgraph.edges())
                    .ok()
                    .filter(|m| m.is_perfect() && mgraph.is_subgraph_of(&tree));
                tree_ok = is_tree(&tree) && perfect.is_some();
                if !tree_ok {
                    failures.push("tree or matching is malformed".to_string());
                }
                match (&cycle, perfect) {
                    (Ok(cycle), Some(m)) => {
                        let report = verify_bipower_cycle(&tree, cycle, 3);
                        cycle_valid = report.passed();
                        if !cycle_valid {
                            failures.push(alloc::format!("cycle check failed: {:?}", report.failures));
                        }
                        if let Ok(counts) = crossing_counts(&tree, cycle, Traversal::Closed) {
                            let bad: Vec<_> = counts
                                .iter()
                                .filter(|(&(u, v), &c)| !m.contains(u, v) && c != 2)
                                .map(|(&(u, v), &c)| (step.vertices[u], step.vertices[v], c))
                                .collect();
                            crossings_ok = bad.is_empty();
                            if !crossings_ok {
                                failures.push(alloc::format!("crossing counts other than 2: {bad:?}"));
                            }
                        }
                    }
                    (Err(e), _) => failures.push(e.clone()),
                    _ => {}
                }
            }
            (Err(e), _) | (_, Err(e)) => failures.push(e),
        }
        let nested = i == 0 || {
            let here: BTreeSet<_> = step.tree_edges.iter().collect();
            seq.steps[i - 1].tree_edges.iter().all(|e| here.contains(e))
        };
        out.push(StepReport {
            step: i,
            vertices: step.vertices.len(),
            tree_ok,
            covers,
            cycle_valid,
            crossings_ok,
            nested,
            failures,
        });
    }
    out
}

/// Partition of one window's tail by how the cycles meet the window.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WindowReport {
    /// Step whose tree's vertex set `S` defines the window.
    pub step: usize,
    /// Later steps whose cycle contains `S` and all its bi-power neighbours.
    pub tail: Vec<usize>,
    pub classes: usize,
    /// Largest class of the tail (earliest on ties).
    pub largest: Vec<usize>,
    /// Cycle edges leaving `S` shared by the largest class.
    pub edges: Vec<(Label, Label)>,
}

/// One stage of the nested extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Stage {
    /// First cycle of the previous class; its vertex set is `S`.
    pub first: usize,
    pub set_size: usize,
    /// Cycle edges leaving `S` shared by the new class.
    pub edges: Vec<(Label, Label)>,
    /// Host-tree edges leaving `S`.
    pub tree_cut: Vec<(Label, Label)>,
    pub class: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Stabilization {
    pub windows: Vec<WindowReport>,
    pub stages: Vec<Stage>,
    /// First cycle of each class in the chain, starting with the whole sequence.
    pub diagonal: Vec<usize>,
}

/// Everything about the host that the extraction needs, on dense ids.
struct HostView {
    labels: Vec<Label>,
    tree: Graph,
    reach: Graph,
    depth: Vec<usize>,
    vsets: Vec<Vec<bool>>,
    cycles: Vec<Vec<Vertex>>,
}

impl HostView {
    fn new(seq: &CycleSequence) -> Result<Self, String> {
        let ids = Ids::new(&seq.host.vertices);
        let tree = ids.graph(&seq.host.tree_edges)?;
        let n = tree.n();
        // distance from the boundary inside the host tree
        let mut depth = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &b in &seq.host.boundary {
            let v = ids.get(b).ok_or_else(|| alloc::format!("boundary vertex {b} is not listed"))?;
            depth[v] = 0;
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            for &w in tree.neighbors(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut vsets = Vec::new();
        let mut cycles = Vec::new();
        for step in &seq.steps {
            let mut set = vec![false; n];
            for v in ids.seq(&step.vertices)? {
                set[v] = true;
            }
            vsets.push(set);
            cycles.push(ids.seq(&step.cycle)?);
        }
        Ok(HostView {
            labels: seq.host.vertices.clone(),
            reach: bipower(&tree, 3),
            tree,
            depth,
            vsets,
            cycles,
        })
    }

    /// `S` avoids the host boundary. Every cycle lives inside the host, so
    /// the edges a cycle uses to leave `S` are host edges and the window is
    /// fully visible even when part of the neighbourhood of `S` in the
    /// infinite graph is not.
    fn eligible(&self, set: &[bool]) -> bool {
        (0..set.len()).all(|v| !set[v] || self.depth[v] >= 1)
    }

    fn closure(&self, set: &[bool]) -> Vec<bool> {
        let mut out = set.to_vec();
        for v in 0..set.len() {
            if set[v] {
                for &w in self.reach.neighbors(v) {
                    out[w] = true;
                }
            }
        }
        out
    }

    fn contains(&self, step: usize, set: &[bool]) -> bool {
        let on_cycle = &self.vsets[step];
        let mut seen = vec![false; set.len()];
        for &v in &self.cycles[step] {
            seen[v] = true;
        }
        (0..set.len()).all(|v| !set[v] || (seen[v] && on_cycle[v]))
    }

    fn leaving(&self, step: usize, set: &[bool]) -> Vec<(Label, Label)> {
        let c = &self.cycles[step];
        let mut out: Vec<_> = (0..c.len())
            .map(|i| (c[i], c[(i + 1) % c.len()]))
            .filter(|&(u, v)| set[u] != set[v])
            .map(|(u, v)| ordered(self.labels[u], self.labels[v]))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn tree_cut(&self, set: &[bool]) -> Vec<(Label, Label)> {
        let mut out: Vec<_> = self
            .tree
            .edges()
            .filter(|&(u, v)| set[u] != set[v])
            .map(|(u, v)| ordered(self.labels[u], self.labels[v]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Groups `candidates` by their leaving edges; returns the class count
    /// and the largest class (earliest first member on ties).
    fn classify(&self, candidates: &[usize], set: &[bool]) -> (usize, Vec<usize>, Vec<(Label, Label)>) {
        let mut classes: BTreeMap<Vec<(Label, Label)>, Vec<usize>> = BTreeMap::new();
        for &j in candidates {
            classes.entry(self.leaving(j, set)).or_default().push(j);
        }
        let count = classes.len();
        let best = classes
            .into_iter()
            .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.1[0].cmp(&a.1[0])));
        match best {
            Some((edges, members)) => (count, members, edges),
            None => (0, Vec::new(), Vec::new()),
        }
    }
}

/// Per-window partitions and the nested extraction of a diagonal subsequence.
///
/// Window `i` is the vertex set `S_i` of step `i`; it is considered when it
/// avoids the host boundary and is not the last step. Later cycles
/// containing `S_i` and its bi-power neighbourhood are grouped by the cycle
/// edges that leave `S_i`. The nested extraction repeats this starting from
/// the whole sequence, each time restricting to the largest class and moving
/// to the first cycle of that class.
pub fn stabilization_check(seq: &CycleSequence) -> Result<Stabilization, String> {
    let view = HostView::new(seq)?;
    let steps = seq.steps.len();
    let mut windows = Vec::new();
    for i in 0..steps.saturating_sub(1) {
        let set = &view.vsets[i];
        if !view.eligible(set) {
            continue;
        }
        let wide = view.closure(set);
        let tail: Vec<usize> = (i + 1..steps).filter(|&j| view.contains(j, &wide)).collect();
        let (classes, largest, edges) = view.classify(&tail, set);
        windows.push(WindowReport {
            step: i,
            tail,
            classes,
            largest,
            edges,
        });
    }
    let mut class: Vec<usize> = (0..steps).collect();
    let mut diagonal = Vec::new();
    let mut stages = Vec::new();
    while let Some(&first) = class.first() {
        diagonal.push(first);
        let set = &view.vsets[first];
        if !view.eligible(set) {
            break;
        }
        let wide = view.closure(set);
        let candidates: Vec<usize> = class[1..].iter().copied().filter(|&j| view.contains(j, &wide)).collect();
        if candidates.is_empty() {
            break;
        }
        let (_, members, edges) = view.classify(&candidates, set);
        stages.push(Stage {
            first,
            set_size: set.iter().filter(|&&b| b).count(),
            edges,
            tree_cut: view.tree_cut(set),
            class: members.clone(),
        });
        class = members;
    }
    Ok(Stabilization {
        windows,
        stages,
        diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ham::tree_ham_path;
    use crate::infinite::lazy::{DoubleRay, Ladder, MatchedBinaryTree};

    #[test]
    fn double_ray_small_schedule() {
        let seq = cycle_sequence(&DoubleRay, &[1, 2, 3]).unwrap();
        let sizes: Vec<usize> = seq.steps.iter().map(|s| s.cycle.len()).collect();
        assert_eq!(sizes, vec![4, 6, 8]);
        for r in step_reports(&seq) {
            assert!(r.passed(), "{r:?}");
            assert!(r.nested);
        }
    }

    #[test]
    fn radius_zero_advances() {
        let seq = cycle_sequence(&DoubleRay, &[0]).unwrap();
        assert_eq!(seq.steps[0].requested_radius, 0);
        assert_eq!(seq.steps[0].radius, 1);
        assert_eq!(seq.steps[0].cycle.len(), 4);
        // the next scheduled radius was already used
        let seq = cycle_sequence(&DoubleRay, &[0, 1, 2]).unwrap();
        let radii: Vec<usize> = seq.steps.iter().map(|s| s.radius).collect();
        assert_eq!(radii, vec![1, 2]);
        let seq = cycle_sequence(&Ladder, &[0]).unwrap();
        assert_eq!(seq.steps[0].radius, 1);
    }

    #[test]
    fn ladder_and_tree_steps_pass() {
        let seq = cycle_sequence(&Ladder, &[1, 2]).unwrap();
        assert!(step_reports(&seq).iter().all(StepReport::passed));
        let seq = cycle_sequence(&MatchedBinaryTree, &[1, 2, 3, 4]).unwrap();
        assert!(step_reports(&seq).iter().all(|r| r.passed() && r.nested));
    }

    #[test]
    fn schedule_errors() {
        assert_eq!(cycle_sequence(&DoubleRay, &[]), Err(SequenceError::EmptySchedule));
        assert_eq!(
            cycle_sequence(&DoubleRay, &[2, 2]),
            Err(SequenceError::NotIncreasing { previous: 2, next: 2 })
        );
    }

    #[test]
    fn double_ray_stabilizes_fully() {
        let schedule: Vec<usize> = (1..=8).collect();
        let seq = cycle_sequence(&DoubleRay, &schedule).unwrap();
        let st = stabilization_check(&seq).unwrap();
        assert!(!st.windows.is_empty());
        for w in &st.windows {
            assert!(!w.tail.is_empty());
            assert_eq!(w.largest, w.tail, "window {}", w.step);
        }
        assert!(st.diagonal.len() >= 2);
    }

    fn path_step(lo: Label, hi: Label, anchor: usize) -> Step {
        let n = (hi - lo + 1) as usize;
        let g = Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap();
        let m = Matching::from_pairs(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let path = tree_ham_path(&g, &m, 2 * anchor, 2 * anchor + 1).unwrap();
        let lab = |v: Vertex| lo + v as Label;
        Step {
            requested_radius: 0,
            radius: 0,
            vertices: (lo..=hi).collect(),
            tree_edges: (lo..hi).map(|v| (v, v + 1)).collect(),
            matching: (0..n / 2).map(|i| (lab(2 * i), lab(2 * i + 1))).collect(),
            cycle: path.vertices().iter().map(|&v| lab(v)).collect(),
        }
    }

    fn path_host(lo: Label, hi: Label) -> Host {
        let step = path_step(lo, hi, 0);
        Host {
            vertices: step.vertices,
            edges: step.tree_edges.clone(),
            tree_edges: step.tree_edges,
            matching: step.matching,
            boundary: vec![lo, hi],
        }
    }

    #[test]
    fn constant_sequence_is_fully_extracted() {
        let steps = vec![path_step(8, 11, 0), path_step(4, 15, 0), path_step(4, 15, 0), path_step(4, 15, 0)];
        let seq = CycleSequence {
            family: "toy".to_string(),
            steps,
            host: path_host(0, 19),
        };
        let st = stabilization_check(&seq).unwrap();
        assert_eq!(st.windows[0].step, 0);
        assert_eq!(st.windows[0].largest, vec![1, 2, 3]);
        assert_eq!(st.windows[0].classes, 1);
    }

    #[test]
    fn alternating_sequence_keeps_half() {
        let a = path_step(4, 15, 0);
        let b = path_step(4, 15, 2);
        let window: Vec<bool> = (0..20).map(|v| (8..=11).contains(&v)).collect();
        let leaving = |s: &Step| {
            let c = &s.cycle;
            let mut e: Vec<_> = (0..c.len())
                .map(|i| (c[i], c[(i + 1) % c.len()]))
                .filter(|&(u, v)| window[u as usize] != window[v as usize])
                .map(|(u, v)| ordered(u, v))
                .collect();
            e.sort_unstable();
            e
        };
        assert_ne!(leaving(&a), leaving(&b));
        let mut steps = vec![path_step(8, 11, 0)];
        for i in 0..6 {
            steps.push(if i % 2 == 0 { a.clone() } else { b.clone() });
        }
        let seq = CycleSequence {
            family: "toy".to_string(),
            steps,
            host: path_host(0, 19),
        };
        let st = stabilization_check(&seq).unwrap();
        let w = &st.windows[0];
        assert_eq!(w.tail.len(), 6);
        assert_eq!(w.classes, 2);
        assert_eq!(w.largest, vec![1, 3, 5]);
        assert_eq!(st.diagonal[..2], [0, 1]);
    }
}
