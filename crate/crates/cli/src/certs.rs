//! JSON certificates for Hamiltonian paths and cycles, and the envelope
//! around infinite-graph certificates.

use std::collections::BTreeSet;

use bipower_core::graph::is_tree;
use bipower_core::infinite::{recheck_certificate, Certificate};
use bipower_core::matching::tree_perfect_matching;
use bipower_core::verify::{crossing_counts, verify_bipower_cycle, verify_bipower_path, Traversal};
use bipower_core::{Graph, Vertex};
use serde::{Deserialize, Serialize};

use crate::io::{graph_hash, hex_sha256};

pub const HAM_FORMAT: &str = "bipower-ham/1";
pub const INFINITE_FORMAT: &str = "bipower-infinite/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Path,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub edge: (Vertex, Vertex),
    pub count: usize,
    pub matching: bool,
}

/// Hamiltonian path or cycle of `G_B^t`, with the spanning tree it was
/// built from and the number of times it crosses every tree edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HamCertificate {
    pub format: String,
    pub kind: Kind,
    /// SHA-256 of the graph's canonical edge list.
    pub input_hash: String,
    pub t: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from: Option<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to: Option<Vertex>,
    pub sequence: Vec<Vertex>,
    pub tree: Vec<(Vertex, Vertex)>,
    pub crossings: Vec<Crossing>,
}

fn traversal(kind: Kind) -> Traversal {
    match kind {
        Kind::Path => Traversal::Open,
        Kind::Cycle => Traversal::Closed,
    }
}

/// Crossing counts of every tree edge, flagged by membership in the
/// tree's perfect matching.
pub fn tree_crossings(tree: &Graph, seq: &[Vertex], kind: Kind) -> Result<Vec<Crossing>, String> {
    let matching = tree_perfect_matching(tree).map_err(|e| format!("tree: {e}"))?;
    let counts = crossing_counts(tree, seq, traversal(kind)).map_err(|e| e.to_string())?;
    Ok(counts
        .into_iter()
        .map(|((u, v), count)| Crossing {
            edge: (u, v),
            count,
            matching: matching.contains(u, v),
        })
        .collect())
}

pub fn ham_certificate(g: &Graph, tree: &Graph, kind: Kind, seq: &[Vertex]) -> HamCertificate {
    let (from, to) = match kind {
        Kind::Path => (seq.first().copied(), seq.last().copied()),
        Kind::Cycle => (None, None),
    };
    HamCertificate {
        format: HAM_FORMAT.to_string(),
        kind,
        input_hash: graph_hash(g),
        t: 3,
        from,
        to,
        sequence: seq.to_vec(),
        tree: tree.edge_vec(),
        crossings: tree_crossings(tree, seq, kind).expect("constructed trees carry a perfect matching"),
    }
}

/// JSON report printed by `verify`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub kind: Kind,
    pub t: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossings: Option<Vec<Crossing>>,
}

/// Tree edges on the tree path between `x` and `y`.
fn tree_path_edges(tree: &Graph, x: Vertex, y: Vertex) -> BTreeSet<(Vertex, Vertex)> {
    let mut parent = vec![usize::MAX; tree.n()];
    parent[x] = x;
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for &w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut v = y;
    while v != x && parent[v] != usize::MAX {
        let p = parent[v];
        out.insert((p.min(v), p.max(v)));
        v = p;
    }
    out
}

/// Checks a sequence against `G_B^t` and, when a tree is given, the crossing
/// pattern: a cycle crosses every non-matching tree edge exactly twice; a
/// path does the same when its ends form a matching edge, and otherwise
/// crosses exactly the edges of the tree path between its ends an odd
/// number of times.
pub fn check_sequence(
    g: &Graph,
    tree: Option<&Graph>,
    kind: Kind,
    seq: &[Vertex],
    ends: Option<(Vertex, Vertex)>,
    t: usize,
) -> VerifyReport {
    let mut failures = Vec::new();
    let report = match kind {
        Kind::Path => {
            let (x, y) = ends.unwrap_or((
                seq.first().copied().unwrap_or(0),
                seq.last().copied().unwrap_or(0),
            ));
            verify_bipower_path(g, seq, x, y, t)
        }
        Kind::Cycle => verify_bipower_cycle(g, seq, t),
    };
    failures.extend(report.failures.iter().map(ToString::to_string));
    let mut crossings = None;
    if let Some(tree) = tree {
        if tree.n() != g.n() || !is_tree(tree) || !tree.is_subgraph_of(g) {
            failures.push("tree is not a spanning tree of the graph".to_string());
        } else if report.passed() {
            match tree_crossings(tree, seq, kind) {
                Ok(list) => {
                    let odd_edges = match kind {
                        Kind::Cycle => BTreeSet::new(),
                        Kind::Path => {
                            let (x, y) = (seq[0], seq[seq.len() - 1]);
                            let matched = list.iter().any(|c| c.matching && c.edge == (x.min(y), x.max(y)));
                            if matched {
                                BTreeSet::new()
                            } else {
                                tree_path_edges(tree, x, y)
                            }
                        }
                    };
                    for c in &list {
                        let ok = if odd_edges.is_empty() {
                            c.matching || c.count == 2
                        } else {
                            (c.count % 2 == 1) == odd_edges.contains(&c.edge)
                        };
                        if !ok {
                            failures.push(format!("tree edge {} {} is crossed {} times", c.edge.0, c.edge.1, c.count));
                        }
                    }
                    crossings = Some(list);
                }
                Err(e) => failures.push(e),
            }
        }
    }
    VerifyReport {
        passed: failures.is_empty(),
        kind,
        t,
        failures,
        crossings,
    }
}

/// Re-checks a stored certificate against `g`.
pub fn check_certificate(g: &Graph, cert: &HamCertificate, kind: Kind, tree: Option<&Graph>) -> VerifyReport {
    let mut early = Vec::new();
    if cert.format != HAM_FORMAT {
        early.push(format!("unknown certificate format {:?}", cert.format));
    }
    if cert.kind != kind {
        early.push(format!("certificate is for a {:?}, not a {kind:?}", cert.kind));
    }
    if cert.input_hash != graph_hash(g) {
        early.push("certificate was issued for a different graph (input hash mismatch)".to_string());
    }
    let external = tree.is_some();
    let stored_tree = Graph::from_edges(g.n(), cert.tree.iter().copied());
    let tree_owned;
    let tree = match (tree, stored_tree) {
        (Some(t), _) => Some(t),
        (None, Ok(t)) => {
            tree_owned = t;
            Some(&tree_owned)
        }
        (None, Err(e)) => {
            early.push(format!("stored tree: {e}"));
            None
        }
    };
    let ends = match (cert.from, cert.to) {
        (Some(x), Some(y)) => Some((x, y)),
        _ => None,
    };
    let mut report = check_sequence(g, tree, kind, &cert.sequence, ends, cert.t);
    if let Some(list) = report.crossings.as_ref().filter(|_| !external) {
        if *list != cert.crossings {
            report.failures.push("stored crossing counts differ from the recomputed ones".to_string());
        }
    }
    early.append(&mut report.failures);
    report.failures = early;
    report.passed = report.failures.is_empty();
    report
}

/// Infinite-graph certificate with a hash of its stored construction data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InfiniteEnvelope {
    pub format: String,
    /// SHA-256 of the JSON serialization of `certificate.sequence`.
    pub input_hash: String,
    pub certificate: Certificate,
}

pub fn sequence_hash(cert: &Certificate) -> String {
    hex_sha256(
        serde_json::to_string(&cert.sequence)
            .expect("plain data serializes")
            .as_bytes(),
    )
}

pub fn envelope(cert: Certificate) -> InfiniteEnvelope {
    InfiniteEnvelope {
        format: INFINITE_FORMAT.to_string(),
        input_hash: sequence_hash(&cert),
        certificate: cert,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RecheckSummary {
    pub passed: bool,
    pub family: String,
    pub steps: usize,
    pub cut_bound: usize,
    pub consistent: bool,
    pub failures: Vec<String>,
}

pub fn recheck_envelope(env: &InfiniteEnvelope) -> RecheckSummary {
    let cert = &env.certificate;
    let mut failures = Vec::new();
    if env.format != INFINITE_FORMAT {
        failures.push(format!("unknown certificate format {:?}", env.format));
    }
    if env.input_hash != sequence_hash(cert) {
        failures.push("stored construction data does not match the input hash".to_string());
    }
    let (consistent, cut_bound) = match recheck_certificate(cert) {
        Ok(r) => {
            failures.extend(r.recomputed.failures.iter().cloned());
            if !r.consistent {
                failures.push("stored reports differ from the recomputed ones".to_string());
            }
            (r.consistent, r.recomputed.limit.cut_bound)
        }
        Err(e) => {
            failures.push(e.to_string());
            (false, cert.limit.cut_bound)
        }
    };
    RecheckSummary {
        passed: failures.is_empty(),
        family: cert.family.clone(),
        steps: cert.sequence.steps.len(),
        cut_bound,
        consistent,
        failures,
    }
}
