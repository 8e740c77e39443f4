//! File formats: edge lists, JSON graphs, matchings, vertex sequences, DOT.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use bipower_core::graph::{parse_graph, to_edge_list};
use bipower_core::{Graph, Matching, Vertex};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

/// JSON form of a graph: `{"n": 4, "edges": [[0, 1], [1, 2]]}`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Parses either the edge-list format or the JSON form, told apart by the
/// first non-blank character.
pub fn parse_any_graph(text: &str) -> Result<Graph, String> {
    if text.trim_start().starts_with('{') {
        let j: JsonGraph = serde_json::from_str(text).map_err(|e| e.to_string())?;
        Graph::from_edges(j.n, j.edges).map_err(|e| e.to_string())
    } else {
        parse_graph(text).map_err(|e| e.to_string())
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_any_graph(&read_text(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn graph_json(g: &Graph) -> String {
    let j = JsonGraph {
        n: g.n(),
        edges: g.edge_vec(),
    };
    serde_json::to_string(&j).expect("plain data serializes")
}

/// Pairs `u v`, one per line, `u < v`, sorted.
pub fn matching_text(m: &Matching) -> String {
    let mut out = String::new();
    for (u, v) in m.pairs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_matching(text: &str, n: usize) -> Result<Matching, String> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        let parsed: Option<Vec<Vertex>> = nums.iter().map(|s| s.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => pairs.push((u, v)),
            _ => return Err(format!("line {}: expected \"u v\", found {line:?}", i + 1)),
        }
    }
    Matching::from_pairs(n, pairs).map_err(|e| e.to_string())
}

pub fn read_matching(path: &Path, n: usize) -> Result<Matching, CliError> {
    parse_matching(&read_text(path)?, n).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Whitespace-separated vertex ids.
pub fn parse_sequence(text: &str) -> Result<Vec<Vertex>, String> {
    text.split_whitespace()
        .map(|s| s.parse().map_err(|_| format!("not a vertex id: {s:?}")))
        .collect()
}

pub fn sequence_line(seq: &[Vertex]) -> String {
    let mut out = seq.iter().map(Vertex::to_string).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}

/// Graphviz rendering; `highlight` edges are drawn bold.
pub fn to_dot(g: &Graph, highlight: &[(Vertex, Vertex)]) -> String {
    let marked: std::collections::BTreeSet<(Vertex, Vertex)> =
        highlight.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        if marked.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -- {v} [penwidth=3];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

pub fn hex_sha256(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest.iter() {
        let _ = write!(out, "{b:02x}");
    }
    out
}

/// Hash of the canonical edge-list serialization, so the same graph gives
/// the same hash whichever input format it came from.
pub fn graph_hash(g: &Graph) -> String {
    hex_sha256(to_edge_list(g).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_agree() {
        let text = "4 3\n0 1\n1 2\n2 3\n";
        let a = parse_any_graph(text).unwrap();
        let b = parse_any_graph(r#"{"n": 4, "edges": [[2, 3], [0, 1], [1, 2]]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(graph_hash(&a), graph_hash(&b));
        assert_eq!(parse_any_graph(&graph_json(&a)).unwrap(), a);
        assert!(parse_any_graph(r#"{"n": 2, "edges": [[0, 5]]}"#).is_err());
        assert!(parse_any_graph(r#"{"n": 2, "edges": [], "names": ["a"]}"#).is_err());
    }

    #[test]
    fn matching_round_trip() {
        let m = parse_matching("2 3\n0 1\n", 4).unwrap();
        assert_eq!(matching_text(&m), "0 1\n2 3\n");
        assert!(parse_matching("0 1 2\n", 4).is_err());
        assert!(parse_matching("0 1\n1 2\n", 4).is_err());
    }

    #[test]
    fn sha_known_value() {
        assert_eq!(
            hex_sha256(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn dot_marks_edges() {
        let g = parse_any_graph("3 2\n0 1\n1 2\n").unwrap();
        let dot = to_dot(&g, &[(2, 1)]);
        assert!(dot.contains("1 -- 2 [penwidth=3];"));
        assert!(dot.contains("0 -- 1;"));
    }
}
