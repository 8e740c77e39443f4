//! Command-line front end for `bipower-core`.
//!
//! [`run`] parses an argument vector, performs one subcommand and returns the
//! process exit code: 0 on success or a passing check, 1 when a check fails,
//! 2 on usage or input errors.

pub mod certs;
pub mod io;

use std::io::Write;
use std::path::{Path, PathBuf};

use bipower_core::gallery::{layered_counterexample, random_bipartite_with_pm, random_matched_tree, subdivided_bistar};
use bipower_core::graph::{bipartition, is_connected, is_tree, to_edge_list};
use bipower_core::ham::{ham_cycle, laceable_ham_path};
use bipower_core::infinite::{family, infinite_certificate, matched_quotient, FAMILY_NAMES};
use bipower_core::matching::{maximum_matching, spanning_tree_with_matching};
use bipower_core::verify::{brute_ham_cycle, brute_ham_path, independence_nonham_witness};
use bipower_core::{bipower, power, Graph, Matching, Vertex};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use certs::{
    check_certificate, check_sequence, envelope, ham_certificate, recheck_envelope, HamCertificate, InfiniteEnvelope, Kind,
};
use io::{
    graph_json, matching_text, parse_sequence, read_graph, read_matching, read_text, sequence_line,
    to_dot, write_text,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) | CliError::Input(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bipower", version, about = "Hamiltonian paths and cycles in bi-powers of bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Render {
    /// Emit Graphviz DOT instead of an edge list.
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    /// Emit the JSON graph form instead of an edge list.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bi-power: join vertices at odd distance at most t.
    Bipower {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        render: Render,
        graph: PathBuf,
    },
    /// Ordinary power: join vertices at distance at most t.
    Power {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        render: Render,
        graph: PathBuf,
    },
    /// Maximum matching of a bipartite graph.
    Match {
        /// Exit 1 unless the matching is perfect.
        #[arg(long)]
        perfect: bool,
        graph: PathBuf,
    },
    /// Spanning tree containing a perfect matching.
    Spantree {
        #[arg(long)]
        matching: PathBuf,
        #[arg(long)]
        dot: bool,
        graph: PathBuf,
    },
    /// Hamiltonian path of the third bi-power between opposite-side vertices.
    Hampath {
        #[arg(long)]
        matching: PathBuf,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Vertex,
        /// Also write a JSON certificate with crossing counts.
        #[arg(long)]
        cert: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Hamiltonian cycle of the third bi-power.
    Hamcycle {
        #[arg(long)]
        matching: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Check the output of another subcommand.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Exhaustive search for Hamiltonian paths and cycles on small graphs.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Generate example graphs.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Quotient by a perfect matching: one vertex per matched pair.
    Quotient {
        #[arg(long)]
        matching: PathBuf,
        graph: PathBuf,
    },
    /// Hamiltonian-circle certificate for a built-in infinite family.
    Infinite {
        #[arg(long)]
        family: String,
        /// Radius schedule: `a:b` (inclusive) or a comma-separated list.
        #[arg(long, default_value = "1:8")]
        radii: String,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify an infinite-graph certificate.
    Recheck { certificate: PathBuf },
}

#[derive(Debug, Args)]
struct SequenceCheck {
    #[arg(long, default_value_t = 3)]
    t: usize,
    /// Spanning tree whose crossing counts are checked.
    #[arg(long)]
    tree: Option<PathBuf>,
    graph: PathBuf,
    /// Plain vertex sequence or JSON certificate.
    cert: PathBuf,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Hamiltonian path of the bi-power.
    Path {
        #[command(flatten)]
        check: SequenceCheck,
        #[arg(long, requires = "to")]
        from: Option<Vertex>,
        #[arg(long, requires = "from")]
        to: Option<Vertex>,
    },
    /// Hamiltonian cycle of the bi-power.
    Cycle {
        #[command(flatten)]
        check: SequenceCheck,
    },
    /// Matching of the graph.
    Matching {
        #[arg(long)]
        perfect: bool,
        graph: PathBuf,
        matching: PathBuf,
    },
    /// Spanning tree containing the matching.
    Spantree {
        #[arg(long)]
        matching: PathBuf,
        graph: PathBuf,
        tree: PathBuf,
    },
    /// Set independent in the bi-power and larger than half the vertices.
    Independent {
        #[arg(long, default_value_t = 3)]
        t: usize,
        graph: PathBuf,
        set: PathBuf,
    },
    /// Candidate bi-power of a graph.
    Bipower {
        #[arg(long)]
        t: usize,
        graph: PathBuf,
        candidate: PathBuf,
    },
    /// Candidate power of a graph.
    Power {
        #[arg(long)]
        t: usize,
        graph: PathBuf,
        candidate: PathBuf,
    },
    /// Candidate matched quotient of a graph.
    Quotient {
        #[arg(long)]
        matching: PathBuf,
        graph: PathBuf,
        candidate: PathBuf,
    },
}

#[derive(Debug, Args)]
struct OracleOpts {
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = 20)]
    bound: usize,
    /// Search in the bi-power of this exponent instead of the graph itself.
    #[arg(long)]
    bipower: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    Path {
        #[command(flatten)]
        opts: OracleOpts,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Vertex,
        graph: PathBuf,
    },
    Cycle {
        #[command(flatten)]
        opts: OracleOpts,
        graph: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Layered graph whose bi-power is not Hamiltonian.
    Layered {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        /// File prefix: writes PREFIX.graph and PREFIX.set.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bi-star with subdivided leaf edges.
    Bistar {
        #[arg(long)]
        k: usize,
        /// File prefix: writes PREFIX.graph.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random tree with a perfect matching.
    MatchedTree {
        #[arg(long)]
        half: usize,
        #[arg(long)]
        seed: u64,
        /// File prefix: writes PREFIX.graph and PREFIX.matching.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random connected bipartite graph with a perfect matching.
    Bipartite {
        #[arg(long)]
        half: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long)]
        seed: u64,
        /// File prefix: writes PREFIX.graph and PREFIX.matching.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    let mut buf = Vec::new();
    let result = dispatch(cli.command, &mut buf);
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "bipower: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Result<(), CliError> {
    match command {
        Command::Bipower { t, render, graph } => emit_graph(out, &bipower(&read_graph(&graph)?, t), &render),
        Command::Power { t, render, graph } => emit_graph(out, &power(&read_graph(&graph)?, t), &render),
        Command::Match { perfect, graph } => {
            let g = read_graph(&graph)?;
            let parts = bipartition(&g).map_err(|e| CliError::Input(format!("{}: {e}", graph.display())))?;
            let m = maximum_matching(&g, &parts);
            out.extend_from_slice(matching_text(&m).as_bytes());
            if perfect && !m.is_perfect() {
                return Err(CliError::Failed(format!(
                    "maximum matching has {} of {} vertices covered",
                    2 * m.size(),
                    g.n()
                )));
            }
            Ok(())
        }
        Command::Spantree { matching, dot, graph } => {
            let (g, m) = graph_and_matching(&graph, &matching)?;
            let tree = spanning_tree_with_matching(&g, &m).map_err(|e| CliError::Failed(e.to_string()))?;
            if dot {
                out.extend_from_slice(to_dot(&tree, &m.pairs()).as_bytes());
            } else {
                out.extend_from_slice(to_edge_list(&tree).as_bytes());
            }
            Ok(())
        }
        Command::Hampath {
            matching,
            from,
            to,
            cert,
            graph,
        } => {
            let (g, m) = graph_and_matching(&graph, &matching)?;
            let path = laceable_ham_path(&g, &m, from, to).map_err(|e| CliError::Input(e.to_string()))?;
            let seq = path.into_vec();
            out.extend_from_slice(sequence_line(&seq).as_bytes());
            if let Some(cert) = cert {
                let tree = spanning_tree_with_matching(&g, &m).map_err(|e| CliError::Input(e.to_string()))?;
                write_json(&cert, &ham_certificate(&g, &tree, Kind::Path, &seq))?;
            }
            Ok(())
        }
        Command::Hamcycle { matching, cert, graph } => {
            let (g, m) = graph_and_matching(&graph, &matching)?;
            let cycle = ham_cycle(&g, &m).map_err(|e| CliError::Input(e.to_string()))?;
            let seq = cycle.into_vec();
            out.extend_from_slice(sequence_line(&seq).as_bytes());
            if let Some(cert) = cert {
                let tree = spanning_tree_with_matching(&g, &m).map_err(|e| CliError::Input(e.to_string()))?;
                write_json(&cert, &ham_certificate(&g, &tree, Kind::Cycle, &seq))?;
            }
            Ok(())
        }
        Command::Verify(v) => verify(v, out),
        Command::Oracle(o) => oracle(o, out),
        Command::Gen(gen) => generate(gen, out),
        Command::Quotient { matching, graph } => {
            let (g, m) = graph_and_matching(&graph, &matching)?;
            let q = matched_quotient(&g, &m).map_err(|e| CliError::Input(e.to_string()))?;
            out.extend_from_slice(to_edge_list(&q).as_bytes());
            Ok(())
        }
        Command::Infinite { family: name, radii, out: path } => {
            let lazy = family(&name).ok_or_else(|| {
                CliError::Usage(format!("unknown family {name:?}; expected one of {}", FAMILY_NAMES.join(", ")))
            })?;
            let schedule = parse_radii(&radii)?;
            let cert = infinite_certificate(lazy.as_ref(), &schedule).map_err(|e| CliError::Failed(e.to_string()))?;
            let passed = cert.passed;
            let failures = cert.failures.join("; ");
            let env = envelope(cert);
            match path {
                Some(p) => write_json(&p, &env)?,
                None => out.extend_from_slice(json_text(&env).as_bytes()),
            }
            if passed {
                Ok(())
            } else {
                Err(CliError::Failed(format!("certificate failed: {failures}")))
            }
        }
        Command::Recheck { certificate } => {
            let text = read_text(&certificate)?;
            let env: InfiniteEnvelope = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", certificate.display())))?;
            let summary = recheck_envelope(&env);
            out.extend_from_slice(json_text(&summary).as_bytes());
            if summary.passed {
                Ok(())
            } else {
                Err(CliError::Failed("certificate rejected".to_string()))
            }
        }
    }
}

fn verify(command: VerifyCommand, out: &mut Vec<u8>) -> Result<(), CliError> {
    match command {
        VerifyCommand::Path { check, from, to } => {
            let ends = from.zip(to);
            verify_sequence(check, Kind::Path, ends, out)
        }
        VerifyCommand::Cycle { check } => verify_sequence(check, Kind::Cycle, None, out),
        VerifyCommand::Matching {
            perfect,
            graph,
            matching,
        } => {
            let g = read_graph(&graph)?;
            let m = read_matching(&matching, g.n())?;
            let result = if perfect {
                m.validate_perfect_in(&g)
            } else {
                m.validate_in(&g)
            };
            let failures: Vec<String> = result.err().map(|e| e.to_string()).into_iter().collect();
            verdict(out, failures)
        }
        VerifyCommand::Spantree { matching, graph, tree } => {
            let (g, m) = graph_and_matching(&graph, &matching)?;
            let t = read_graph(&tree)?;
            let mut failures = Vec::new();
            if t.n() != g.n() || !is_tree(&t) {
                failures.push("not a spanning tree".to_string());
            } else if !t.is_subgraph_of(&g) {
                failures.push("tree has edges outside the graph".to_string());
            }
            if t.n() == g.n() {
                if let Some((u, v)) = m.pairs().into_iter().find(|&(u, v)| !t.has_edge(u, v)) {
                    failures.push(format!("matching edge {u} {v} is not a tree edge"));
                }
            }
            verdict(out, failures)
        }
        VerifyCommand::Independent { t, graph, set } => {
            let g = read_graph(&graph)?;
            let members = parse_sequence(&read_text(&set)?).map_err(CliError::Input)?;
            let report = independence_nonham_witness(&bipower(&g, t), &members);
            let mut failures = Vec::new();
            if !report.invalid_members.is_empty() {
                failures.push(format!("invalid or repeated members {:?}", report.invalid_members));
            }
            if let Some((u, v)) = report.inner_edge {
                failures.push(format!("{u} and {v} are adjacent in the bi-power"));
            }
            if !report.exceeds_half {
                failures.push(format!("{} of {} vertices is not more than half", report.set_size, report.n));
            }
            verdict(out, failures)
        }
        VerifyCommand::Bipower { t, graph, candidate } => {
            let expected = bipower(&read_graph(&graph)?, t);
            same_graph(out, &expected, &read_graph(&candidate)?)
        }
        VerifyCommand::Power { t, graph, candidate } => {
            let expected = power(&read_graph(&graph)?, t);
            same_graph(out, &expected, &read_graph(&candidate)?)
        }
        VerifyCommand::Quotient {
            matching,
            graph,
            candidate,
        } => {
            let (g, m) = graph_and_matching(&graph, &matching)?;
            let expected = matched_quotient(&g, &m).map_err(|e| CliError::Input(e.to_string()))?;
            same_graph(out, &expected, &read_graph(&candidate)?)
        }
    }
}

fn verify_sequence(
    check: SequenceCheck,
    kind: Kind,
    ends: Option<(Vertex, Vertex)>,
    out: &mut Vec<u8>,
) -> Result<(), CliError> {
    let g = read_graph(&check.graph)?;
    let tree = check.tree.as_deref().map(read_graph).transpose()?;
    let text = read_text(&check.cert)?;
    let report = if text.trim_start().starts_with('{') {
        let cert: HamCertificate = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", check.cert.display())))?;
        let mut report = check_certificate(&g, &cert, kind, tree.as_ref());
        if cert.t != check.t {
            report.failures.push(format!("certificate is for t = {}, checked with t = {}", cert.t, check.t));
            report.passed = false;
        }
        if let (Some(e), Some(from), Some(to)) = (ends, cert.from, cert.to) {
            if e != (from, to) {
                report.failures.push(format!("certificate joins {from} and {to}, expected {} and {}", e.0, e.1));
                report.passed = false;
            }
        }
        report
    } else {
        let seq = parse_sequence(&text).map_err(|e| CliError::Input(format!("{}: {e}", check.cert.display())))?;
        check_sequence(&g, tree.as_ref(), kind, &seq, ends, check.t)
    };
    out.extend_from_slice(json_text(&report).as_bytes());
    if report.passed {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} check(s) failed", report.failures.len())))
    }
}

fn oracle(command: OracleCommand, out: &mut Vec<u8>) -> Result<(), CliError> {
    let (opts, graph) = match &command {
        OracleCommand::Path { opts, graph, .. } | OracleCommand::Cycle { opts, graph } => (opts, graph),
    };
    let mut g = read_graph(graph)?;
    if let Some(t) = opts.bipower {
        g = bipower(&g, t);
    }
    let found = match command {
        OracleCommand::Path { from, to, .. } => brute_ham_path(&g, from, to, opts.bound).map(|p| p.map(|p| p.into_vec())),
        OracleCommand::Cycle { .. } => brute_ham_cycle(&g, opts.bound).map(|c| c.map(|c| c.into_vec())),
    }
    .map_err(|e| CliError::Input(e.to_string()))?;
    match found {
        Some(seq) => out.extend_from_slice(sequence_line(&seq).as_bytes()),
        None => out.extend_from_slice(b"none\n"),
    }
    Ok(())
}

fn generate(command: GenCommand, out: &mut Vec<u8>) -> Result<(), CliError> {
    let gallery = |e: bipower_core::gallery::GalleryError| CliError::Usage(e.to_string());
    let (g, m, set, prefix) = match command {
        GenCommand::Layered { k, t, s, out: prefix } => {
            let layered = layered_counterexample(k, t, s).map_err(gallery)?;
            let set = layered.outer_layers();
            (layered.graph, None, Some(set), prefix)
        }
        GenCommand::Bistar { k, out: prefix } => (subdivided_bistar(k).map_err(gallery)?, None, None, prefix),
        GenCommand::MatchedTree { half, seed, out: prefix } => {
            let (g, m) = random_matched_tree(half, seed).map_err(gallery)?;
            (g, Some(m), None, prefix)
        }
        GenCommand::Bipartite {
            half,
            extra,
            seed,
            out: prefix,
        } => {
            let (g, m) = random_bipartite_with_pm(half, extra, seed).map_err(gallery)?;
            (g, Some(m), None, prefix)
        }
    };
    match prefix {
        Some(prefix) => {
            write_text(&with_suffix(&prefix, "graph"), &to_edge_list(&g))?;
            if let Some(m) = &m {
                write_text(&with_suffix(&prefix, "matching"), &matching_text(m))?;
            }
            if let Some(set) = &set {
                write_text(&with_suffix(&prefix, "set"), &sequence_line(set))?;
            }
        }
        None => out.extend_from_slice(to_edge_list(&g).as_bytes()),
    }
    Ok(())
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(".");
    name.push(suffix);
    PathBuf::from(name)
}

fn graph_and_matching(graph: &Path, matching: &Path) -> Result<(Graph, Matching), CliError> {
    let g = read_graph(graph)?;
    let m = read_matching(matching, g.n())?;
    m.validate_perfect_in(&g)
        .map_err(|e| CliError::Input(format!("{}: {e}", matching.display())))?;
    if !is_connected(&g) {
        return Err(CliError::Input(format!("{}: graph is disconnected", graph.display())));
    }
    Ok((g, m))
}

fn emit_graph(out: &mut Vec<u8>, g: &Graph, render: &Render) -> Result<(), CliError> {
    let text = if render.dot {
        to_dot(g, &[])
    } else if render.json {
        let mut s = graph_json(g);
        s.push('\n');
        s
    } else {
        to_edge_list(g)
    };
    out.extend_from_slice(text.as_bytes());
    Ok(())
}

#[derive(Serialize)]
struct Verdict {
    passed: bool,
    failures: Vec<String>,
}

fn verdict(out: &mut Vec<u8>, failures: Vec<String>) -> Result<(), CliError> {
    let v = Verdict {
        passed: failures.is_empty(),
        failures,
    };
    out.extend_from_slice(json_text(&v).as_bytes());
    if v.passed {
        Ok(())
    } else {
        Err(CliError::Failed(v.failures.join("; ")))
    }
}

fn same_graph(out: &mut Vec<u8>, expected: &Graph, candidate: &Graph) -> Result<(), CliError> {
    let mut failures = Vec::new();
    if expected.n() != candidate.n() {
        failures.push(format!("expected {} vertices, found {}", expected.n(), candidate.n()));
    } else {
        if let Some((u, v)) = expected.edges().find(|&(u, v)| !candidate.has_edge(u, v)) {
            failures.push(format!("missing edge {u} {v}"));
        }
        if let Some((u, v)) = candidate.edges().find(|&(u, v)| !expected.has_edge(u, v)) {
            failures.push(format!("unexpected edge {u} {v}"));
        }
    }
    verdict(out, failures)
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    write_text(path, &json_text(value))
}

/// `a:b` (inclusive) or `r1,r2,...`.
pub fn parse_radii(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad radius schedule {text:?}; use a:b or a comma-separated list"));
    let radii: Vec<usize> = match text.split_once(':') {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            (a..=b).collect()
        }
        None => text
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?,
    };
    if radii.is_empty() {
        return Err(bad());
    }
    Ok(radii)
}
