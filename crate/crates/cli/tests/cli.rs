use std::fs;
use std::path::{Path, PathBuf};

use bipower_cli::certs::{HamCertificate, InfiniteEnvelope};
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["bipower"];
    argv.extend_from_slice(args);
    let code = bipower_cli::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const C6: &str = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";

fn setup() -> (TempDir, String) {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", P4);
    (dir, p4)
}

#[test]
fn bipower_of_p4() {
    let (_dir, p4) = setup();
    let r = run(&["bipower", "--t", "3", &p4]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

#[test]
fn power_and_render_modes() {
    let (_dir, p4) = setup();
    let r = run(&["power", "--t", "2", &p4]);
    assert_eq!(r.out, "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n");
    let r = run(&["bipower", "--t", "3", "--json", &p4]);
    assert_eq!(r.out, "{\"n\":4,\"edges\":[[0,1],[0,3],[1,2],[2,3]]}\n");
    let r = run(&["bipower", "--t", "3", "--dot", &p4]);
    assert!(r.out.starts_with("graph G {") && r.out.contains("0 -- 3;"));
}

#[test]
fn json_graph_input() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p4.json", r#"{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}"#);
    let r = run(&["bipower", "--t", "3", &g]);
    assert_eq!(r.out, "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

#[test]
fn bad_cycle_cert_exits_one() {
    let (dir, p4) = setup();
    let cert = write(dir.path(), "cert.txt", "0 2 1 3\n");
    let r = run(&["verify", "cycle", "--t", "3", "--tree", &p4, &p4, &cert]);
    assert_eq!(r.code, 1);
    let report: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(report["passed"], false);
}

#[test]
fn good_plain_cycle_passes() {
    let (dir, p4) = setup();
    let cert = write(dir.path(), "cert.txt", "0 3 2 1\n");
    let r = run(&["verify", "cycle", "--t", "3", "--tree", &p4, &p4, &cert]);
    assert_eq!(r.code, 0, "{}", r.out);
}

#[test]
fn usage_errors_exit_two() {
    let (_dir, p4) = setup();
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["bipower", "--bogus", &p4]).code, 2);
    assert_eq!(run(&["bipower", &p4]).code, 2);
    // randomized generators need a seed
    assert_eq!(run(&["gen", "matched-tree", "--half", "3"]).code, 2);
    assert_eq!(run(&["infinite", "--family", "spiral"]).code, 2);
    assert_eq!(run(&["infinite", "--family", "ladder", "--radii", "x"]).code, 2);
    assert_eq!(run(&["bipower", "--t", "3", "/no/such/file"]).code, 2);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.out.contains("hamcycle"));
}

#[test]
fn matching_and_spantree_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c6.txt", C6);
    let r = run(&["match", "--perfect", &g]);
    assert_eq!(r.code, 0);
    let m = write(dir.path(), "c6.m", &r.out);
    assert_eq!(run(&["verify", "matching", "--perfect", &g, &m]).code, 0);
    let r = run(&["spantree", "--matching", &m, &g]);
    assert_eq!(r.code, 0, "{}", r.err);
    let t = write(dir.path(), "c6.tree", &r.out);
    assert_eq!(run(&["verify", "spantree", "--matching", &m, &g, &t]).code, 0);
    // a spanning path that drops a matching edge
    let bad = write(dir.path(), "bad.tree", "6 5\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    let r = run(&["verify", "spantree", "--matching", &m, &g, &bad]);
    assert_eq!(r.code, 1);
}

#[test]
fn star_has_no_perfect_matching() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    let r = run(&["match", "--perfect", &g]);
    assert_eq!(r.code, 1);
    assert_eq!(r.out.lines().count(), 1);
}

#[test]
fn hamcycle_and_hampath_certificates_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let prefix = path(d, "g");
    assert_eq!(run(&["gen", "bipartite", "--half", "12", "--extra", "10", "--seed", "5", "--out", &prefix]).code, 0);
    let (g, m) = (path(d, "g.graph"), path(d, "g.matching"));
    let cert = path(d, "cycle.json");
    let r = run(&["hamcycle", "--matching", &m, "--cert", &cert, &g]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.split_whitespace().count(), 24);
    let v = run(&["verify", "cycle", &g, &cert]);
    assert_eq!(v.code, 0, "{}", v.out);

    // the same sequence, as a plain file
    let plain = write(d, "cycle.txt", &r.out);
    assert_eq!(run(&["verify", "cycle", &g, &plain]).code, 0);

    // opposite sides: vertex 0 and its mate
    let mate: Vec<usize> = fs::read_to_string(&m).unwrap().lines().next().unwrap()
        .split_whitespace().map(|s| s.parse().unwrap()).collect();
    let (x, y) = (mate[0].to_string(), mate[1].to_string());
    let pcert = path(d, "path.json");
    let r = run(&["hampath", "--matching", &m, "--from", &x, "--to", &y, "--cert", &pcert, &g]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = run(&["verify", "path", "--from", &x, "--to", &y, &g, &pcert]);
    assert_eq!(v.code, 0, "{}", v.out);
    let v = run(&["verify", "path", "--from", &y, "--to", &x, &g, &pcert]);
    assert_eq!(v.code, 1);
}

#[test]
fn hampath_rejects_same_side() {
    let (dir, p4) = setup();
    let m = write(dir.path(), "m", "0 1\n2 3\n");
    let r = run(&["hampath", "--matching", &m, "--from", "0", "--to", "2", &p4]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("same side"));
}

#[test]
fn tampered_certificates_fail() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let g = write(d, "c6.txt", C6);
    let m = write(d, "c6.m", "0 1\n2 3\n4 5\n");
    let cert = path(d, "c.json");
    assert_eq!(run(&["hamcycle", "--matching", &m, "--cert", &cert, &g]).code, 0);
    let original: HamCertificate = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();

    let mut swapped = original.clone();
    swapped.sequence.swap(0, 1);
    let f = write(d, "swapped.json", &serde_json::to_string(&swapped).unwrap());
    assert_eq!(run(&["verify", "cycle", &g, &f]).code, 1);

    let mut counts = original.clone();
    counts.crossings[0].count += 2;
    let f = write(d, "counts.json", &serde_json::to_string(&counts).unwrap());
    assert_eq!(run(&["verify", "cycle", &g, &f]).code, 1);

    // same certificate against another graph
    let other = write(d, "other.txt", "6 7\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n0 3\n");
    let r = run(&["verify", "cycle", &other, &cert]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("input hash"));

    let r = run(&["verify", "path", &g, &cert]);
    assert_eq!(r.code, 1);
}

#[test]
fn layered_witness_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = path(dir.path(), "L");
    assert_eq!(run(&["gen", "layered", "--k", "2", "--t", "3", "--s", "4", "--out", &prefix]).code, 0);
    let (g, set) = (format!("{prefix}.graph"), format!("{prefix}.set"));
    assert_eq!(run(&["verify", "independent", "--t", "3", &g, &set]).code, 0);
    // in the fifth bi-power the outer layers are adjacent
    assert_eq!(run(&["verify", "independent", "--t", "5", &g, &set]).code, 1);
    let bp = run(&["bipower", "--t", "3", &g]);
    let bp = write(dir.path(), "bp", &bp.out);
    assert_eq!(run(&["oracle", "cycle", &bp]).out, "none\n");
}

#[test]
fn bistar_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["gen", "bistar", "--k", "3"]);
    let g = write(dir.path(), "bs", &r.out);
    assert_eq!(run(&["oracle", "cycle", "--bipower", "3", &g]).out, "none\n");
    let r = run(&["oracle", "cycle", "--bound", "4", &g]);
    assert_eq!(r.code, 2);
}

#[test]
fn oracle_finds_paths() {
    let (_dir, p4) = setup();
    assert_eq!(run(&["oracle", "path", "--from", "0", "--to", "3", &p4]).out, "0 1 2 3\n");
    assert_eq!(run(&["oracle", "path", "--from", "1", "--to", "3", &p4]).out, "none\n");
    assert_eq!(run(&["oracle", "cycle", "--bipower", "3", &p4]).out, "0 1 2 3\n");
}

#[test]
fn constructions_have_verifiers() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let g = write(d, "c6.txt", C6);
    let m = write(d, "c6.m", "0 1\n2 3\n4 5\n");
    for (cmd, t) in [("bipower", "3"), ("power", "2")] {
        let out = write(d, cmd, &run(&[cmd, "--t", t, &g]).out);
        assert_eq!(run(&["verify", cmd, "--t", t, &g, &out]).code, 0);
        assert_eq!(run(&["verify", cmd, "--t", t, &g, &g]).code, 1);
    }
    let q = run(&["quotient", "--matching", &m, &g]);
    assert_eq!(q.out, "3 3\n0 1\n0 2\n1 2\n");
    let q = write(d, "q", &q.out);
    assert_eq!(run(&["verify", "quotient", "--matching", &m, &g, &q]).code, 0);
}

#[test]
fn generators_are_deterministic() {
    let a = run(&["gen", "matched-tree", "--half", "40", "--seed", "9"]);
    let b = run(&["gen", "matched-tree", "--half", "40", "--seed", "9"]);
    let c = run(&["gen", "matched-tree", "--half", "40", "--seed", "10"]);
    assert_eq!(a.out, b.out);
    assert_ne!(a.out, c.out);
}

fn infinite_cert(dir: &Path, family: &str, radii: &str) -> PathBuf {
    let p = dir.join(format!("{family}.json"));
    let r = run(&["infinite", "--family", family, "--radii", radii, "--out", p.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    p
}

#[test]
fn infinite_to_stdout_is_deterministic() {
    let a = run(&["infinite", "--family", "double-ray", "--radii", "1:8"]);
    assert_eq!(a.code, 0, "{}", a.err);
    let b = run(&["infinite", "--family", "double-ray", "--radii", "1:8"]);
    assert_eq!(a.out, b.out);
    let env: InfiniteEnvelope = serde_json::from_str(&a.out).unwrap();
    assert!(env.certificate.passed);
}

#[test]
fn recheck_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let p = infinite_cert(dir.path(), "ladder", "1,2,3,4,5");
    let r = run(&["recheck", p.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.out);

    let env: InfiniteEnvelope = serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();

    // stored report edited: recomputation disagrees
    let mut edited = env.clone();
    edited.certificate.limit.cut_bound = 1;
    let f = write(dir.path(), "edited.json", &serde_json::to_string(&edited).unwrap());
    assert_eq!(run(&["recheck", &f]).code, 1);

    // construction data edited without refreshing the hash
    let mut moved = env.clone();
    moved.certificate.sequence.steps[0].cycle.reverse();
    let f = write(dir.path(), "moved.json", &serde_json::to_string(&moved).unwrap());
    let r = run(&["recheck", &f]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("input hash"));

    let f = write(dir.path(), "junk.json", "{\"format\": 1}");
    assert_eq!(run(&["recheck", &f]).code, 2);
}
