//! Graph powers `G^t` and bi-powers `G_B^t`.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

/// Visits every vertex within distance `cap` of `source`, reporting `(v, d)`.
///
/// `stamp`/`dist` are scratch buffers reused across sources.
fn capped_bfs(
    g: &Graph,
    source: Vertex,
    cap: usize,
    stamp: &mut [usize],
    dist: &mut [usize],
    queue: &mut Vec<Vertex>,
    mut visit: impl FnMut(Vertex, usize),
) {
    let mark = source + 1;
    queue.clear();
    queue.push(source);
    stamp[source] = mark;
    dist[source] = 0;
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let d = dist[u];
        if d > 0 {
            visit(u, d);
        }
        if d == cap {
            continue;
        }
        for &w in g.neighbors(u) {
            if stamp[w] != mark {
                stamp[w] = mark;
                dist[w] = d + 1;
                queue.push(w);
            }
        }
    }
}

fn distance_graph(g: &Graph, t: usize, keep: impl Fn(usize) -> bool) -> Graph {
    let n = g.n();
    let mut stamp = vec![0; n];
    let mut dist = vec![0; n];
    let mut queue = Vec::new();
    let mut adj = vec![Vec::new(); n];
    if t == 0 {
        return Graph::new(n);
    }
    for u in 0..n {
        let list: &mut Vec<Vertex> = &mut adj[u];
        capped_bfs(g, u, t, &mut stamp, &mut dist, &mut queue, |v, d| {
            if keep(d) {
                list.push(v);
            }
        });
    }
    Graph::from_raw_adjacency(adj)
}

/// Bi-power `G_B^t`: `uv` is an edge iff `d_G(u, v)` is odd and at most `t`.
///
/// Vertices in different components are never joined.
pub fn bipower(g: &Graph, t: usize) -> Graph {
    distance_graph(g, t, |d| d % 2 == 1)
}

/// Power `G^t`: `uv` is an edge iff `1 <= d_G(u, v) <= t`.
pub fn power(g: &Graph, t: usize) -> Graph {
    distance_graph(g, t, |_| true)
}
