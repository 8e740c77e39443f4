//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use bipower_core::Graph;
use proptest::prelude::*;

/// Random simple graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=n * 2).prop_map(move |pairs| {
            let edges = pairs.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// All-pairs distances by Floyd–Warshall; `usize::MAX` for unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for &w in g.neighbors(v) {
            d[v][w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Hamiltonian `(x, y)`-path by trying every vertex order.
pub fn perm_ham_path(g: &Graph, x: usize, y: usize) -> bool {
    let mut p: Vec<usize> = (0..g.n()).collect();
    loop {
        if p[0] == x && p[p.len() - 1] == y && p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// Hamiltonian cycle by trying every vertex order starting at 0.
pub fn perm_ham_cycle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let mut c = vec![0];
        c.extend(&rest);
        if (0..n).all(|i| g.has_edge(c[i], c[(i + 1) % n])) {
            return true;
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

/// Maximum matching size by branching on the lowest unmatched vertex.
pub fn brute_matching_size(g: &Graph) -> usize {
    fn go(g: &Graph, used: u64, from: usize) -> usize {
        let Some(v) = (from..g.n()).find(|&v| used & (1 << v) == 0) else {
            return 0;
        };
        let mut best = go(g, used | (1 << v), v + 1);
        for &w in g.neighbors(v) {
            if used & (1 << w) == 0 {
                best = best.max(1 + go(g, used | (1 << v) | (1 << w), v + 1));
            }
        }
        best
    }
    go(g, 0, 0)
}

/// Whether removing `cut` leaves no path from `a` to `b`.
pub fn separates(g: &Graph, a: &[usize], b: &[usize], cut: u64) -> bool {
    let mut seen = cut;
    let mut stack: Vec<usize> = a.iter().copied().filter(|&v| cut & (1 << v) == 0).collect();
    for &v in &stack {
        seen |= 1 << v;
    }
    while let Some(v) = stack.pop() {
        if b.contains(&v) {
            return false;
        }
        for &w in g.neighbors(v) {
            if seen & (1 << w) == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    true
}

/// Size of a smallest vertex set meeting every `(A, B)`-path.
pub fn brute_min_separator(g: &Graph, a: &[usize], b: &[usize]) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&cut| separates(g, a, b, cut))
        .map(|cut| cut.count_ones() as usize)
        .min()
        .unwrap()
}
