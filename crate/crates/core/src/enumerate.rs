//! Exhaustive enumeration of small instances: free trees and connected
//! bipartite graphs carrying a perfect matching.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{is_connected, Graph, Vertex};
use crate::matching::Matching;

/// All rooted unlabeled trees on `n` vertices as level sequences
/// (root at level 1), in the Beyer–Hedetniemi successor order.
pub fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut levels: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(levels.clone());
        let Some(p) = (0..n).rev().find(|&i| levels[i] > 2) else {
            break;
        };
        let q = (0..p)
            .rev()
            .find(|&i| levels[i] == levels[p] - 1)
            .expect("a level sequence has a parent level before every entry");
        let shift = p - q;
        for i in p..n {
            levels[i] = levels[i - shift];
        }
    }
    out
}

/// Tree whose vertex `i` hangs below the last earlier vertex one level up.
pub fn tree_from_levels(levels: &[usize]) -> Graph {
    let edges = (1..levels.len()).map(|i| {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] + 1 == levels[i])
            .expect("valid level sequence");
        (parent, i)
    });
    Graph::from_edges(levels.len(), edges).expect("parents precede children")
}

fn encode(tree: &Graph, v: Vertex, parent: Vertex) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = tree
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(tree, w, v))
        .collect();
    kids.sort();
    let mut out = vec![b'('];
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
    out
}

/// Isomorphism-invariant encoding of a tree, rooted at its centre(s).
pub fn tree_canonical_form(tree: &Graph) -> Vec<u8> {
    let n = tree.n();
    if n <= 2 {
        return vec![n as u8];
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in tree.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(tree, c, usize::MAX))
        .min()
        .expect("every tree has a centre")
}

/// All free trees on `n` vertices, one per isomorphism class.
pub fn free_trees(n: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    rooted_level_sequences(n)
        .into_iter()
        .map(|levels| tree_from_levels(&levels))
        .filter(|t| seen.insert(tree_canonical_form(t)))
        .collect()
}

/// Connected bipartite graphs on `2 * half` vertices with perfect matching
/// `{(i, half + i)}` between sides `0..half` and `half..2*half`.
///
/// Every connected bipartite graph with a perfect matching is isomorphic to
/// at least one of these. The list is reduced modulo relabellings that keep
/// the matching (a simultaneous permutation of both sides, and swapping the
/// sides), so some isomorphic duplicates may remain but the count stays small.
pub fn matched_bipartite_graphs(half: usize) -> Vec<(Graph, Matching)> {
    assert!(half <= 5, "enumeration is only meant for small instances");
    // off-diagonal cells (i, j), i != j, of the half x half biadjacency matrix
    let cells: Vec<(usize, usize)> = (0..half)
        .flat_map(|i| (0..half).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let index = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j)).unwrap();
    let mut relabellings: Vec<Vec<usize>> = Vec::new();
    for perm in permutations(half) {
        for transpose in [false, true] {
            // preimage[b] is the cell that the relabelling sends to cell b
            let mut preimage = vec![0; cells.len()];
            for (source, &(i, j)) in cells.iter().enumerate() {
                let (a, b) = if transpose { (perm[j], perm[i]) } else { (perm[i], perm[j]) };
                preimage[index(a, b)] = source;
            }
            relabellings.push(preimage);
        }
    }
    let bits = cells.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << bits) {
        if !is_minimal(mask, &relabellings, bits) {
            continue;
        }
        let edges = (0..half).map(|i| (i, half + i)).chain(
            (0..bits)
                .filter(|&b| mask & (1 << b) != 0)
                .map(|b| (cells[b].0, half + cells[b].1)),
        );
        let g = Graph::from_edges(2 * half, edges).expect("ids are dense");
        if is_connected(&g) {
            let m = Matching::from_pairs(2 * half, (0..half).map(|i| (i, half + i)))
                .expect("diagonal pairs are disjoint");
            out.push((g, m));
        }
    }
    out
}

/// True when no relabelling maps `mask` to a numerically smaller mask.
fn is_minimal(mask: u64, relabellings: &[Vec<usize>], bits: usize) -> bool {
    for preimage in relabellings {
        // compare images from the most significant cell down
        for b in (0..bits).rev() {
            let image_bit = (mask >> preimage[b]) & 1;
            let own_bit = (mask >> b) & 1;
            if image_bit != own_bit {
                if image_bit < own_bit {
                    return false;
                }
                break;
            }
        }
    }
    true
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut current, &mut out);
    out
}

fn heap_permute(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, items, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, items, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_tree;

    #[test]
    fn rooted_tree_counts() {
        // rooted unlabeled trees: 1, 1, 2, 4, 9, 20, 48, 115, 286
        let counts: Vec<usize> = (1..=9).map(|n| rooted_level_sequences(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286]);
    }

    #[test]
    fn free_tree_counts() {
        // free unlabeled trees: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551
        let counts: Vec<usize> = (1..=12).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        assert!(free_trees(7).iter().all(is_tree));
    }

    #[test]
    fn matched_bipartite_small_cases() {
        // half = 1: K2; half = 2: P4 and C4
        assert_eq!(matched_bipartite_graphs(1).len(), 1);
        let two = matched_bipartite_graphs(2);
        let mut sizes: Vec<usize> = two.iter().map(|(g, _)| g.m()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 4]);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        let distinct: BTreeSet<Vec<usize>> = permutations(4).into_iter().collect();
        assert_eq!(distinct.len(), 24);
    }
}
