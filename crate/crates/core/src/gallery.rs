//! Deterministic builders for the example families and seeded random
//! instances.

use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{bipartition, Graph, Side, Vertex};
use crate::matching::Matching;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GalleryError {
    /// The layered family needs an even number of inner layers.
    OddInnerLayers(usize),
    /// Inner layer count must reach the exponent.
    TooFewInnerLayers { s: usize, t: usize },
    ZeroWidth,
    BistarTooSmall(usize),
    NoPairs,
}

impl fmt::Display for GalleryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GalleryError::OddInnerLayers(s) => write!(f, "s = {s} must be even"),
            GalleryError::TooFewInnerLayers { s, t } => write!(f, "s = {s} must be at least t = {t}"),
            GalleryError::ZeroWidth => write!(f, "layer width k must be positive"),
            GalleryError::BistarTooSmall(k) => write!(f, "bi-star needs k >= 3, got {k}"),
            GalleryError::NoPairs => write!(f, "need at least one matched pair"),
        }
    }
}

/// Layered graph `V_0, ..., V_{s+1}` with complete joins between consecutive
/// layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layered {
    pub graph: Graph,
    pub layers: Vec<Vec<Vertex>>,
}

impl Layered {
    /// `V_0 ∪ V_{s+1}`, the set that is independent in the bi-power.
    pub fn outer_layers(&self) -> Vec<Vertex> {
        let mut out = self.layers[0].clone();
        out.extend_from_slice(&self.layers[self.layers.len() - 1]);
        out
    }
}

/// Layers of width `k` between two outer layers of size `floor(s*k/2) + 1`.
///
/// For `s >= t` the outer layers are more than `t` apart, so they stay
/// independent in the bi-power and hold more than half the vertices.
pub fn layered_counterexample(k: usize, t: usize, s: usize) -> Result<Layered, GalleryError> {
    if k == 0 {
        return Err(GalleryError::ZeroWidth);
    }
    if s % 2 == 1 {
        return Err(GalleryError::OddInnerLayers(s));
    }
    if s < t {
        return Err(GalleryError::TooFewInnerLayers { s, t });
    }
    let outer = s * k / 2 + 1;
    let mut layers = Vec::with_capacity(s + 2);
    let mut next = 0;
    for i in 0..s + 2 {
        let width = if i == 0 || i == s + 1 { outer } else { k };
        layers.push((next..next + width).collect::<Vec<_>>());
        next += width;
    }
    let edges = layers.windows(2).flat_map(|pair| {
        let (a, b) = (&pair[0], &pair[1]);
        a.iter().flat_map(move |&u| b.iter().map(move |&v| (u, v)))
    });
    let graph = Graph::from_edges(next, edges).expect("layer ids are dense");
    Ok(Layered { graph, layers })
}

/// Two adjacent centres `0` and `1`, each carrying `k` pendant paths of
/// length three.
pub fn subdivided_bistar(k: usize) -> Result<Graph, GalleryError> {
    if k < 3 {
        return Err(GalleryError::BistarTooSmall(k));
    }
    let mut edges = Vec::with_capacity(1 + 6 * k);
    edges.push((0, 1));
    let mut next = 2;
    for centre in [0, 1] {
        for _ in 0..k {
            edges.push((centre, next));
            edges.push((next, next + 1));
            edges.push((next + 1, next + 2));
            next += 3;
        }
    }
    Ok(Graph::from_edges(next, edges).expect("ids are dense"))
}

/// Random tree on `2 * half_n` vertices with perfect matching
/// `{(2i, 2i+1)}`: each new pair hangs off a uniformly chosen earlier vertex
/// through one of its two ends.
pub fn random_matched_tree(half_n: usize, seed: u64) -> Result<(Graph, Matching), GalleryError> {
    if half_n == 0 {
        return Err(GalleryError::NoPairs);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * half_n;
    let mut edges = Vec::with_capacity(n - 1);
    let pairs: Vec<(Vertex, Vertex)> = (0..half_n).map(|i| (2 * i, 2 * i + 1)).collect();
    edges.extend_from_slice(&pairs);
    for i in 1..half_n {
        let anchor = rng.gen_range(0..2 * i);
        let end = 2 * i + rng.gen_range(0..2);
        edges.push((anchor, end));
    }
    let graph = Graph::from_edges(n, edges).expect("ids are dense");
    let matching = Matching::from_pairs(n, pairs).expect("pairs are disjoint");
    Ok((graph, matching))
}

/// A random matched tree plus up to `extra_edges` further edges between its
/// two sides, chosen uniformly without repetition.
pub fn random_bipartite_with_pm(
    half_n: usize,
    extra_edges: usize,
    seed: u64,
) -> Result<(Graph, Matching), GalleryError> {
    let (tree, matching) = random_matched_tree(half_n, seed)?;
    let parts = bipartition(&tree).expect("trees are bipartite");
    let mut candidates: Vec<(Vertex, Vertex)> = parts
        .part(Side::X)
        .into_iter()
        .flat_map(|u| parts.part(Side::Y).into_iter().map(move |v| (u.min(v), u.max(v))))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    candidates.sort_unstable();
    // separate stream so the tree does not depend on the extra-edge count
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    candidates.shuffle(&mut rng);
    candidates.truncate(extra_edges);
    candidates.extend(tree.edges());
    let graph = Graph::from_edges(tree.n(), candidates).expect("ids are dense");
    Ok((graph, matching))
}
