//! Seeded random demand graphs.

use edp_core::{DemandGraph, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Model {
    /// Independent uniform vertex pairs, rejected when a degree cap is hit.
    Uniform,
    /// Few pairs with large multiplicities.
    Bundles,
    /// A random crossing matching.
    Matching,
    /// Union of `Δ` random perfect matchings of all `2n` vertices.
    Regular,
    /// Two bundles of `n − 1` edges, one inside each class.
    ExtremalBundle,
}

#[derive(Debug, Clone, Copy)]
pub struct GenParams {
    pub n: u32,
    /// Target `e(D)`; models fill up to the degree cap when absent.
    pub edges: Option<usize>,
    pub max_degree: Option<usize>,
    pub model: Model,
    pub seed: u64,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn generate(p: &GenParams) -> DemandGraph {
    let mut rng = rng(p.seed);
    let n = p.n.max(1);
    let cap = p.max_degree.unwrap_or(n as usize);
    match p.model {
        Model::Uniform => uniform(&mut rng, n, p.edges.unwrap_or(n as usize * cap), cap),
        Model::Bundles => bundles(&mut rng, n, p.edges.unwrap_or(n as usize * cap), cap),
        Model::Matching => matching(&mut rng, n, p.edges.unwrap_or(n as usize)),
        Model::Regular => regular(&mut rng, n, p.max_degree.unwrap_or(1)),
        Model::ExtremalBundle => extremal_bundle(n),
    }
}

fn vertex(n: u32, dense: usize) -> VertexId {
    VertexId::from_dense(dense, n)
}

/// Up to `edges` instances of uniformly drawn pairs, skipping draws that
/// would push a degree past `cap`.
pub fn uniform<R: Rng>(rng: &mut R, n: u32, edges: usize, cap: usize) -> DemandGraph {
    let mut d = DemandGraph::new(n).unwrap();
    let m = 2 * n as usize;
    if m < 2 {
        return d;
    }
    let mut deg = vec![0usize; m];
    let mut placed = 0;
    let mut misses = 0;
    while placed < edges && misses < 50 * m + 1000 {
        let u = rng.gen_range(0..m);
        let mut v = rng.gen_range(0..m - 1);
        if v >= u {
            v += 1;
        }
        if deg[u] < cap && deg[v] < cap {
            deg[u] += 1;
            deg[v] += 1;
            d.add_edge(vertex(n, u), vertex(n, v), 1).unwrap();
            placed += 1;
            misses = 0;
        } else {
            misses += 1;
        }
    }
    d
}

pub fn bundles<R: Rng>(rng: &mut R, n: u32, edges: usize, cap: usize) -> DemandGraph {
    let mut d = DemandGraph::new(n).unwrap();
    let m = 2 * n as usize;
    if m < 2 {
        return d;
    }
    let mut deg = vec![0usize; m];
    let mut placed = 0;
    for _ in 0..4 * m {
        if placed >= edges {
            break;
        }
        let u = rng.gen_range(0..m);
        let mut v = rng.gen_range(0..m - 1);
        if v >= u {
            v += 1;
        }
        let room = cap.saturating_sub(deg[u].max(deg[v])).min(edges - placed);
        if room == 0 {
            continue;
        }
        let k = rng.gen_range(1..=room);
        deg[u] += k;
        deg[v] += k;
        d.add_edge(vertex(n, u), vertex(n, v), k as u32).unwrap();
        placed += k;
    }
    d
}

pub fn matching<R: Rng>(rng: &mut R, n: u32, edges: usize) -> DemandGraph {
    let mut bs: Vec<u32> = (1..=n).collect();
    bs.shuffle(rng);
    let pairs = (1..=n).zip(bs).take(edges).map(|(a, b)| (VertexId::a(a), VertexId::b(b), 1));
    DemandGraph::from_edges(n, pairs).unwrap()
}

/// Every vertex gets degree exactly `delta`.
pub fn regular<R: Rng>(rng: &mut R, n: u32, delta: usize) -> DemandGraph {
    let mut d = DemandGraph::new(n).unwrap();
    let mut vs: Vec<usize> = (0..2 * n as usize).collect();
    for _ in 0..delta {
        vs.shuffle(rng);
        for pair in vs.chunks(2) {
            d.add_edge(vertex(n, pair[0]), vertex(n, pair[1]), 1).unwrap();
        }
    }
    d
}

/// `(a1, a2) × (n − 1)` and `(b1, b2) × (n − 1)`: `2n − 2` edges and not
/// realizable.
pub fn extremal_bundle(n: u32) -> DemandGraph {
    let mut d = DemandGraph::new(n).unwrap();
    if n >= 2 {
        d.add_edge(VertexId::a(1), VertexId::a(2), n - 1).unwrap();
        d.add_edge(VertexId::b(1), VertexId::b(2), n - 1).unwrap();
    }
    d
}
