#![allow(dead_code)]

use edp_core::{DemandGraph, VertexId};
use rand::Rng;

pub fn vertex(n: u32, dense: usize) -> VertexId {
    VertexId::from_dense(dense, n)
}

/// Random loopless multigraph with at most `edges` instances and all
/// degrees at most `max_deg`. `mono` is the chance of a same-side pair.
pub fn random_demand<R: Rng>(rng: &mut R, n: u32, edges: usize, max_deg: usize, mono: f64) -> DemandGraph {
    let mut d = DemandGraph::new(n).unwrap();
    let mut deg = vec![0usize; 2 * n as usize];
    let mut placed = 0;
    for _ in 0..edges * 20 {
        if placed == edges {
            break;
        }
        let u = rng.gen_range(0..2 * n as usize);
        let same = n > 1 && rng.gen_bool(mono);
        let v = if same {
            let base = if u < n as usize { 0 } else { n as usize };
            let mut w = base + rng.gen_range(0..n as usize - 1);
            if w >= u {
                w += 1;
            }
            w
        } else {
            let base = if u < n as usize { n as usize } else { 0 };
            base + rng.gen_range(0..n as usize)
        };
        if deg[u] < max_deg && deg[v] < max_deg {
            deg[u] += 1;
            deg[v] += 1;
            d.add_edge(vertex(n, u), vertex(n, v), 1).unwrap();
            placed += 1;
        }
    }
    d
}

/// Every unordered pair of distinct vertices, as dense indices.
pub fn all_pairs(n: u32) -> Vec<(usize, usize)> {
    let m = 2 * n as usize;
    (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect()
}

/// Every multiset of at most `max_e` pairs, as demand graphs.
pub fn all_demands(n: u32, max_e: usize) -> Vec<DemandGraph> {
    let pairs = all_pairs(n);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(n: u32, pairs: &[(usize, usize)], from: usize, left: usize, chosen: &mut Vec<usize>, out: &mut Vec<DemandGraph>) {
        let mut d = DemandGraph::new(n).unwrap();
        for &p in chosen.iter() {
            let (u, v) = pairs[p];
            d.add_edge(vertex(n, u), vertex(n, v), 1).unwrap();
        }
        out.push(d);
        if left == 0 {
            return;
        }
        for p in from..pairs.len() {
            chosen.push(p);
            rec(n, pairs, p, left - 1, chosen, out);
            chosen.pop();
        }
    }
    rec(n, &pairs, 0, max_e, &mut chosen, &mut out);
    out
}
