//! Exhaustive small instances, one per isomorphism class.
//!
//! Two demand graphs are identified when a permutation of `A`, a
//! permutation of `B`, and possibly the swap of `A` and `B` map one onto the
//! other.

use std::collections::BTreeSet;

use edp_core::{DemandGraph, VertexId};

/// All permutations of `0..k`.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Sorted dense-pair list of `edges` under the smallest relabeling.
fn canonical(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut image = Vec::with_capacity(edges.len());
    for swap in [false, true] {
        for pa in perms {
            for pb in perms {
                let map = |x: usize| {
                    let (side_b, i) = (x >= n, x % n);
                    let (side_b, i) = if side_b { (!swap, pb[i]) } else { (swap, pa[i]) };
                    if side_b {
                        n + i
                    } else {
                        i
                    }
                };
                image.clear();
                image.extend(edges.iter().map(|&(u, v)| {
                    let (x, y) = (map(u), map(v));
                    (x.min(y), x.max(y))
                }));
                image.sort_unstable();
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image.clone());
                }
            }
        }
    }
    best.unwrap_or_default()
}

/// One representative per isomorphism class of demand graphs on `n` with
/// `1 ≤ e ≤ max_e` and `Δ ≤ max_deg` (the empty graph is included too).
pub fn isomorphism_classes(n: u32, max_e: usize, max_deg: usize) -> Vec<DemandGraph> {
    let nu = n as usize;
    let m = 2 * nu;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let perms = permutations(nu);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut deg = vec![0usize; m];
    // a graph is visited only if the vertices it uses form a prefix of each
    // class; every class has such a member
    fn prefix_closed(deg: &[usize], n: usize) -> bool {
        [0, n].iter().all(|&base| {
            let used: Vec<bool> = (0..n).map(|i| deg[base + i] > 0).collect();
            used.windows(2).all(|w| w[0] || !w[1])
        })
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        nu: usize,
        pairs: &[(usize, usize)],
        from: usize,
        left: usize,
        max_deg: usize,
        chosen: &mut Vec<(usize, usize)>,
        deg: &mut [usize],
        perms: &[Vec<usize>],
        seen: &mut BTreeSet<Vec<(usize, usize)>>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if prefix_closed(deg, nu) && seen.insert(canonical(nu, chosen, perms)) {
            out.push(chosen.clone());
        }
        if left == 0 {
            return;
        }
        for p in from..pairs.len() {
            let (u, v) = pairs[p];
            if deg[u] == max_deg || deg[v] == max_deg {
                continue;
            }
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            rec(nu, pairs, p, left - 1, max_deg, chosen, deg, perms, seen, out);
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
    }
    let mut raw = Vec::new();
    rec(nu, &pairs, 0, max_e, max_deg, &mut chosen, &mut deg, &perms, &mut seen, &mut raw);
    for edges in raw {
        let mut d = DemandGraph::new(n).expect("n > 0");
        for (u, v) in edges {
            d.add_edge(VertexId::from_dense(u, n), VertexId::from_dense(v, n), 1)
                .expect("valid pair");
        }
        out.push(d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_two() {
        // e ≤ 1: empty, one crossing edge, one same-class edge
        assert_eq!(isomorphism_classes(2, 1, 2).len(), 3);
        // e = 2: a doubled crossing edge, a crossing star, a crossing
        // matching, crossing + same-class, a doubled same-class edge, and
        // a1a2 + b1b2
        let all = isomorphism_classes(2, 2, 2);
        assert_eq!(all.iter().filter(|d| d.edge_count() == 2).count(), 6);
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(4).len(), 24);
        let set: BTreeSet<_> = permutations(3).into_iter().collect();
        assert_eq!(set.len(), 6);
    }
}
