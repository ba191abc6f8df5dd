//! Exact edge-disjoint path search for small instances.
//!
//! Demands are routed one at a time; for each, simple alternating paths in
//! the unused part of `K_{n,n}` are tried shortest first. The search is
//! complete, so `Infeasible` is a proof. Four prunings keep `n = 4` cheap:
//!
//! * a vertex must keep at least as many unused base edges as it has
//!   unrouted demands;
//! * the unrouted demands' minimum path lengths must fit into the unused
//!   base edges;
//! * untouched non-terminal vertices of one class are interchangeable, so
//!   only the lowest-indexed one is ever tried as the next path vertex;
//! * copies of one bundle are routed consecutively with non-decreasing path
//!   lengths.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{DemandGraph, Side, VertexId};
use crate::realization::Realization;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_n: u32,
    pub max_edges: usize,
    /// Path-extension steps before giving up.
    pub max_nodes: u64,
}

impl SearchBudget {
    /// The caps used for exact maximum-subgraph enumeration.
    pub fn desk() -> Self {
        SearchBudget {
            max_n: 4,
            max_edges: 8,
            ..SearchBudget::default()
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_n: 6,
            max_edges: 14,
            max_nodes: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdpOutcome {
    Feasible(Realization),
    Infeasible,
    ScaleExceeded,
}

impl EdpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, EdpOutcome::Feasible(_))
    }
}

/// Decides whether `d` is realizable in `K_{n,n}`.
pub fn edp_decide(d: &DemandGraph, budget: &SearchBudget) -> EdpOutcome {
    edp_decide_with_clock(d, budget, &mut || false)
}

/// As [`edp_decide`]; `out_of_time` is polled every few thousand steps and
/// ends the search with `ScaleExceeded` once it returns true.
pub fn edp_decide_with_clock(
    d: &DemandGraph,
    budget: &SearchBudget,
    out_of_time: &mut dyn FnMut() -> bool,
) -> EdpOutcome {
    let instances = d.instances();
    let pairs: Vec<(VertexId, VertexId)> = instances.iter().map(|&(_, u, v)| (u, v)).collect();
    match route_pairs(d.n(), &pairs, budget, out_of_time) {
        Search::Found(paths) => {
            let mut r = Realization::new();
            for ((label, _, _), p) in instances.iter().zip(paths) {
                r.insert(label.id, p);
            }
            EdpOutcome::Feasible(r)
        }
        Search::Exhausted => EdpOutcome::Infeasible,
        Search::Exceeded => EdpOutcome::ScaleExceeded,
    }
}

/// Result of [`route_pairs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    /// One path per input pair, in input order, each from `u` to `v`.
    Found(Vec<Vec<VertexId>>),
    Exhausted,
    Exceeded,
}

/// Routes every `(u, v)` pair by an edge-disjoint path in `K_{n,n}`.
pub fn route_pairs(
    n: u32,
    pairs: &[(VertexId, VertexId)],
    budget: &SearchBudget,
    out_of_time: &mut dyn FnMut() -> bool,
) -> Search {
    if n > budget.max_n || pairs.len() > budget.max_edges {
        return Search::Exceeded;
    }
    let nu = n as usize;
    let dense = |v: VertexId| v.dense(n);
    // bundles grouped, monochromatic first, then larger bundles first
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    let key = |i: usize| {
        let (u, v) = pairs[i];
        let (x, y) = (dense(u).min(dense(v)), dense(u).max(dense(v)));
        (x, y)
    };
    let mult = |i: usize| pairs.iter().enumerate().filter(|&(j, _)| key(j) == key(i)).count();
    order.sort_by_key(|&i| {
        let (u, v) = pairs[i];
        (u.side != v.side, core::cmp::Reverse(mult(i)), key(i), i)
    });
    let demands: Vec<(usize, usize)> = order
        .iter()
        .map(|&i| (dense(pairs[i].0), dense(pairs[i].1)))
        .collect();
    let same_as_prev: Vec<bool> = (0..demands.len())
        .map(|k| k > 0 && key(order[k]) == key(order[k - 1]))
        .collect();
    let mut terminal = vec![false; 2 * nu];
    let mut pending = vec![0usize; 2 * nu];
    for &(s, t) in &demands {
        terminal[s] = true;
        terminal[t] = true;
        pending[s] += 1;
        pending[t] += 1;
    }
    let mut st = State {
        n: nu,
        used: vec![false; nu * nu],
        used_deg: vec![0; 2 * nu],
        used_total: 0,
        pending,
        terminal,
        on_path: vec![false; 2 * nu],
        path: Vec::new(),
        demands,
        same_as_prev,
        routed: Vec::new(),
        nodes: 0,
        max_nodes: budget.max_nodes,
        out_of_time,
    };
    match st.route(0) {
        Ok(true) => {
            let mut out = vec![Vec::new(); pairs.len()];
            for (k, p) in st.routed.iter().enumerate() {
                let orig = order[k];
                let mut path: Vec<VertexId> = p.iter().map(|&x| VertexId::from_dense(x, n)).collect();
                if path[0] != pairs[orig].0 {
                    path.reverse();
                }
                out[orig] = path;
            }
            Search::Found(out)
        }
        Ok(false) => Search::Exhausted,
        Err(Exceeded) => Search::Exceeded,
    }
}

struct Exceeded;

struct State<'a> {
    n: usize,
    used: Vec<bool>,
    used_deg: Vec<usize>,
    used_total: usize,
    pending: Vec<usize>,
    terminal: Vec<bool>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    demands: Vec<(usize, usize)>,
    same_as_prev: Vec<bool>,
    routed: Vec<Vec<usize>>,
    nodes: u64,
    max_nodes: u64,
    out_of_time: &'a mut dyn FnMut() -> bool,
}

impl State<'_> {
    fn side(&self, x: usize) -> Side {
        if x < self.n {
            Side::A
        } else {
            Side::B
        }
    }

    fn slot(&self, x: usize, y: usize) -> usize {
        let (a, b) = if x < self.n { (x, y - self.n) } else { (y, x - self.n) };
        a * self.n + b
    }

    fn set_edge(&mut self, x: usize, y: usize, on: bool) {
        let s = self.slot(x, y);
        self.used[s] = on;
        if on {
            self.used_deg[x] += 1;
            self.used_deg[y] += 1;
            self.used_total += 1;
        } else {
            self.used_deg[x] -= 1;
            self.used_deg[y] -= 1;
            self.used_total -= 1;
        }
    }

    fn min_len(&self, s: usize, t: usize) -> usize {
        if self.side(s) == self.side(t) {
            2
        } else if self.used[self.slot(s, t)] {
            3
        } else {
            1
        }
    }

    fn hopeless(&self, k: usize) -> bool {
        if (0..2 * self.n).any(|v| self.n - self.used_deg[v] < self.pending[v]) {
            return true;
        }
        let need: usize = self.demands[k..].iter().map(|&(s, t)| self.min_len(s, t)).sum();
        need > self.n * self.n - self.used_total
    }

    fn route(&mut self, k: usize) -> Result<bool, Exceeded> {
        if k == self.demands.len() {
            return Ok(true);
        }
        if self.hopeless(k) {
            return Ok(false);
        }
        let (s, t) = self.demands[k];
        let mut lo = self.min_len(s, t);
        if self.same_as_prev[k] {
            let prev = self.routed[k - 1].len() - 1;
            while lo < prev {
                lo += 2;
            }
        }
        let hi = if self.side(s) == self.side(t) { 2 * self.n - 2 } else { 2 * self.n - 1 };
        self.pending[s] -= 1;
        self.pending[t] -= 1;
        let outer = core::mem::take(&mut self.path);
        let outer_on: Vec<usize> = outer.clone();
        for &x in &outer_on {
            self.on_path[x] = false;
        }
        self.on_path[s] = true;
        self.path.push(s);
        let mut len = lo;
        let mut found = false;
        while len <= hi {
            if self.extend(k, s, len)? {
                found = true;
                break;
            }
            len += 2;
        }
        self.path.pop();
        self.on_path[s] = false;
        for &x in &outer {
            self.on_path[x] = true;
        }
        self.path = outer;
        if !found {
            self.pending[s] += 1;
            self.pending[t] += 1;
        }
        Ok(found)
    }

    fn tick(&mut self) -> Result<(), Exceeded> {
        self.nodes += 1;
        if self.nodes > self.max_nodes || (self.nodes % 4096 == 0 && (self.out_of_time)()) {
            return Err(Exceeded);
        }
        Ok(())
    }

    fn fresh(&self, x: usize) -> bool {
        !self.terminal[x] && self.used_deg[x] == 0 && !self.on_path[x]
    }

    /// Extends the current path from `cur` by exactly `left` more edges to
    /// the target of demand `k`, then routes the remaining demands.
    fn extend(&mut self, k: usize, cur: usize, left: usize) -> Result<bool, Exceeded> {
        self.tick()?;
        let t = self.demands[k].1;
        if left == 1 {
            if self.side(cur) == self.side(t) || self.used[self.slot(cur, t)] {
                return Ok(false);
            }
            self.set_edge(cur, t, true);
            self.path.push(t);
            self.routed.push(self.path.clone());
            if self.route(k + 1)? {
                return Ok(true);
            }
            self.routed.pop();
            self.path.pop();
            self.set_edge(cur, t, false);
            return Ok(false);
        }
        let range = if self.side(cur) == Side::A { self.n..2 * self.n } else { 0..self.n };
        let mut tried_fresh = false;
        for w in range {
            if w == t || self.on_path[w] || self.used[self.slot(cur, w)] {
                continue;
            }
            // w must still reach t in left-1 steps and stay usable afterwards
            let rest = left - 1;
            let min_rest = if self.side(w) == self.side(t) { 2 } else { 1 };
            if rest < min_rest || self.n - self.used_deg[w] < self.pending[w] + 2 {
                continue;
            }
            if self.fresh(w) {
                if tried_fresh {
                    continue;
                }
                tried_fresh = true;
            }
            self.set_edge(cur, w, true);
            self.on_path[w] = true;
            self.path.push(w);
            if self.extend(k, w, rest)? {
                return Ok(true);
            }
            self.path.pop();
            self.on_path[w] = false;
            self.set_edge(cur, w, false);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::verify_realization;
    use crate::graph::VertexId as V;

    fn decide(n: u32, edges: &[(V, V, u32)]) -> EdpOutcome {
        let d = DemandGraph::from_edges(n, edges.iter().copied()).unwrap();
        let out = edp_decide(&d, &SearchBudget::default());
        if let EdpOutcome::Feasible(r) = &out {
            assert_eq!(verify_realization(&d, r), Ok(()));
        }
        out
    }

    #[test]
    fn empty_is_feasible() {
        assert_eq!(decide(2, &[]), EdpOutcome::Feasible(Realization::new()));
    }

    #[test]
    fn doubled_edge_on_two() {
        match decide(2, &[(V::a(1), V::b(1), 2)]) {
            EdpOutcome::Feasible(r) => {
                let mut lens: Vec<usize> = r.paths.values().map(|p| p.len() - 1).collect();
                lens.sort();
                assert_eq!(lens, [1, 3]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_bundles_of_n_minus_one_are_infeasible() {
        assert_eq!(decide(2, &[(V::a(1), V::a(2), 1), (V::b(1), V::b(2), 1)]), EdpOutcome::Infeasible);
        assert_eq!(decide(3, &[(V::a(1), V::a(2), 2), (V::b(1), V::b(2), 2)]), EdpOutcome::Infeasible);
        assert_eq!(decide(4, &[(V::a(1), V::a(2), 3), (V::b(1), V::b(2), 3)]), EdpOutcome::Infeasible);
    }

    #[test]
    fn doubled_perfect_matching_on_three_is_infeasible() {
        let edges: Vec<_> = (1..=3).map(|i| (V::a(i), V::b(i), 2)).collect();
        assert_eq!(decide(3, &edges), EdpOutcome::Infeasible);
    }

    #[test]
    fn triple_bundle_on_three() {
        assert!(decide(3, &[(V::a(1), V::b(1), 3)]).is_feasible());
        assert_eq!(decide(3, &[(V::a(1), V::b(1), 4)]), EdpOutcome::Infeasible);
    }

    #[test]
    fn monochromatic_edge_on_one_side() {
        assert!(decide(2, &[(V::a(1), V::a(2), 2)]).is_feasible());
        assert_eq!(decide(2, &[(V::a(1), V::a(2), 3)]), EdpOutcome::Infeasible);
    }

    #[test]
    fn budget_is_respected() {
        let d = DemandGraph::from_edges(9, [(V::a(1), V::b(1), 1)]).unwrap();
        assert_eq!(edp_decide(&d, &SearchBudget::default()), EdpOutcome::ScaleExceeded);
        let tiny = SearchBudget { max_nodes: 3, ..SearchBudget::default() };
        let d = DemandGraph::from_edges(3, [(V::a(1), V::a(2), 2), (V::b(1), V::b(2), 2)]).unwrap();
        assert_eq!(edp_decide(&d, &tiny), EdpOutcome::ScaleExceeded);
    }
}
