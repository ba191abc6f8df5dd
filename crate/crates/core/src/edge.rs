//! Inductive realizer for demand graphs with at most `2n − 3` edges and
//! `Δ ≤ n`.
//!
//! Each round pads the current instance to exactly `2n − 3` edges, resolves
//! one (or three) vertices per class, and removes them. Edges at a removed
//! vertex are simple crossing edges by then, so they are committed as base
//! edges; the rest is relabeled onto `K_{n−t,n−t}` and handled by the next
//! round. Instances with `n ≤ 3` are finished by exhaustive search, as is
//! any round of oracle size for which no step applies.
//!
//! Every step follows one of the cases below, but where the argument leaves
//! a choice (targets, which neighbor, which independent edge) the candidates
//! are tried in order on a copy and the first one whose result really has
//! `e' ≤ 2(n−t) − 3`, `Δ' ≤ n − t` and resolved removed vertices is kept.
//!
//! * three degree-`n` vertices `x, y, z` in one class: resolve them, then
//!   three formerly isolated vertices of the other class; remove all six.
//! * `u` of maximum degree has two crossing neighbors, or one and a
//!   same-class neighbor: resolve `u`, then a vertex `v` that received a lift
//!   of `uu'` for a heaviest same-class neighbor `u'`; remove `u, v`.
//! * `u` sees only one bundle `uu'`: resolve `u` and the far end `v'` of
//!   some other crossing edge; or, with no such edge, reroute one copy as
//!   `u b a u'` through two light vertices and remove `a, b`.
//! * `u` has only same-class edges: push `uu'` (and possibly one more
//!   edge) onto a vertex `b` and remove a resolved pair `a, b`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::SolveError;
use crate::graph::{DemandGraph, InstanceId, LabeledMultigraph, Lifted, Part, Side, VertexId};
use crate::oracle::{route_pairs, Search, SearchBudget};
use crate::realization::{extract_paths, verify_realization, Realization};
use crate::report::{Method, Outcome, SolveReport};

/// Rounds this small are routed exactly. Larger rounds of oracle size fall
/// back to the same search when no step applies: at `n = 4` a triangle of
/// bundles such as `a1a2 ×3, a1a3, a2a3` admits no single-pair reduction.
const BASE_N: u32 = 3;

/// Upper bound on trial applications within one round.
const MAX_TRIALS: usize = 20_000;

fn check_pre(d: &DemandGraph) -> Result<(), SolveError> {
    let n = d.n() as usize;
    if n < 2 {
        return Err(SolveError::PreconditionViolation(format!("n = {n} < 2")));
    }
    if d.edge_count() > 2 * n - 3 {
        return Err(SolveError::PreconditionViolation(format!(
            "e = {} exceeds 2n − 3 = {}",
            d.edge_count(),
            2 * n - 3
        )));
    }
    if d.max_degree() > n {
        return Err(SolveError::PreconditionViolation(format!(
            "Δ = {} exceeds n = {n}",
            d.max_degree()
        )));
    }
    Ok(())
}

/// Working graph of `d` padded with synthetic edges to exactly `2n − 3`
/// edges, keeping `Δ ≤ n`.
pub fn pad_to_exact(d: &DemandGraph) -> Result<LabeledMultigraph, SolveError> {
    check_pre(d)?;
    let mut g = LabeledMultigraph::from_demand(d);
    pad(&mut g);
    Ok(g)
}

/// Joins the two lowest-degree vertices below `n` until `e = 2n − 3`. Two
/// such vertices always exist: otherwise the degree sum would be at least
/// `(2n − 1)·n > 4n − 6`.
fn pad(g: &mut LabeledMultigraph) {
    let n = g.n() as usize;
    let target = (2 * n).saturating_sub(3);
    let mut open: BTreeSet<(usize, usize)> = (0..2 * n)
        .map(|i| (g.degree_dense(i), i))
        .filter(|&(deg, _)| deg < n)
        .collect();
    while g.edge_count() < target {
        let (du, u) = open.pop_first().expect("two vertices below n");
        let (dv, v) = open.pop_first().expect("two vertices below n");
        g.add_synthetic(g.vertex(u), g.vertex(v)).expect("distinct vertices");
        if du + 1 < n {
            open.insert((du + 1, u));
        }
        if dv + 1 < n {
            open.insert((dv + 1, v));
        }
    }
}

/// One round of the induction: the current instance and where its vertices
/// live in the original graph.
struct InductionFrame {
    g: LabeledMultigraph,
    map: Vec<VertexId>,
}

pub fn realize_edge(d: &DemandGraph) -> Result<(Realization, SolveReport), SolveError> {
    check_pre(d)?;
    let n0 = d.n();
    let mut report = SolveReport::new(Method::Edge, n0, d.edge_count(), d.max_degree());
    let mut out = LabeledMultigraph::new(n0);
    let mut frame = InductionFrame {
        g: LabeledMultigraph::from_demand(d),
        map: (0..2 * n0 as usize).map(|i| VertexId::from_dense(i, n0)).collect(),
    };
    loop {
        let n = frame.g.n();
        let before = frame.g.edge_count();
        pad(&mut frame.g);
        report.synthetic_edges += frame.g.edge_count() - before;
        if n <= BASE_N {
            report.lifts += base_case(&frame, &mut out)?;
            break;
        }
        let (g, removed) = match step(&frame.g) {
            Ok(plan) => plan,
            Err(e) if SearchBudget::default().max_n < n => return Err(e),
            Err(_) => {
                report.lifts += base_case(&frame, &mut out)?;
                break;
            }
        };
        report.lifts += g.lift_count();
        frame = split(&g, &removed, &frame.map, &mut out)?;
    }
    let r = extract_paths(&out, d)?;
    verify_realization(d, &r).map_err(|v| SolveError::Internal(format!("verifier rejected output: {v}")))?;
    report.max_path_len = r.max_path_len();
    report.outcome = Outcome::Realized;
    Ok((r, report))
}

/// Routes a small instance exactly; returns the number of lifts
/// this amounts to.
fn base_case(frame: &InductionFrame, out: &mut LabeledMultigraph) -> Result<usize, SolveError> {
    let g = &frame.g;
    let inst: Vec<_> = g.instances().collect();
    let pairs: Vec<(VertexId, VertexId)> = inst.iter().map(|&(_, _, u, v)| (u, v)).collect();
    let paths = match route_pairs(g.n(), &pairs, &SearchBudget::default(), &mut || false) {
        Search::Found(p) => p,
        other => {
            return Err(SolveError::Internal(format!(
                "base case n = {} with {} edges not routable: {other:?}",
                g.n(),
                pairs.len()
            )))
        }
    };
    let mut lifts = 0;
    for ((_, label, _, _), path) in inst.iter().zip(&paths) {
        lifts += path.len() - 2;
        for w in path.windows(2) {
            out.add_edge(*label, frame.map[w[0].dense(g.n())], frame.map[w[1].dense(g.n())])?;
        }
    }
    Ok(lifts)
}

/// Commits the edges at `removed` to `out` and relabels the rest onto the
/// smaller instance.
fn split(
    g: &LabeledMultigraph,
    removed: &[VertexId],
    map: &[VertexId],
    out: &mut LabeledMultigraph,
) -> Result<InductionFrame, SolveError> {
    let n = g.n();
    let t = (removed.len() / 2) as u32;
    let n2 = n - t;
    let mut new_of: Vec<Option<VertexId>> = vec![None; 2 * n as usize];
    let mut new_map = vec![VertexId::a(1); 2 * n2 as usize];
    for side in [Side::A, Side::B] {
        let mut k = 0;
        for i in 1..=n {
            let v = VertexId::new(side, i);
            if !removed.contains(&v) {
                k += 1;
                let nv = VertexId::new(side, k);
                new_of[v.dense(n)] = Some(nv);
                new_map[nv.dense(n2)] = map[v.dense(n)];
            }
        }
    }
    let mut sub = LabeledMultigraph::new(n2);
    sub.reserve_synthetic(g.next_synthetic());
    for (_, label, u, v) in g.instances() {
        match (new_of[u.dense(n)], new_of[v.dense(n)]) {
            (Some(x), Some(y)) => {
                sub.add_edge(label, x, y)?;
            }
            _ => {
                out.add_edge(label, map[u.dense(n)], map[v.dense(n)])?;
            }
        }
    }
    Ok(InductionFrame { g: sub, map: new_map })
}

type Plan = (LabeledMultigraph, Vec<VertexId>);

fn class(n: u32, side: Side) -> impl Iterator<Item = VertexId> {
    (1..=n).map(move |i| VertexId::new(side, i))
}

fn by_index(g: &LabeledMultigraph, side: Side, exclude: &[VertexId]) -> Vec<VertexId> {
    class(g.n(), side).filter(|v| !exclude.contains(v)).collect()
}

fn by_degree(g: &LabeledMultigraph, side: Side, exclude: &[VertexId]) -> Vec<VertexId> {
    let mut v = by_index(g, side, exclude);
    v.sort_by_key(|&x| (g.degree(x), x.index));
    v
}

fn resolve(h: &mut LabeledMultigraph, v: VertexId, targets: &[VertexId]) -> Option<Vec<(InstanceId, VertexId)>> {
    h.resolve(v, targets).ok()
}

fn resolve_by_index(h: &mut LabeledMultigraph, v: VertexId, exclude: &[VertexId]) -> Option<()> {
    let targets = by_index(h, v.side.opposite(), exclude);
    resolve(h, v, &targets).map(|_| ())
}

fn resolve_by_degree(h: &mut LabeledMultigraph, v: VertexId, exclude: &[VertexId]) -> Option<()> {
    let targets = by_degree(h, v.side.opposite(), exclude);
    resolve(h, v, &targets).map(|_| ())
}

/// Lowest-id instance joining `x` and `y`.
fn copy_of(h: &LabeledMultigraph, x: VertexId, y: VertexId) -> Option<InstanceId> {
    h.incident(x)
        .iter()
        .copied()
        .filter(|&id| h.other_end(id, x) == y)
        .min()
}

/// Whether removing `removed` (resolved, `t` per class) leaves an instance
/// the induction can continue on.
fn acceptable(g: &LabeledMultigraph, removed: &[VertexId]) -> bool {
    let n = g.n() as usize;
    let t = removed.len() / 2;
    let per_side = removed.iter().filter(|v| v.side == Side::A).count();
    let distinct: BTreeSet<VertexId> = removed.iter().copied().collect();
    if per_side != t || distinct.len() != removed.len() || t == 0 || t >= n {
        return false;
    }
    if !removed.iter().all(|&v| g.is_resolved(v)) {
        return false;
    }
    let mut deg = vec![0usize; 2 * n];
    let mut e = 0;
    for (_, _, x, y) in g.instances() {
        if !distinct.contains(&x) && !distinct.contains(&y) {
            e += 1;
            deg[x.dense(g.n())] += 1;
            deg[y.dense(g.n())] += 1;
        }
    }
    let n2 = n - t;
    e + 3 <= 2 * n2 && deg.into_iter().max().unwrap_or(0) <= n2
}

struct Stepper<'a> {
    g: &'a LabeledMultigraph,
    trials: usize,
}

impl Stepper<'_> {
    fn attempt(
        &mut self,
        base: &LabeledMultigraph,
        f: impl FnOnce(&mut LabeledMultigraph) -> Option<Vec<VertexId>>,
    ) -> Option<Plan> {
        if self.trials >= MAX_TRIALS {
            return None;
        }
        self.trials += 1;
        let mut h = base.clone();
        let removed = f(&mut h)?;
        acceptable(&h, &removed).then_some((h, removed))
    }

    fn exhausted(&self) -> bool {
        self.trials >= MAX_TRIALS
    }
}

fn step(g: &LabeledMultigraph) -> Result<Plan, SolveError> {
    let n = g.n() as usize;
    let mut st = Stepper { g, trials: 0 };
    for side in [Side::A, Side::B] {
        let full: Vec<VertexId> = class(g.n(), side).filter(|&v| g.degree(v) == n).collect();
        if full.len() >= 3 {
            if let Some(p) = triple(&mut st, &full) {
                return Ok(p);
            }
        }
    }
    let delta = g.max_degree();
    let tops: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == delta).collect();
    for &u in &tops {
        let s = u.side;
        let o = s.opposite();
        let gamma = g.gamma(u, o);
        let same = g.neighbors_in(u, s);
        let plan = if gamma >= 2 || (gamma == 1 && !same.is_empty()) {
            case_one(&mut st, u)
        } else if gamma == 1 {
            case_two(&mut st, u)
        } else {
            case_three(&mut st, u)
        };
        if plan.is_some() {
            return Ok(plan.unwrap());
        }
    }
    let mut edges = alloc::string::String::new();
    for (_, _, x, y) in g.instances() {
        edges.push_str(&format!(" {x}{y}"));
    }
    Err(SolveError::Internal(format!(
        "no reduction step found for n = {n} after {} trials; edges:{edges}",
        st.trials
    )))
}

/// Three vertices of degree `n` in one class.
fn triple(st: &mut Stepper<'_>, full: &[VertexId]) -> Option<Plan> {
    let g = st.g;
    let o = full[0].side.opposite();
    let isolated: Vec<VertexId> = class(g.n(), o).filter(|&v| g.degree(v) == 0).collect();
    if isolated.len() < 3 {
        return None;
    }
    let [p, q, r] = [full[0], full[1], full[2]];
    let mut orders = vec![[p, q, r], [p, r, q], [q, p, r], [q, r, p], [r, p, q], [r, q, p]];
    // the first vertex should carry the heaviest bundles to the other two
    orders.sort_by_key(|&[x, y, z]| core::cmp::Reverse(g.multiplicity(x, y) + g.multiplicity(x, z)));
    for [x, y, z] in orders {
        let mut g1 = g.clone();
        if [x, y, z].iter().any(|&v| resolve_by_index(&mut g1, v, &[]).is_none()) {
            continue;
        }
        let mut pool = isolated.clone();
        pool.sort_by_key(|&v| (g1.degree(v), v.index));
        for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                for k in j + 1..pool.len() {
                    let abc = [pool[i], pool[j], pool[k]];
                    let plan = st.attempt(&g1, |h| {
                        for &w in &abc {
                            resolve_by_degree(h, w, &[x, y, z])?;
                        }
                        Some(vec![x, y, z, abc[0], abc[1], abc[2]])
                    });
                    if plan.is_some() {
                        return plan;
                    }
                    if st.exhausted() {
                        return None;
                    }
                }
            }
        }
    }
    None
}

/// `u` has at least two crossing neighbors, or one and a same-class one.
fn case_one(st: &mut Stepper<'_>, u: VertexId) -> Option<Plan> {
    let g = st.g;
    let s = u.side;
    let o = s.opposite();
    let mut heavy = g.neighbors_in(u, s);
    heavy.sort_by_key(|&w| (core::cmp::Reverse(g.degree(w)), w.index));
    let target_orders = [by_index(g, o, &[]), by_degree(g, o, &[])];
    for targets in &target_orders {
        let mut g1 = g.clone();
        let bundle_ids: Vec<(VertexId, Vec<InstanceId>)> = heavy
            .iter()
            .map(|&w| {
                let ids = g.incident(u).iter().copied().filter(|&id| g.other_end(id, u) == w).collect();
                (w, ids)
            })
            .collect();
        let Some(lifted) = resolve(&mut g1, u, targets) else {
            continue;
        };
        let mut vs: Vec<VertexId> = Vec::new();
        for (_, ids) in &bundle_ids {
            for &(id, t) in &lifted {
                if ids.contains(&id) && !vs.contains(&t) {
                    vs.push(t);
                }
            }
        }
        for w in g1.neighbors_in(u, o) {
            if !vs.contains(&w) {
                vs.push(w);
            }
        }
        for &v in &vs {
            let plan = st.attempt(&g1, |h| {
                resolve_by_degree(h, v, &[])?;
                Some(vec![u, v])
            });
            if plan.is_some() || st.exhausted() {
                return plan;
            }
        }
    }
    None
}

/// All edges at `u` form one crossing bundle `uu'`.
fn case_two(st: &mut Stepper<'_>, u: VertexId) -> Option<Plan> {
    let g = st.g;
    let s = u.side;
    let o = s.opposite();
    let u2 = g.neighbors_in(u, o)[0];
    let mut far: Vec<VertexId> = Vec::new();
    for (_, x, y) in g.restriction(Part::Crossing) {
        let (vs, vo) = if x.side == s { (x, y) } else { (y, x) };
        if vs != u && !far.contains(&vo) {
            far.push(vo);
        }
    }
    if !far.is_empty() {
        for targets in [by_index(g, o, &[]), by_degree(g, o, &[])] {
            let mut g1 = g.clone();
            if resolve(&mut g1, u, &targets).is_none() {
                continue;
            }
            for &v2 in &far {
                let plan = st.attempt(&g1, |h| {
                    resolve_by_index(h, v2, &[u])?;
                    Some(vec![u, v2])
                });
                if plan.is_some() || st.exhausted() {
                    return plan;
                }
            }
        }
    }
    // reroute one copy of uu' as u b a u'
    let same_class: Vec<(InstanceId, VertexId, VertexId)> = g
        .instances()
        .filter(|&(_, _, x, y)| x.side == y.side)
        .map(|(id, _, x, y)| (id, x, y))
        .collect();
    for a in by_degree(g, s, &[u]) {
        for b in by_degree(g, o, &[u2]) {
            for &(eid, x, y) in &same_class {
                let target = if x.side == s {
                    if x == a || y == a {
                        continue;
                    }
                    b
                } else {
                    if x == b || y == b {
                        continue;
                    }
                    a
                };
                let plan = st.attempt(g, |h| {
                    h.lift(eid, target).ok()?;
                    let copy = copy_of(h, u, u2)?;
                    let piece = match h.lift(copy, b).ok()? {
                        Lifted::Split(p1, p2) => {
                            if h.edge(p1)?.1 == u2 || h.edge(p1)?.2 == u2 {
                                p1
                            } else {
                                p2
                            }
                        }
                        Lifted::Unchanged(_) => return None,
                    };
                    h.lift(piece, a).ok()?;
                    resolve_by_index(h, a, &[])?;
                    resolve_by_index(h, b, &[])?;
                    Some(vec![a, b])
                });
                if plan.is_some() || st.exhausted() {
                    return plan;
                }
            }
        }
    }
    None
}

/// Every edge at `u` stays inside `u`'s class.
fn case_three(st: &mut Stepper<'_>, u: VertexId) -> Option<Plan> {
    let g = st.g;
    let s = u.side;
    let o = s.opposite();
    let mut partners = g.neighbors_in(u, s);
    partners.sort_by_key(|&w| (core::cmp::Reverse(g.degree(w)), w.index));
    for &u2 in &partners {
        let mut independent: Vec<(InstanceId, VertexId, VertexId)> = Vec::new();
        let mut seen_pairs: Vec<(VertexId, VertexId)> = Vec::new();
        for (id, _, x, y) in g.instances() {
            let key = if x <= y { (x, y) } else { (y, x) };
            if ![x, y].iter().any(|w| *w == u || *w == u2) && !seen_pairs.contains(&key) {
                seen_pairs.push(key);
                independent.push((id, x, y));
            }
        }
        let plan = if independent.is_empty() {
            no_independent_edge(st, u, u2)
        } else {
            with_independent_edge(st, u, u2, &independent)
        };
        if plan.is_some() || st.exhausted() {
            return plan;
        }
    }
    let _ = o;
    None
}

fn push_and_resolve(
    h: &mut LabeledMultigraph,
    lifts: &[(VertexId, VertexId, VertexId)],
    a: VertexId,
    b: VertexId,
    b_first: bool,
) -> Option<Vec<VertexId>> {
    for &(x, y, z) in lifts {
        let id = copy_of(h, x, y)?;
        h.lift(id, z).ok()?;
    }
    let order = if b_first { [b, a] } else { [a, b] };
    for v in order {
        resolve_by_index(h, v, &[])?;
    }
    Some(vec![a, b])
}

fn with_independent_edge(
    st: &mut Stepper<'_>,
    u: VertexId,
    u2: VertexId,
    independent: &[(InstanceId, VertexId, VertexId)],
) -> Option<Plan> {
    let g = st.g;
    let s = u.side;
    let o = s.opposite();
    for &(_, x, y) in independent {
        if x.side != y.side {
            let (a, b) = if x.side == s { (x, y) } else { (y, x) };
            for b_first in [false, true] {
                let plan = st.attempt(g, |h| push_and_resolve(h, &[(u, u2, b)], a, b, b_first));
                if plan.is_some() || st.exhausted() {
                    return plan;
                }
            }
            continue;
        }
        // an endpoint of the pushed edge may serve as well once it is light
        let (a_pool, b_pool) = if x.side == s {
            let mut a = by_degree(g, s, &[u, u2, x, y]);
            a.extend([x, y]);
            (a, by_degree(g, o, &[]))
        } else {
            let mut b = by_degree(g, o, &[x, y]);
            b.extend([x, y]);
            (by_degree(g, s, &[u, u2]), b)
        };
        for &a in &a_pool {
            for &b in &b_pool {
                let onto = if x.side == s { b } else { a };
                let plan = st.attempt(g, |h| push_and_resolve(h, &[(u, u2, b), (x, y, onto)], a, b, false));
                if plan.is_some() || st.exhausted() {
                    return plan;
                }
            }
        }
    }
    None
}

/// Every edge meets `u` or `u'`: take `e = ux`, `f = u'y` independent and
/// push both onto one vertex `b`.
fn no_independent_edge(st: &mut Stepper<'_>, u: VertexId, u2: VertexId) -> Option<Plan> {
    let g = st.g;
    let s = u.side;
    let o = s.opposite();
    let xs: Vec<VertexId> = g.neighbors(u).into_iter().filter(|&w| w != u2).collect();
    let ys: Vec<VertexId> = g.neighbors(u2).into_iter().filter(|&w| w != u).collect();
    for &x in &xs {
        for &y in &ys {
            if x == y {
                continue;
            }
            let mut b_pool = by_degree(g, o, &[x, y]);
            b_pool.extend([x, y].into_iter().filter(|w| w.side == o));
            let a_pool = by_degree(g, s, &[u, u2, x, y]);
            for &b in &b_pool {
                for &a in &a_pool {
                    let plan = st.attempt(g, |h| push_and_resolve(h, &[(u, x, b), (u2, y, b)], a, b, false));
                    if plan.is_some() || st.exhausted() {
                        return plan;
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId as V;
    use crate::oracle::{edp_decide, EdpOutcome};

    fn graph(n: u32, edges: &[(V, V, u32)]) -> DemandGraph {
        DemandGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn pad_counts() {
        let d = graph(4, &[(V::a(1), V::b(1), 1)]);
        let g = pad_to_exact(&d).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.instances().filter(|(_, l, _, _)| l.synthetic).count(), 4);
        assert!(g.max_degree() <= 4);

        let g = pad_to_exact(&graph(2, &[])).unwrap();
        assert_eq!(g.edge_count(), 1);

        let full = graph(3, &[(V::a(1), V::b(1), 3)]);
        assert_eq!(pad_to_exact(&full).unwrap().edge_count(), 3);
    }

    #[test]
    fn monochromatic_edge_on_two() {
        let d = graph(2, &[(V::a(1), V::a(2), 1)]);
        let (r, _) = realize_edge(&d).unwrap();
        let p = &r.paths[&0];
        assert_eq!(p.len(), 3);
        assert_eq!(p[1].side, Side::B);
    }

    #[test]
    fn triple_bundle_on_three() {
        let d = graph(3, &[(V::a(1), V::b(1), 3)]);
        let (r, report) = realize_edge(&d).unwrap();
        assert_eq!(verify_realization(&d, &r), Ok(()));
        assert_eq!(report.outcome, Outcome::Realized);
        let mut lens: Vec<usize> = r.paths.values().map(|p| p.len() - 1).collect();
        lens.sort();
        assert_eq!(lens, [1, 3, 3]);
    }

    #[test]
    fn rejects_out_of_range() {
        let d = graph(3, &[(V::a(1), V::a(2), 2), (V::b(1), V::b(2), 2)]);
        assert!(matches!(realize_edge(&d), Err(SolveError::PreconditionViolation(_))));
        assert_eq!(edp_decide(&d, &SearchBudget::default()), EdpOutcome::Infeasible);
        let d = graph(3, &[(V::a(1), V::b(1), 2), (V::a(1), V::b(2), 2)]);
        assert!(matches!(realize_edge(&d), Err(SolveError::PreconditionViolation(_))));
    }

    #[test]
    fn larger_mixed_instance() {
        let d = graph(
            8,
            &[
                (V::a(1), V::a(2), 4),
                (V::a(1), V::b(3), 2),
                (V::b(1), V::b(2), 3),
                (V::a(3), V::b(4), 1),
                (V::b(5), V::b(6), 2),
                (V::a(4), V::a(5), 1),
            ],
        );
        let (r, _) = realize_edge(&d).unwrap();
        assert_eq!(verify_realization(&d, &r), Ok(()));
    }

    #[test]
    fn three_full_vertices_in_one_class() {
        // n = 6, e = 9: a1, a2, a3 each of degree 6
        let d = graph(6, &[(V::a(1), V::a(2), 3), (V::a(2), V::a(3), 3), (V::a(1), V::a(3), 3)]);
        let (r, _) = realize_edge(&d).unwrap();
        assert_eq!(verify_realization(&d, &r), Ok(()));
    }
}
