//! Large realizable subgraphs: the matching-partition approximation and an
//! exact enumeration for tiny instances.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{color_edges, greedy_color, shannon_color, EdgeColoring, Lists};
use crate::degree::{realize_deg1, realize_deg2, DegreeConditions, DegreeOptions, DegreeVariant};
use crate::edge::realize_edge;
use crate::error::SolveError;
use crate::graph::{DemandGraph, LabeledMultigraph, Part, Side};
use crate::oracle::{edp_decide, EdpOutcome, SearchBudget};
use crate::realization::Realization;
use crate::report::{Method, Outcome, SolveReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Partitioner {
    /// At most `⌊3Δ/2⌋` matchings; certifies `e(D_sub) ≥ 2t/(3Δ)·e(D)`.
    #[default]
    Shannon,
    /// At most `2Δ − 1` matchings; certifies only `t/(2Δ − 1)`.
    Greedy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MaxEdpResult {
    pub t: usize,
    /// Copies kept of each entry of the input, aligned with `D.edges()`.
    pub counts: Vec<u32>,
    pub subgraph: DemandGraph,
    /// `original_labels[l]` is the input label of subgraph label `l`.
    pub original_labels: Vec<u32>,
    /// Number of matchings the (capped) input was split into.
    pub classes: usize,
    /// Sizes of all matchings, non-increasing; the first `t` were kept.
    pub class_sizes: Vec<usize>,
    /// Edges dropped up front to bring every degree down to `n`.
    pub capped: usize,
    /// Realization of `subgraph`, in its own labels.
    pub realization: Option<Realization>,
    pub report: Option<SolveReport>,
    /// Why no realizer handled `subgraph`, if none did.
    pub failure: Option<SolveError>,
}

impl MaxEdpResult {
    pub fn kept(&self) -> usize {
        self.subgraph.edge_count()
    }

    /// Realization keyed by the input's labels.
    pub fn realization_in_input_labels(&self) -> Option<Realization> {
        let r = self.realization.as_ref()?;
        let mut out = Realization::new();
        for (&l, p) in &r.paths {
            out.insert(self.original_labels[l as usize], p.clone());
        }
        Some(out)
    }
}

/// Label offset of every entry of `d`.
fn offsets(d: &DemandGraph) -> Vec<u32> {
    let mut acc = 0;
    d.edges()
        .iter()
        .map(|e| {
            let o = acc;
            acc += e.multiplicity;
            o
        })
        .collect()
}

fn entry_of_label(d: &DemandGraph) -> Vec<usize> {
    let mut out = Vec::with_capacity(d.edge_count());
    for (i, e) in d.edges().iter().enumerate() {
        out.extend(core::iter::repeat(i).take(e.multiplicity as usize));
    }
    out
}

fn labels_for_counts(d: &DemandGraph, counts: &[u32]) -> Vec<u32> {
    offsets(d)
        .iter()
        .zip(counts)
        .flat_map(|(&o, &c)| o..o + c)
        .collect()
}

/// Keeps instances in label order while both endpoints stay below degree
/// `n`; returns the kept copy count per entry.
fn cap_degrees(d: &DemandGraph) -> Vec<u32> {
    let n = d.n();
    let mut deg = vec![0usize; 2 * n as usize];
    let mut counts = vec![0u32; d.edges().len()];
    for (i, e) in d.edges().iter().enumerate() {
        for _ in 0..e.multiplicity {
            let (du, dv) = (e.u.dense(n), e.v.dense(n));
            if deg[du] < n as usize && deg[dv] < n as usize {
                deg[du] += 1;
                deg[dv] += 1;
                counts[i] += 1;
            }
        }
    }
    counts
}

/// Splits the instances of `d` into matchings; returns the copy count per
/// entry for each matching, largest matchings first.
fn matching_partition(d: &DemandGraph, partitioner: Partitioner) -> Result<Vec<Vec<u32>>, SolveError> {
    let g = LabeledMultigraph::from_demand(d);
    let edges = color_edges(&g, Part::All);
    let coloring: EdgeColoring = match partitioner {
        Partitioner::Shannon => shannon_color(&edges),
        Partitioner::Greedy => {
            let k = (2 * g.max_degree()).saturating_sub(1).max(1) as u32;
            greedy_color(&edges, k, Lists::Full)?
        }
    };
    let entry = entry_of_label(d);
    let k = coloring.k() as usize;
    let mut classes = vec![vec![0u32; d.edges().len()]; k];
    for (id, c) in coloring.iter() {
        let (label, _, _) = g.edge(id).expect("live instance");
        classes[c as usize - 1][entry[label.id as usize]] += 1;
    }
    let size = |c: &Vec<u32>| c.iter().map(|&x| x as usize).sum::<usize>();
    // stable: equal sizes keep color order
    classes.sort_by_key(|c| core::cmp::Reverse(size(c)));
    Ok(classes)
}

/// A subgraph of `d` with every degree at most `t`.
///
/// Exact (maximum size) for demand graphs without monochromatic edges, by
/// max-flow; otherwise the union of the `t` largest Shannon matchings.
pub fn degree_bounded_subgraph(d: &DemandGraph, t: usize) -> DemandGraph {
    let (ea, _, eb) = d.part_counts();
    if ea + eb == 0 {
        return d.with_counts(&bipartite_b_matching(d, t));
    }
    let classes = matching_partition(d, Partitioner::Shannon).expect("shannon coloring cannot fail");
    let mut counts = vec![0u32; d.edges().len()];
    for c in classes.iter().take(t) {
        for (acc, x) in counts.iter_mut().zip(c) {
            *acc += x;
        }
    }
    d.with_counts(&counts)
}

/// Maximum crossing subgraph with degrees `≤ t`, as copy counts: source →
/// `a` (capacity `t`), `a → b` (capacity `μ(ab)`), `b` → sink (capacity
/// `t`).
fn bipartite_b_matching(d: &DemandGraph, t: usize) -> Vec<u32> {
    let n = d.n() as usize;
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut flow = Flow::new(2 * n + 2);
    for i in 0..n {
        flow.add_arc(source, i, t as u64);
        flow.add_arc(n + i, sink, t as u64);
    }
    let arcs: Vec<usize> = d
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = if e.u.side == Side::A { (e.u, e.v) } else { (e.v, e.u) };
            flow.add_arc(a.dense(d.n()), b.dense(d.n()), e.multiplicity as u64)
        })
        .collect();
    flow.max_flow(source, sink);
    arcs.iter().map(|&a| flow.flow_on(a) as u32).collect()
}

/// Dinic's algorithm on a small adjacency-list network.
struct Flow {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![0; nodes],
            next: vec![0; nodes],
        }
    }

    /// Returns the id of the forward arc; its reverse is `id ^ 1`.
    fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let id = self.to.len();
        self.head[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        id
    }

    fn flow_on(&self, arc: usize) -> u64 {
        self.cap[arc ^ 1]
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && self.level[y] < 0 {
                    self.level[y] = self.level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, x: usize, t: usize, limit: u64) -> u64 {
        if x == t {
            return limit;
        }
        while self.next[x] < self.head[x].len() {
            let a = self.head[x][self.next[x]];
            let y = self.to[a];
            if self.cap[a] > 0 && self.level[y] == self.level[x] + 1 {
                let pushed = self.dfs(y, t, limit.min(self.cap[a]));
                if pushed > 0 {
                    self.cap[a] -= pushed;
                    self.cap[a ^ 1] += pushed;
                    return pushed;
                }
            }
            self.next[x] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.next.iter_mut().for_each(|p| *p = 0);
            loop {
                let f = self.dfs(s, t, u64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }
}

/// Realizes `d` with the first applicable method: the degree realizers when
/// their conditions hold, the edge-count realizer when `e ≤ 2n − 3`, exact
/// search when the instance is tiny, and the degree realizer without its
/// condition as a last try.
fn realize_any(d: &DemandGraph) -> Result<(Realization, SolveReport), SolveError> {
    let n = d.n() as usize;
    if DegreeConditions::evaluate(d, DegreeVariant::Deg1).satisfied {
        return realize_deg1(d, DegreeOptions::default());
    }
    if DegreeConditions::evaluate(d, DegreeVariant::Deg2).satisfied {
        return realize_deg2(d, DegreeOptions::default());
    }
    if n >= 2 && d.edge_count() + 3 <= 2 * n && d.max_degree() <= n {
        return realize_edge(d);
    }
    if let EdpOutcome::Feasible(r) = edp_decide(d, &SearchBudget::default()) {
        let mut report = SolveReport::new(Method::Oracle, d.n(), d.edge_count(), d.max_degree());
        report.max_path_len = r.max_path_len();
        report.outcome = Outcome::Realized;
        return Ok((r, report));
    }
    realize_deg1(d, DegreeOptions { attempt_anyway: true })
}

/// Keeps the `t` largest matchings of a partition of `D` (after capping
/// degrees at `n`) and realizes them.
pub fn maxedp_approx(d: &DemandGraph, t: usize, partitioner: Partitioner) -> Result<MaxEdpResult, SolveError> {
    if t == 0 {
        return Err(SolveError::PreconditionViolation("t must be positive".into()));
    }
    let cap = cap_degrees(d);
    let capped_graph = d.with_counts(&cap);
    let capped = d.edge_count() - capped_graph.edge_count();
    // partition entries of the capped graph, then map back to d's entries
    let classes = matching_partition(&capped_graph, partitioner)?;
    let entry_map: Vec<usize> = capped_graph
        .edges()
        .iter()
        .map(|e| {
            d.edges()
                .iter()
                .position(|x| (x.u, x.v) == (e.u, e.v))
                .expect("capped entry comes from d")
        })
        .collect();
    let mut counts = vec![0u32; d.edges().len()];
    for c in classes.iter().take(t) {
        for (i, &x) in c.iter().enumerate() {
            counts[entry_map[i]] += x;
        }
    }
    let class_sizes: Vec<usize> = classes.iter().map(|c| c.iter().map(|&x| x as usize).sum()).collect();
    let subgraph = d.with_counts(&counts);
    let original_labels = labels_for_counts(d, &counts);
    let mut result = MaxEdpResult {
        t,
        counts,
        subgraph,
        original_labels,
        classes: classes.len(),
        class_sizes,
        capped,
        realization: None,
        report: None,
        failure: None,
    };
    match realize_any(&result.subgraph) {
        Ok((r, report)) => {
            result.realization = Some(r);
            result.report = Some(report);
        }
        Err(e) => result.failure = Some(e),
    }
    Ok(result)
}

/// A maximum realizable subgraph of `d`, with its realization, by testing
/// sub-multisets in order of decreasing size.
pub fn maxedp_exact(d: &DemandGraph, budget: &SearchBudget) -> Result<(DemandGraph, Realization), SolveError> {
    if d.n() > budget.max_n || d.edge_count() > budget.max_edges {
        return Err(SolveError::ScaleExceeded(format!(
            "n = {}, e = {} (caps n ≤ {}, e ≤ {})",
            d.n(),
            d.edge_count(),
            budget.max_n,
            budget.max_edges
        )));
    }
    let mult: Vec<u32> = d.edges().iter().map(|e| e.multiplicity).collect();
    for size in (0..=d.edge_count()).rev() {
        let mut counts = vec![0u32; mult.len()];
        let mut found = None;
        let mut exceeded = false;
        each_composition(&mult, size, 0, &mut counts, &mut |c| {
            let sub = d.with_counts(c);
            match edp_decide(&sub, budget) {
                EdpOutcome::Feasible(r) => {
                    found = Some((sub, r));
                    true
                }
                EdpOutcome::Infeasible => false,
                EdpOutcome::ScaleExceeded => {
                    exceeded = true;
                    true
                }
            }
        });
        if exceeded {
            return Err(SolveError::ScaleExceeded("oracle node budget".into()));
        }
        if let Some(f) = found {
            return Ok(f);
        }
    }
    unreachable!("the empty subgraph is realizable")
}

/// Calls `f` on every `counts ≤ mult` with the given sum, lexicographically
/// largest first, until `f` returns true.
fn each_composition(mult: &[u32], left: usize, i: usize, counts: &mut [u32], f: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    if i == mult.len() {
        return left == 0 && f(counts);
    }
    let rest: usize = mult[i + 1..].iter().map(|&m| m as usize).sum();
    let hi = (mult[i] as usize).min(left);
    let lo = left.saturating_sub(rest);
    for c in (lo..=hi).rev() {
        counts[i] = c as u32;
        if each_composition(mult, left - c, i + 1, counts, f) {
            return true;
        }
    }
    counts[i] = 0;
    false
}
