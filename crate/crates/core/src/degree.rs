//! Degree-bounded realizers.
//!
//! Both pipelines pad `D` to a regular graph, push everything off `B` and
//! make the crossing part simple by lifting the classes of a two-part
//! coloring to `a_1, a_2, …`, and finally lift the remaining `A`-edges to
//! `B` with a greedy list coloring whose lists avoid existing neighbors.
//! `deg1` first thins out `D[A]` by lifting an equitable coloring of it into
//! `A` as well; that costs one more hop but keeps `μ(D[A])` small.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{abb_coloring, color_edges, equitable_coloring, greedy_color, Color, EdgeColoring, Lists};
use crate::error::SolveError;
use crate::graph::{DemandGraph, LabeledMultigraph, Part, Side, VertexId};
use crate::realization::{extract_paths, verify_realization, Realization};
use crate::regular::regularize;
use crate::report::{Method, Outcome, SolveReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeVariant {
    Deg1,
    Deg2,
}

/// Evaluation of one of the two sufficient degree conditions.
///
/// The threshold is the rational `threshold_num / threshold_den`:
/// `(n − 7)/6` for `Deg1`, `(n − 2⌈e(D[A,B])/(n−1)⌉ − 5)/4` for `Deg2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeConditions {
    pub variant: DegreeVariant,
    pub n: u32,
    pub max_degree: usize,
    pub threshold_num: i64,
    pub threshold_den: i64,
    pub satisfied: bool,
    pub e_cross: usize,
    pub e_a: usize,
    pub e_b: usize,
}

impl DegreeConditions {
    pub fn evaluate(d: &DemandGraph, variant: DegreeVariant) -> Self {
        let n = d.n() as i64;
        let (e_a, e_cross, e_b) = d.part_counts();
        let delta = d.max_degree();
        let (num, den) = match variant {
            DegreeVariant::Deg1 => (n - 7, 6),
            DegreeVariant::Deg2 => {
                let q = if n > 1 {
                    (e_cross as i64 + n - 2) / (n - 1)
                } else if e_cross == 0 {
                    0
                } else {
                    // no finite threshold
                    i64::MAX / 8
                };
                (n - 2 * q - 5, 4)
            }
        };
        DegreeConditions {
            variant,
            n: d.n(),
            max_degree: delta,
            threshold_num: num,
            threshold_den: den,
            satisfied: den * delta as i64 <= num,
            e_cross,
            e_a,
            e_b,
        }
    }

    /// Largest integer `Δ` the condition admits (may be negative).
    pub fn max_admissible_degree(&self) -> i64 {
        self.threshold_num.div_euclid(self.threshold_den)
    }
}

impl fmt::Display for DegreeConditions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.variant {
            DegreeVariant::Deg1 => "deg1",
            DegreeVariant::Deg2 => "deg2",
        };
        write!(
            f,
            "{name}: Δ = {} {} {}/{} (e_A = {}, e_AB = {}, e_B = {})",
            self.max_degree,
            if self.satisfied { "≤" } else { ">" },
            self.threshold_num,
            self.threshold_den,
            self.e_a,
            self.e_cross,
            self.e_b
        )
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DegreeOptions {
    /// Run the pipeline even when the condition fails; the first empty list
    /// is then reported as a method failure.
    pub attempt_anyway: bool,
}

pub fn realize_deg1(d: &DemandGraph, opts: DegreeOptions) -> Result<(Realization, SolveReport), SolveError> {
    realize(d, DegreeVariant::Deg1, opts)
}

pub fn realize_deg2(d: &DemandGraph, opts: DegreeOptions) -> Result<(Realization, SolveReport), SolveError> {
    realize(d, DegreeVariant::Deg2, opts)
}

fn failure(stage: &'static str, e: SolveError) -> SolveError {
    match e {
        SolveError::MethodFailure { detail, .. } => SolveError::MethodFailure { stage, detail },
        SolveError::PreconditionViolation(detail) => SolveError::MethodFailure { stage, detail },
        other => other,
    }
}

fn internal_check(ok: bool, what: &str) -> Result<(), SolveError> {
    if ok {
        Ok(())
    } else {
        Err(SolveError::Internal(format!("stage invariant broken: {what}")))
    }
}

fn realize(d: &DemandGraph, variant: DegreeVariant, opts: DegreeOptions) -> Result<(Realization, SolveReport), SolveError> {
    let cond = DegreeConditions::evaluate(d, variant);
    if !cond.satisfied && !opts.attempt_anyway {
        return Err(SolveError::ConditionUnmet(cond));
    }
    let n = d.n();
    if d.max_degree() > n as usize {
        return Err(SolveError::PreconditionViolation(format!(
            "Δ = {} exceeds n = {n}",
            d.max_degree()
        )));
    }
    let method = match variant {
        DegreeVariant::Deg1 => Method::Deg1,
        DegreeVariant::Deg2 => Method::Deg2,
    };
    let mut report = SolveReport::new(method, n, d.edge_count(), d.max_degree());
    report.conditions = Some(cond);

    let mut g = regularize(d);
    report.synthetic_edges = g.instances().filter(|(_, l, _, _)| l.synthetic).count();

    if variant == DegreeVariant::Deg1 {
        let mono = color_edges(&g, Part::A);
        let c1 = equitable_coloring(&mono, n).map_err(|e| failure("coloring D[A]", e))?;
        let target = hubs(&g, &c1);
        for (id, c) in c1.iter() {
            g.lift(id, VertexId::a(target[c as usize]))?;
        }
        internal_check(g.max_multiplicity(Part::A) <= 2, "μ(D'[A]) ≤ 2")?;
    }

    let c2 = abb_coloring(&g).map_err(|e| failure("coloring D[A,B] ∪ D[B]", e))?;
    let target = hubs(&g, &c2);
    for (id, c) in c2.iter() {
        g.lift(id, VertexId::a(target[c as usize]))?;
    }
    internal_check(g.part_count(Part::B) == 0, "D[B] empty")?;
    internal_check(g.max_multiplicity(Part::Crossing) <= 1, "D[A,B] simple")?;
    if variant == DegreeVariant::Deg1 {
        internal_check(g.max_multiplicity(Part::A) <= 4, "μ(D''[A]) ≤ 4")?;
    }

    report.min_list_slack = lift_into_b(&mut g)?;

    internal_check(g.is_simple_bipartite(), "result is a subgraph of K_n,n")?;
    let mut r = extract_paths(&g, d)?;
    r.shorten();
    verify_realization(d, &r).map_err(|v| SolveError::Internal(format!("verifier rejected output: {v}")))?;
    report.lifts = g.lift_count();
    report.max_path_len = r.max_path_len();
    report.outcome = Outcome::Realized;
    Ok((r, report))
}

/// Which `A`-vertex each color class is lifted to. Any injective choice
/// works; this one greedily prefers a vertex the class already touches, so
/// that its edges there stay put.
fn hubs(g: &LabeledMultigraph, c: &EdgeColoring) -> Vec<u32> {
    let k = c.k() as usize;
    let n = g.n() as usize;
    let mut touch: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (id, col) in c.iter() {
        let (_, x, y) = g.edge(id).expect("colored instance is live");
        for v in [x, y] {
            if v.side == Side::A {
                *touch.entry((col as usize, v.index as usize - 1)).or_default() += 1;
            }
        }
    }
    let mut pairs: Vec<(usize, usize, usize)> = touch.into_iter().map(|((col, i), w)| (w, col, i)).collect();
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut target = vec![0u32; k + 1];
    let mut taken = vec![false; n];
    for (_, col, i) in pairs {
        if target[col] == 0 && !taken[i] {
            target[col] = i as u32 + 1;
            taken[i] = true;
        }
    }
    let mut free = (0..n).filter(|&i| !taken[i]);
    for t in target.iter_mut().skip(1) {
        if *t == 0 {
            *t = free.next().expect("at most n colors") as u32 + 1;
        }
    }
    target
}

/// Lifts every `A`-edge `a_i a_j` to some `b ∉ N(a_i) ∪ N(a_j)`, distinct
/// around each vertex, by greedy list coloring with the `B`-vertices as
/// colors. Returns the smallest `|L(e)| − (2Δ(D[A]) − 1)` seen, the margin
/// by which the list sizes exceed what greedy needs.
fn lift_into_b(g: &mut LabeledMultigraph) -> Result<Option<i64>, SolveError> {
    let n = g.n();
    let mono = color_edges(g, Part::A);
    if mono.is_empty() {
        return Ok(None);
    }
    let b_neighbors: Vec<Vec<Color>> = (1..=n)
        .map(|i| {
            g.neighbors_in(VertexId::a(i), Side::B)
                .into_iter()
                .map(|b| b.index)
                .collect()
        })
        .collect();
    let mut excluded: Vec<Vec<Color>> = Vec::with_capacity(mono.len());
    let mut a_deg = vec![0i64; n as usize];
    for e in &mono {
        a_deg[e.u] += 1;
        a_deg[e.v] += 1;
    }
    let need = 2 * a_deg.iter().copied().max().unwrap_or(0) - 1;
    let mut slack = i64::MAX;
    for e in &mono {
        let mut ex = b_neighbors[e.u].clone();
        ex.extend_from_slice(&b_neighbors[e.v]);
        ex.sort_unstable();
        ex.dedup();
        slack = slack.min(n as i64 - ex.len() as i64 - need);
        excluded.push(ex);
    }
    let c = greedy_color(
        &mono,
        n,
        Lists::Excluding {
            universe: n,
            excluded: &excluded,
        },
    )
    .map_err(|e| failure("list coloring D[A] into B", e))?;
    for (id, b) in c.iter() {
        g.lift(id, VertexId::b(b))?;
    }
    Ok(Some(slack))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId as V;

    fn graph(n: u32, edges: &[(V, V, u32)]) -> DemandGraph {
        DemandGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn deg1_matching_stays_direct() {
        let edges: Vec<_> = (1..=13).map(|i| (V::a(i), V::b(i), 1)).collect();
        let d = graph(13, &edges);
        let (r, report) = realize_deg1(&d, DegreeOptions::default()).unwrap();
        assert!(r.paths.values().all(|p| p.len() == 2));
        assert_eq!(report.outcome, Outcome::Realized);
    }

    #[test]
    fn deg1_single_monochromatic_edge() {
        let d = graph(13, &[(V::a(1), V::a(2), 1)]);
        let (r, _) = realize_deg1(&d, DegreeOptions::default()).unwrap();
        let len = r.paths[&0].len() - 1;
        assert!(len == 2 || len == 4, "length {len}");
    }

    #[test]
    fn deg1_threshold_arithmetic() {
        let d = graph(6, &[(V::a(1), V::b(1), 1)]);
        match realize_deg1(&d, DegreeOptions::default()) {
            Err(SolveError::ConditionUnmet(c)) => {
                assert!(!c.satisfied);
                assert_eq!((c.threshold_num, c.threshold_den), (-1, 6));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn deg2_b_edges_become_two_paths() {
        let d = graph(9, &[(V::b(1), V::b(2), 1), (V::b(3), V::b(4), 1)]);
        let (r, report) = realize_deg2(&d, DegreeOptions::default()).unwrap();
        for p in r.paths.values() {
            assert_eq!(p.len(), 3);
            assert_eq!(p[1].side, Side::A);
        }
        assert!(report.max_path_len <= 3);
    }

    #[test]
    fn deg2_threshold_arithmetic() {
        let d = graph(9, &[(V::a(1), V::b(1), 1)]);
        let c = DegreeConditions::evaluate(&d, DegreeVariant::Deg2);
        assert_eq!((c.threshold_num, c.threshold_den), (2, 4));
        assert!(!c.satisfied);
        assert!(matches!(
            realize_deg2(&d, DegreeOptions::default()),
            Err(SolveError::ConditionUnmet(_))
        ));
    }

    #[test]
    fn attempt_anyway_below_threshold() {
        // n = 8 is below the deg1 threshold but the instance is easy
        let d = graph(8, &[(V::a(1), V::b(1), 1)]);
        let opts = DegreeOptions { attempt_anyway: true };
        let (r, report) = realize_deg1(&d, opts).unwrap();
        assert_eq!(verify_realization(&d, &r), Ok(()));
        assert!(!report.conditions.unwrap().satisfied);
    }
}
