//! Reading paths back from labels, and checking realizations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::SolveError;
use crate::graph::{DemandGraph, LabeledMultigraph, VertexId};

/// One path per demand-edge label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Realization {
    pub paths: BTreeMap<u32, Vec<VertexId>>,
}

impl Realization {
    pub fn new() -> Self {
        Realization::default()
    }

    pub fn insert(&mut self, label: u32, path: Vec<VertexId>) {
        self.paths.insert(label, path);
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Replaces detours by base edges no path uses, until none is left.
    /// Stays a valid realization and never lengthens a path.
    pub fn shorten(&mut self) {
        let key = |x: VertexId, y: VertexId| if x <= y { (x, y) } else { (y, x) };
        let mut used: BTreeSet<(VertexId, VertexId)> = self
            .paths
            .values()
            .flat_map(|p| p.windows(2).map(|w| key(w[0], w[1])))
            .collect();
        for p in self.paths.values_mut() {
            let mut i = 0;
            while i + 2 < p.len() {
                let far = (i + 3..p.len())
                    .rev()
                    .find(|&j| p[j].side != p[i].side && !used.contains(&key(p[i], p[j])));
                if let Some(j) = far {
                    for w in p[i..=j].windows(2) {
                        used.remove(&key(w[0], w[1]));
                    }
                    used.insert(key(p[i], p[j]));
                    p.drain(i + 1..j);
                }
                i += 1;
            }
        }
    }

    /// Length in edges of the longest path.
    pub fn max_path_len(&self) -> usize {
        self.paths
            .values()
            .map(|p| p.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    /// Total number of base edges used.
    pub fn total_len(&self) -> usize {
        self.paths.values().map(|p| p.len().saturating_sub(1)).sum()
    }
}

/// First failed condition found by [`verify_realization`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// (i) a demand label without a path.
    MissingPath { label: u32 },
    /// (i) a path whose label is not a demand label.
    UnknownLabel { label: u32 },
    /// (ii)
    WrongEndpoints {
        label: u32,
        expected: (VertexId, VertexId),
        found: (VertexId, VertexId),
    },
    /// (iii) consecutive vertices on the same side (or out of range).
    NotAlternating { label: u32, u: VertexId, v: VertexId },
    /// (iv) a base edge used twice.
    EdgeReused { u: VertexId, v: VertexId, labels: (u32, u32) },
    /// (v)
    RepeatedVertex { label: u32, vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingPath { label } => write!(f, "(i) no path for label {label}"),
            Violation::UnknownLabel { label } => write!(f, "(i) path for unknown label {label}"),
            Violation::WrongEndpoints { label, expected, found } => write!(
                f,
                "(ii) label {label} joins {}-{} but demand is {}-{}",
                found.0, found.1, expected.0, expected.1
            ),
            Violation::NotAlternating { label, u, v } => {
                write!(f, "(iii) label {label} uses {u}-{v}, not an edge of K_n,n")
            }
            Violation::EdgeReused { u, v, labels } => write!(
                f,
                "(iv) base edge {u}-{v} used by labels {} and {}",
                labels.0, labels.1
            ),
            Violation::RepeatedVertex { label, vertex } => {
                write!(f, "(v) label {label} visits {vertex} twice")
            }
        }
    }
}

/// Checks that `r` realizes `d` in `K_{n,n}`. Total; never panics.
pub fn verify_realization(d: &DemandGraph, r: &Realization) -> Result<(), Violation> {
    let n = d.n();
    let demands = d.instances();
    let known: BTreeSet<u32> = demands.iter().map(|(l, _, _)| l.id).collect();
    for (label, _, _) in &demands {
        if !r.paths.contains_key(&label.id) {
            return Err(Violation::MissingPath { label: label.id });
        }
    }
    if let Some(&extra) = r.paths.keys().find(|l| !known.contains(l)) {
        return Err(Violation::UnknownLabel { label: extra });
    }
    let mut used: BTreeMap<(VertexId, VertexId), u32> = BTreeMap::new();
    for (label, s, t) in demands {
        let id = label.id;
        let path = &r.paths[&id];
        let (first, last) = match (path.first(), path.last()) {
            (Some(&f), Some(&l)) if path.len() >= 2 => (f, l),
            (Some(&f), _) => {
                return Err(Violation::WrongEndpoints {
                    label: id,
                    expected: (s, t),
                    found: (f, f),
                })
            }
            _ => {
                return Err(Violation::WrongEndpoints {
                    label: id,
                    expected: (s, t),
                    found: (s, s),
                })
            }
        };
        if !((first == s && last == t) || (first == t && last == s)) {
            return Err(Violation::WrongEndpoints {
                label: id,
                expected: (s, t),
                found: (first, last),
            });
        }
        for w in path.windows(2) {
            let (u, v) = (w[0], w[1]);
            if u.side == v.side || !u.in_range(n) || !v.in_range(n) {
                return Err(Violation::NotAlternating { label: id, u, v });
            }
        }
        let mut seen = BTreeSet::new();
        for &x in path {
            if !seen.insert(x) {
                return Err(Violation::RepeatedVertex { label: id, vertex: x });
            }
        }
        for w in path.windows(2) {
            let key = if w[0] <= w[1] { (w[0], w[1]) } else { (w[1], w[0]) };
            if let Some(&other) = used.get(&key) {
                return Err(Violation::EdgeReused {
                    u: key.0,
                    v: key.1,
                    labels: (other, id),
                });
            }
            used.insert(key, id);
        }
    }
    Ok(())
}

/// Assembles, for every non-synthetic label of `d`, the walk formed by the
/// label's instances in `g` and prunes it to a simple path.
///
/// `g` must be a simple subgraph of `K_{n,n}`.
pub fn extract_paths(g: &LabeledMultigraph, d: &DemandGraph) -> Result<Realization, SolveError> {
    if !g.is_simple_bipartite() {
        return Err(SolveError::Internal(
            "extract_paths needs a simple bipartite working graph".into(),
        ));
    }
    let mut by_label: BTreeMap<u32, Vec<(VertexId, VertexId)>> = BTreeMap::new();
    for (_, label, u, v) in g.instances() {
        if !label.synthetic {
            by_label.entry(label.id).or_default().push((u, v));
        }
    }
    let mut r = Realization::new();
    for (label, s, t) in d.instances() {
        let edges = by_label.get(&label.id).map(Vec::as_slice).unwrap_or(&[]);
        let path = trail_to_path(edges, s, t).ok_or_else(|| {
            SolveError::Internal(format!(
                "label {} does not form a walk {s}-{t}",
                label.id
            ))
        })?;
        r.insert(label.id, path);
    }
    Ok(r)
}

/// Follows unused edges from `s` until `t` is reached, cutting out every
/// closed sub-walk as soon as a vertex repeats.
///
/// When the edge set is a walk from `s` to `t`, every vertex other than `t`
/// still has an unused edge whenever the trail stands on it, so the trail
/// cannot get stuck before `t`.
fn trail_to_path(edges: &[(VertexId, VertexId)], s: VertexId, t: VertexId) -> Option<Vec<VertexId>> {
    if s == t {
        return None;
    }
    let mut used = alloc::vec![false; edges.len()];
    let mut path = alloc::vec![s];
    let mut position: BTreeMap<VertexId, usize> = BTreeMap::new();
    position.insert(s, 0);
    let mut cur = s;
    while cur != t {
        let (i, next) = edges.iter().enumerate().find_map(|(i, &(u, v))| {
            if used[i] {
                None
            } else if u == cur {
                Some((i, v))
            } else if v == cur {
                Some((i, u))
            } else {
                None
            }
        })?;
        used[i] = true;
        match position.get(&next) {
            Some(&p) => {
                for x in path.drain(p + 1..) {
                    position.remove(&x);
                }
            }
            None => {
                position.insert(next, path.len());
                path.push(next);
            }
        }
        cur = next;
    }
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeLabel;
    use alloc::vec;

    fn a(i: u32) -> VertexId {
        VertexId::a(i)
    }
    fn b(i: u32) -> VertexId {
        VertexId::b(i)
    }

    fn labeled(n: u32, edges: &[(VertexId, VertexId)]) -> LabeledMultigraph {
        let mut g = LabeledMultigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(EdgeLabel::demand(0), u, v).unwrap();
        }
        g
    }

    #[test]
    fn extracts_unique_walk() {
        let d = DemandGraph::from_edges(3, [(a(1), b(1), 1)]).unwrap();
        let g = labeled(3, &[(a(1), b(2)), (b(2), a(3)), (a(3), b(1))]);
        let r = extract_paths(&g, &d).unwrap();
        assert_eq!(r.paths[&0], vec![a(1), b(2), a(3), b(1)]);
        assert_eq!(verify_realization(&d, &r), Ok(()));
    }

    #[test]
    fn extracts_identity_path() {
        let d = DemandGraph::from_edges(3, [(a(1), b(1), 1)]).unwrap();
        let g = labeled(3, &[(a(1), b(1))]);
        assert_eq!(extract_paths(&g, &d).unwrap().paths[&0], vec![a(1), b(1)]);
    }

    #[test]
    fn prunes_cycle_through_source() {
        let d = DemandGraph::from_edges(3, [(a(1), b(3), 1)]).unwrap();
        let g = labeled(
            3,
            &[(a(1), b(1)), (b(1), a(2)), (a(2), b(2)), (b(2), a(1)), (a(1), b(3))],
        );
        let r = extract_paths(&g, &d).unwrap();
        assert_eq!(r.paths[&0], vec![a(1), b(3)]);
        assert_eq!(verify_realization(&d, &r), Ok(()));
    }

    #[test]
    fn broken_walk_is_internal_error() {
        let d = DemandGraph::from_edges(3, [(a(1), b(1), 1)]).unwrap();
        let g = labeled(3, &[(a(1), b(2)), (a(3), b(1))]);
        assert!(matches!(extract_paths(&g, &d), Err(SolveError::Internal(_))));
    }

    #[test]
    fn verify_accepts_direct_edge() {
        let d = DemandGraph::from_edges(1, [(a(1), b(1), 1)]).unwrap();
        let mut r = Realization::new();
        r.insert(0, vec![a(1), b(1)]);
        assert_eq!(verify_realization(&d, &r), Ok(()));
    }

    #[test]
    fn verify_rejects_duplicate_base_edge() {
        let d = DemandGraph::from_edges(2, [(a(1), b(1), 2)]).unwrap();
        let mut r = Realization::new();
        r.insert(0, vec![a(1), b(1)]);
        r.insert(1, vec![a(1), b(1)]);
        assert_eq!(
            verify_realization(&d, &r),
            Err(Violation::EdgeReused {
                u: a(1),
                v: b(1),
                labels: (0, 1)
            })
        );
    }

    #[test]
    fn verify_rejects_same_side_step() {
        let d = DemandGraph::from_edges(2, [(a(1), a(2), 1)]).unwrap();
        let mut r = Realization::new();
        r.insert(0, vec![a(1), a(2)]);
        assert!(matches!(
            verify_realization(&d, &r),
            Err(Violation::NotAlternating { label: 0, .. })
        ));
    }

    #[test]
    fn verify_rejects_missing_and_repeated() {
        let d = DemandGraph::from_edges(3, [(a(1), b(1), 1)]).unwrap();
        assert_eq!(
            verify_realization(&d, &Realization::new()),
            Err(Violation::MissingPath { label: 0 })
        );
        let mut r = Realization::new();
        r.insert(0, vec![a(1), b(2), a(1), b(1)]);
        assert_eq!(
            verify_realization(&d, &r),
            Err(Violation::RepeatedVertex { label: 0, vertex: a(1) })
        );
        let mut r = Realization::new();
        r.insert(0, vec![a(1), b(2)]);
        assert!(matches!(verify_realization(&d, &r), Err(Violation::WrongEndpoints { .. })));
    }
}
