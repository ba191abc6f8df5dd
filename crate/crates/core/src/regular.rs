//! Padding a demand graph to a `Δ`-regular one with synthetic edges.

use alloc::collections::BTreeSet;

use crate::graph::{DemandGraph, LabeledMultigraph, Side, VertexId};

/// Working graph of `d` with synthetic edges added until every vertex has
/// degree `Δ(d)`, with one possible exception.
///
/// Padding stays inside a class wherever possible so that `e(D[A,B])` grows
/// by one at most when the parity of `e(D[A,B])` disagrees with `nΔ`, plus
/// at most the deficiency of a lone short vertex. Within a
/// class the two lowest-degree deficient vertices are joined until at most
/// one is left; its deficiency is then even, and each rotation replaces a
/// synthetic edge `xy` away from it by `xu, uy`. When no synthetic edge is
/// left to rotate, that vertex stays short: rotating a demand edge would
/// lift it and lengthen its path. Degrees never exceed `Δ(d)`.
pub fn regularize(d: &DemandGraph) -> LabeledMultigraph {
    let mut g = LabeledMultigraph::from_demand(d);
    let n = d.n();
    let target = d.max_degree();
    let mut leftover = [None, None];
    for (slot, side) in [Side::A, Side::B].into_iter().enumerate() {
        let mut deficient: BTreeSet<(usize, usize)> = (0..2 * n as usize)
            .map(|i| (g.degree_dense(i), i))
            .filter(|&(deg, i)| deg < target && VertexId::from_dense(i, n).side == side)
            .collect();
        while deficient.len() >= 2 {
            let (du, u) = deficient.pop_first().expect("two entries");
            let (dv, v) = deficient.pop_first().expect("two entries");
            g.add_synthetic(VertexId::from_dense(u, n), VertexId::from_dense(v, n))
                .expect("distinct in-range vertices");
            if du + 1 < target {
                deficient.insert((du + 1, u));
            }
            if dv + 1 < target {
                deficient.insert((dv + 1, v));
            }
        }
        leftover[slot] = deficient.pop_first().map(|(_, u)| VertexId::from_dense(u, n));
    }
    let short = |g: &LabeledMultigraph, u: VertexId| target - g.degree(u);
    if let [Some(ua), Some(ub)] = leftover {
        if short(&g, ua) % 2 == 1 {
            g.add_synthetic(ua, ub).expect("different classes");
        }
    }
    for u in leftover.into_iter().flatten() {
        debug_assert_eq!(short(&g, u) % 2, 0);
        while short(&g, u) > 0 && rotate_into(&mut g, u) {}
    }
    if let [Some(ua), Some(ub)] = leftover {
        while short(&g, ua) > 0 && short(&g, ub) > 0 {
            g.add_synthetic(ua, ub).expect("different classes");
        }
    }
    g
}

fn rotate_into(g: &mut LabeledMultigraph, u: VertexId) -> bool {
    // same class first (adds no crossing edge), then crossing (keeps the
    // count), then the other class (adds two)
    let pick = |g: &LabeledMultigraph, sides: usize| {
        g.instances()
            .find(|&(_, l, x, y)| {
                l.synthetic && x != u && y != u && [x, y].iter().filter(|w| w.side == u.side).count() == sides
            })
            .map(|(id, _, x, y)| (id, x, y))
    };
    let Some((id, x, y)) = pick(g, 2).or_else(|| pick(g, 1)).or_else(|| pick(g, 0)) else {
        return false;
    };
    g.remove_edge(id).expect("live instance");
    g.add_synthetic(x, u).expect("no loop");
    g.add_synthetic(u, y).expect("no loop");
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId as V;

    fn synthetic_count(g: &LabeledMultigraph) -> usize {
        g.instances().filter(|(_, l, _, _)| l.synthetic).count()
    }

    #[test]
    fn regular_input_is_untouched() {
        let d = DemandGraph::from_edges(2, [(V::a(1), V::b(1), 1), (V::a(2), V::b(2), 1)]).unwrap();
        let g = regularize(&d);
        assert_eq!(synthetic_count(&g), 0);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn single_edge_on_two() {
        let d = DemandGraph::from_edges(2, [(V::a(1), V::b(1), 1)]).unwrap();
        let g = regularize(&d);
        assert_eq!(synthetic_count(&g), 1);
        assert!(g.vertices().all(|v| g.degree(v) == 1));
    }

    #[test]
    fn doubled_edge_on_three() {
        let d = DemandGraph::from_edges(3, [(V::a(1), V::b(1), 2)]).unwrap();
        let g = regularize(&d);
        assert_eq!(synthetic_count(&g), 4);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(g.part_count(crate::graph::Part::Crossing), 2);
    }

    #[test]
    fn lone_deficient_vertex_without_padding_stays_short() {
        // triangle a1 a2 b1 is 2-regular; b2 is left alone with deficiency 2
        let d = DemandGraph::from_edges(
            2,
            [(V::a(1), V::a(2), 1), (V::a(2), V::b(1), 1), (V::b(1), V::a(1), 1)],
        )
        .unwrap();
        let g = regularize(&d);
        assert_eq!(g.lift_count(), 0);
        assert_eq!(g.degree(V::b(2)), 0);
        assert!(g.vertices().filter(|&v| v != V::b(2)).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn lone_deficient_vertex_takes_padding() {
        // a3 is short by 2 inside A; B pads with synthetic edges that
        // then get rotated through a3
        let d = DemandGraph::from_edges(3, [(V::a(1), V::a(2), 2), (V::b(1), V::b(2), 1)]).unwrap();
        let g = regularize(&d);
        assert_eq!(g.lift_count(), 0);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert_eq!(g.part_count(crate::graph::Part::Crossing), 2);
    }
}
