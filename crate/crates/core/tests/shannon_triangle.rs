use edp_core::coloring::{color_edges, shannon_color};
use edp_core::{DemandGraph, LabeledMultigraph, Part, VertexId as V};

/// Three vertices, every pair doubled: six edges, every two adjacent.
fn triangle() -> DemandGraph {
    DemandGraph::from_edges(3, [(V::a(1), V::a(2), 2), (V::a(2), V::a(3), 2), (V::a(1), V::a(3), 2)]).unwrap()
}

fn colorable(edges: &[(usize, usize)], k: u32, at: usize, colors: &mut Vec<u32>) -> bool {
    if at == edges.len() {
        return true;
    }
    for c in 0..k {
        let clash = edges[..at]
            .iter()
            .zip(colors.iter())
            .any(|(&(x, y), &col)| col == c && [x, y].iter().any(|w| *w == edges[at].0 || *w == edges[at].1));
        if !clash {
            colors.push(c);
            if colorable(edges, k, at + 1, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

#[test]
fn five_colors_do_not_suffice() {
    let g = LabeledMultigraph::from_demand(&triangle());
    let edges: Vec<(usize, usize)> = color_edges(&g, Part::All).iter().map(|e| (e.u, e.v)).collect();
    assert_eq!(edges.len(), 6);
    assert!(!colorable(&edges, 5, 0, &mut Vec::new()));
    assert!(colorable(&edges, 6, 0, &mut Vec::new()));
}

#[test]
fn shannon_meets_the_bound() {
    let g = LabeledMultigraph::from_demand(&triangle());
    let edges = color_edges(&g, Part::All);
    let c = shannon_color(&edges);
    assert_eq!(c.colors_used(), 6);
    assert_eq!(3 * 4 / 2, 6);
}
