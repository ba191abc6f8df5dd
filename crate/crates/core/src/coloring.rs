//! Edge colorings of multigraphs: greedy list coloring, equitable
//! rebalancing, the two-part coloring of `D[A,B] ∪ D[B]`, and a
//! `⌊3Δ/2⌋`-color construction.
//!
//! Colors are `1..=k`. Edges are given as [`ColorEdge`] slices sorted by
//! instance id; vertex endpoints are dense indices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::SolveError;
use crate::graph::{InstanceId, LabeledMultigraph, Part};

pub type Color = u32;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorEdge {
    pub id: InstanceId,
    pub u: usize,
    pub v: usize,
}

/// The edges of one part of `g`, in id order, with dense endpoints.
pub fn color_edges(g: &LabeledMultigraph, part: Part) -> Vec<ColorEdge> {
    let n = g.n();
    g.restriction(part)
        .into_iter()
        .map(|(id, u, v)| ColorEdge {
            id,
            u: u.dense(n),
            v: v.dense(n),
        })
        .collect()
}

fn vertex_count(edges: &[ColorEdge]) -> usize {
    edges.iter().map(|e| e.u.max(e.v) + 1).max().unwrap_or(0)
}

fn max_degree(edges: &[ColorEdge]) -> usize {
    let mut deg = vec![0usize; vertex_count(edges)];
    for e in edges {
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

/// Assignment of colors `1..=k` to edge instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    k: u32,
    ids: Vec<InstanceId>,
    colors: Vec<Color>,
    sizes: Vec<usize>,
}

impl EdgeColoring {
    fn from_parts(k: u32, edges: &[ColorEdge], colors: Vec<Color>) -> Self {
        let mut sizes = vec![0; k as usize];
        for &c in &colors {
            sizes[c as usize - 1] += 1;
        }
        EdgeColoring {
            k,
            ids: edges.iter().map(|e| e.id).collect(),
            colors,
            sizes,
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn color_of(&self, id: InstanceId) -> Option<Color> {
        self.ids.binary_search(&id).ok().map(|i| self.colors[i])
    }

    /// `(instance, color)` in id order.
    pub fn iter(&self) -> impl Iterator<Item = (InstanceId, Color)> + '_ {
        self.ids.iter().copied().zip(self.colors.iter().copied())
    }

    /// `|c^{-1}(i)|` for `i = 1..=k`.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_size(&self, c: Color) -> usize {
        self.sizes[c as usize - 1]
    }

    pub fn class(&self, c: Color) -> Vec<InstanceId> {
        self.iter().filter(|&(_, x)| x == c).map(|(id, _)| id).collect()
    }

    /// Number of colors actually used.
    pub fn colors_used(&self) -> usize {
        self.sizes.iter().filter(|&&s| s > 0).count()
    }

    /// Largest minus smallest class size over all `k` colors.
    pub fn spread(&self) -> usize {
        let max = self.sizes.iter().max().copied().unwrap_or(0);
        let min = self.sizes.iter().min().copied().unwrap_or(0);
        max - min
    }

    /// Same assignment, palette extended to `k` colors.
    pub fn with_palette(mut self, k: u32) -> Self {
        assert!(self.colors.iter().all(|&c| c <= k), "palette too small");
        self.sizes.resize(k as usize, 0);
        self.k = k;
        self
    }

    /// Class sizes restricted to a subset of the colored instances.
    pub fn sizes_on(&self, subset: &[InstanceId]) -> Vec<usize> {
        let mut sizes = vec![0; self.k as usize];
        for id in subset {
            if let Some(c) = self.color_of(*id) {
                sizes[c as usize - 1] += 1;
            }
        }
        sizes
    }
}

/// True iff edges sharing an endpoint have different colors.
pub fn is_proper(edges: &[ColorEdge], c: &EdgeColoring) -> bool {
    let mut seen: Vec<Vec<Color>> = vec![Vec::new(); vertex_count(edges)];
    for e in edges {
        let Some(col) = c.color_of(e.id) else {
            return false;
        };
        if col == 0 || col > c.k {
            return false;
        }
        for x in [e.u, e.v] {
            if seen[x].contains(&col) {
                return false;
            }
            seen[x].push(col);
        }
    }
    true
}

/// Candidate colors per edge.
#[derive(Debug, Clone, Copy)]
pub enum Lists<'a> {
    /// Every edge may use `1..=k`.
    Full,
    /// One ascending list per edge, aligned with the edge slice.
    Explicit(&'a [Vec<Color>]),
    /// Edge `i` may use `1..=universe` except `excluded[i]`.
    Excluding { universe: Color, excluded: &'a [Vec<Color>] },
}

/// Greedy (list) edge coloring in edge order, always picking the smallest
/// feasible entry. Succeeds whenever every list has at least `2Δ − 1`
/// entries.
pub fn greedy_color(edges: &[ColorEdge], k: u32, lists: Lists<'_>) -> Result<EdgeColoring, SolveError> {
    let k = match lists {
        Lists::Excluding { universe, .. } => universe,
        Lists::Explicit(l) => l.iter().flatten().copied().max().unwrap_or(0).max(k),
        Lists::Full => k,
    };
    let mut used: Vec<Vec<Color>> = vec![Vec::new(); vertex_count(edges)];
    let mut colors = Vec::with_capacity(edges.len());
    let mut forbidden: Vec<Color> = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        forbidden.clear();
        forbidden.extend_from_slice(&used[e.u]);
        forbidden.extend_from_slice(&used[e.v]);
        let pick = match lists {
            Lists::Full => smallest_missing(&mut forbidden, k),
            Lists::Explicit(l) => l[i].iter().copied().find(|c| !forbidden.contains(c)),
            Lists::Excluding { excluded, .. } => {
                forbidden.extend_from_slice(&excluded[i]);
                smallest_missing(&mut forbidden, k)
            }
        };
        let c = pick.ok_or_else(|| SolveError::MethodFailure {
            stage: "greedy coloring",
            detail: format!("no feasible color for edge instance {}", e.id),
        })?;
        used[e.u].push(c);
        used[e.v].push(c);
        colors.push(c);
    }
    Ok(EdgeColoring::from_parts(k, edges, colors))
}

fn smallest_missing(forbidden: &mut Vec<Color>, k: u32) -> Option<Color> {
    forbidden.sort_unstable();
    forbidden.dedup();
    let mut c = 1;
    for &f in forbidden.iter() {
        if f == c {
            c += 1;
        } else if f > c {
            break;
        }
    }
    (c <= k).then_some(c)
}

/// Per-vertex `color → edge` map for proper colorings with small degrees.
struct Incidence {
    at: Vec<Vec<(Color, usize)>>,
}

impl Incidence {
    fn new(nv: usize) -> Self {
        Incidence { at: vec![Vec::new(); nv] }
    }

    fn get(&self, v: usize, c: Color) -> Option<usize> {
        self.at[v].iter().find(|&&(x, _)| x == c).map(|&(_, e)| e)
    }

    fn insert(&mut self, v: usize, c: Color, e: usize) {
        debug_assert!(self.get(v, c).is_none());
        self.at[v].push((c, e));
    }

    fn remove(&mut self, v: usize, c: Color) {
        let list = &mut self.at[v];
        if let Some(p) = list.iter().position(|&(x, _)| x == c) {
            list.swap_remove(p);
        }
    }
}

struct Rebalancer<'a> {
    edges: &'a [ColorEdge],
    colors: Vec<Color>,
    inc: Incidence,
    members: Vec<Vec<usize>>,
    pos: Vec<usize>,
}

impl<'a> Rebalancer<'a> {
    fn new(edges: &'a [ColorEdge], c: &EdgeColoring, k: u32) -> Self {
        let mut inc = Incidence::new(vertex_count(edges));
        let mut members = vec![Vec::new(); k as usize + 1];
        let mut pos = vec![0; edges.len()];
        let mut colors = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let col = c.color_of(e.id).expect("coloring covers every edge");
            inc.insert(e.u, col, i);
            inc.insert(e.v, col, i);
            pos[i] = members[col as usize].len();
            members[col as usize].push(i);
            colors.push(col);
        }
        Rebalancer {
            edges,
            colors,
            inc,
            members,
            pos,
        }
    }

    fn size(&self, c: Color) -> usize {
        self.members[c as usize].len()
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let ed = self.edges[e];
        if ed.u == v {
            ed.v
        } else {
            ed.u
        }
    }

    /// Edges of the `{x,y}`-component containing `start`, and whether it is
    /// a cycle.
    fn component(&self, start: usize, x: Color, y: Color) -> (Vec<usize>, bool) {
        let mut comp = vec![start];
        let first = self.colors[start];
        for from in [self.edges[start].v, self.edges[start].u] {
            let (mut cur_edge, mut cur_vertex) = (start, from);
            let mut want = if first == x { y } else { x };
            loop {
                match self.inc.get(cur_vertex, want) {
                    Some(e) if e == start => return (comp, true),
                    Some(e) => {
                        comp.push(e);
                        cur_vertex = self.other(e, cur_vertex);
                        cur_edge = e;
                        want = if want == x { y } else { x };
                    }
                    None => break,
                }
            }
            let _ = cur_edge;
        }
        (comp, false)
    }

    fn recolor(&mut self, comp: &[usize], x: Color, y: Color) {
        for &e in comp {
            let c = self.colors[e];
            self.inc.remove(self.edges[e].u, c);
            self.inc.remove(self.edges[e].v, c);
            let list = &mut self.members[c as usize];
            let p = self.pos[e];
            list.swap_remove(p);
            if let Some(&moved) = list.get(p) {
                self.pos[moved] = p;
            }
        }
        for &e in comp {
            let c = if self.colors[e] == x { y } else { x };
            self.colors[e] = c;
            self.inc.insert(self.edges[e].u, c, e);
            self.inc.insert(self.edges[e].v, c, e);
            self.pos[e] = self.members[c as usize].len();
            self.members[c as usize].push(e);
        }
    }

    /// Moves edges from class `x` to class `y` by swapping odd path
    /// components of `H_{x,y}` until `done` holds. Returns whether `done`
    /// was reached.
    fn transfer(&mut self, x: Color, y: Color, done: &dyn Fn(usize, usize) -> bool) -> bool {
        loop {
            if done(self.size(x), self.size(y)) {
                return true;
            }
            let mut swapped = false;
            let mut idx = 0;
            while idx < self.members[x as usize].len() {
                if done(self.size(x), self.size(y)) {
                    return true;
                }
                let e = self.members[x as usize][idx];
                let (comp, cycle) = self.component(e, x, y);
                let nx = comp.iter().filter(|&&f| self.colors[f] == x).count();
                if !cycle && nx == comp.len() - nx + 1 {
                    self.recolor(&comp, x, y);
                    swapped = true;
                } else {
                    idx += 1;
                }
            }
            if !swapped {
                return done(self.size(x), self.size(y));
            }
        }
    }

    fn balance(&mut self, donors: &[Color], recipients: &[Color], donor_floor: usize, recipient_cap: usize) {
        let (mut di, mut ri) = (0, 0);
        while di < donors.len() && ri < recipients.len() {
            let (x, y) = (donors[di], recipients[ri]);
            let ok = self.transfer(x, y, &|sx, sy| sx <= donor_floor || sy >= recipient_cap);
            debug_assert!(ok, "odd path component must exist");
            if !ok {
                return;
            }
            if self.size(x) <= donor_floor {
                di += 1;
            }
            if self.size(y) >= recipient_cap {
                ri += 1;
            }
        }
    }
}

/// Rebalances a proper coloring into an equitable one with exactly `k`
/// colors by swapping colors along odd path components of two-color
/// subgraphs.
pub fn make_equitable(edges: &[ColorEdge], c: &EdgeColoring, k: u32) -> EdgeColoring {
    if k == 0 {
        return c.clone();
    }
    let mut r = Rebalancer::new(edges, c, k);
    let e = edges.len();
    let lo = e / k as usize;
    let hi = e.div_ceil(k as usize);
    let colors: Vec<Color> = (1..=k).collect();

    let over: Vec<Color> = colors.iter().copied().filter(|&c| r.size(c) > hi).collect();
    let under: Vec<Color> = colors.iter().copied().filter(|&c| r.size(c) < lo).collect();
    r.balance(&over, &under, hi, lo);

    let under: Vec<Color> = colors.iter().copied().filter(|&c| r.size(c) < lo).collect();
    if !under.is_empty() {
        let donors: Vec<Color> = colors.iter().copied().filter(|&c| r.size(c) > lo).collect();
        r.balance(&donors, &under, lo, lo);
    }
    let over: Vec<Color> = colors.iter().copied().filter(|&c| r.size(c) > hi).collect();
    if !over.is_empty() {
        let recipients: Vec<Color> = colors.iter().copied().filter(|&c| r.size(c) < hi).collect();
        r.balance(&over, &recipients, hi, hi);
    }
    EdgeColoring::from_parts(k, edges, r.colors)
}

/// Equitable proper coloring with exactly `k` colors: greedy, then
/// [`make_equitable`]. Fails when greedy needs more than `k` colors.
pub fn equitable_coloring(edges: &[ColorEdge], k: u32) -> Result<EdgeColoring, SolveError> {
    let delta = max_degree(edges) as u32;
    let greedy_k = (2 * delta).max(1);
    let c = greedy_color(edges, greedy_k, Lists::Full)?;
    let used = c.iter().map(|(_, x)| x).max().unwrap_or(0);
    if used > k {
        return Err(SolveError::PreconditionViolation(format!(
            "greedy needed {used} matchings, only {k} allowed"
        )));
    }
    let c = c.with_palette(k);
    Ok(make_equitable(edges, &c, k))
}

/// Proper `2⌊n/2⌋`-coloring of `D[A,B] ∪ D[B]` that is equitable on `D[B]`
/// and has class-size spread at most 2 on `D[A,B]`.
///
/// `D[B]` and `D[A,B]` are each split into `⌊n/2⌋` equitable matchings,
/// `M_i` sorted by decreasing and `N_i` by increasing size; each `M_i ∪ N_i`
/// is a disjoint union of single edges and two- or three-edge paths through
/// one `M_i` edge, and gets colors `2i−1, 2i`.
pub fn abb_coloring(g: &LabeledMultigraph) -> Result<EdgeColoring, SolveError> {
    let n = g.n() as usize;
    let delta = g.part_max_degree(Part::CrossingAndB);
    if 4 * delta > n {
        return Err(SolveError::PreconditionViolation(format!(
            "two-part coloring needs Δ ≤ n/4, got Δ = {delta}, n = {n}"
        )));
    }
    let k = (n / 2) as u32;
    let mono = color_edges(g, Part::B);
    let cross = color_edges(g, Part::Crossing);
    let all = color_edges(g, Part::CrossingAndB);
    if k == 0 {
        return if all.is_empty() {
            Ok(EdgeColoring::from_parts(0, &all, Vec::new()))
        } else {
            Err(SolveError::PreconditionViolation("n < 2 with edges".into()))
        };
    }
    let cm = equitable_coloring(&mono, k)?;
    let cn = equitable_coloring(&cross, k)?;

    let mut m_order: Vec<Color> = (1..=k).collect();
    m_order.sort_by_key(|&c| core::cmp::Reverse(cm.class_size(c)));
    let mut n_order: Vec<Color> = (1..=k).collect();
    n_order.sort_by_key(|&c| cn.class_size(c));

    let nv = 2 * n;
    let mut m_at = vec![NONE; nv];
    let mut n_at = vec![NONE; nv];
    let mut out: Vec<(InstanceId, Color)> = Vec::with_capacity(all.len());
    let mut m_class: Vec<Vec<usize>> = vec![Vec::new(); k as usize + 1];
    for (i, e) in mono.iter().enumerate() {
        m_class[cm.color_of(e.id).unwrap() as usize].push(i);
    }
    let mut n_class: Vec<Vec<usize>> = vec![Vec::new(); k as usize + 1];
    for (i, e) in cross.iter().enumerate() {
        n_class[cn.color_of(e.id).unwrap() as usize].push(i);
    }

    for p in 0..k as usize {
        let first = 2 * p as Color + 1;
        let second = first + 1;
        let ms = &m_class[m_order[p] as usize];
        let ns = &n_class[n_order[p] as usize];
        for &i in ms {
            m_at[mono[i].u] = i;
            m_at[mono[i].v] = i;
        }
        for &i in ns {
            n_at[cross[i].u] = i;
            n_at[cross[i].v] = i;
        }
        // components through an M edge: (M edge, attached N edges)
        let mut three = Vec::new();
        let mut two = Vec::new();
        let mut single_m = Vec::new();
        let mut n_done = vec![false; 0];
        n_done.resize(ns.len(), false);
        let n_local = |i: usize| ns.iter().position(|&x| x == i);
        let mut attached: Vec<usize> = Vec::new();
        for &i in ms {
            let e = mono[i];
            let hang: Vec<usize> = [n_at[e.u], n_at[e.v]].into_iter().filter(|&x| x != NONE).collect();
            attached.extend(hang.iter().copied());
            match hang.len() {
                2 => three.push((i, hang)),
                1 => two.push((i, hang)),
                _ => single_m.push(i),
            }
        }
        attached.sort_unstable();
        let (mut m_count, mut n_count) = ([0usize; 2], [0usize; 2]);
        let assign = |m: usize, hang: &[usize], first_color: bool, out: &mut Vec<(InstanceId, Color)>,
                          m_count: &mut [usize; 2], n_count: &mut [usize; 2]| {
            let (cm_, cn_) = if first_color { (first, second) } else { (second, first) };
            out.push((mono[m].id, cm_));
            m_count[(cm_ - first) as usize] += 1;
            for &h in hang {
                out.push((cross[h].id, cn_));
                n_count[(cn_ - first) as usize] += 1;
            }
        };
        let c3 = three.len();
        for (j, (m, hang)) in three.iter().enumerate() {
            assign(*m, hang, j < c3 / 2, &mut out, &mut m_count, &mut n_count);
        }
        let c2 = two.len();
        for (j, (m, hang)) in two.iter().enumerate() {
            assign(*m, hang, j < c2.div_ceil(2), &mut out, &mut m_count, &mut n_count);
        }
        for &m in &single_m {
            let first_color = m_count[0] <= m_count[1];
            assign(m, &[], first_color, &mut out, &mut m_count, &mut n_count);
        }
        for &h in ns {
            if attached.binary_search(&h).is_ok() {
                continue;
            }
            let c = if n_count[0] <= n_count[1] { first } else { second };
            n_count[(c - first) as usize] += 1;
            out.push((cross[h].id, c));
        }
        let _ = n_local;
        for &i in ms {
            m_at[mono[i].u] = NONE;
            m_at[mono[i].v] = NONE;
        }
        for &i in ns {
            n_at[cross[i].u] = NONE;
            n_at[cross[i].v] = NONE;
        }
    }
    out.sort_unstable_by_key(|&(id, _)| id);
    let colors: Vec<Color> = out.iter().map(|&(_, c)| c).collect();
    let coloring = EdgeColoring::from_parts(2 * k, &all, colors);
    debug_assert!(is_proper(&all, &coloring));
    Ok(coloring)
}

/// Proper coloring with at most `max(⌊3Δ/2⌋, 1)` colors.
///
/// Edges are colored one at a time. An uncolored edge `xy` either has a
/// common missing color, or is recolored through the fan `xy, xz` (where
/// `xz` carries a color `β` missing at `y`) and one Kempe chain. With that
/// many colors the missing sets at `x`, `y`, `z` cannot be pairwise
/// disjoint, which is what makes the chain step succeed.
pub fn shannon_color(edges: &[ColorEdge]) -> EdgeColoring {
    let delta = max_degree(edges);
    let k = (3 * delta / 2).max(1) as u32;
    let nv = vertex_count(edges);
    let ku = k as usize;
    // at[v*k + c-1] = edge with color c at v
    let mut at = vec![NONE; nv * ku];
    let mut color = vec![0 as Color; edges.len()];
    let idx = |v: usize, c: Color| v * ku + c as usize - 1;
    let other = |e: usize, v: usize| if edges[e].u == v { edges[e].v } else { edges[e].u };

    for e in 0..edges.len() {
        let (x, y) = (edges[e].u, edges[e].v);
        let missing = |at: &Vec<usize>, v: usize| -> Vec<Color> {
            (1..=k).filter(|&c| at[idx(v, c)] == NONE).collect()
        };
        let mx = missing(&at, x);
        let my = missing(&at, y);
        if let Some(&c) = mx.iter().find(|c| my.contains(c)) {
            color[e] = c;
            at[idx(x, c)] = e;
            at[idx(y, c)] = e;
            continue;
        }
        let beta = my[0];
        let e1 = at[idx(x, beta)];
        let z = other(e1, x);
        let mz = missing(&at, z);
        if let Some(&gamma) = mx.iter().find(|c| mz.contains(c)) {
            at[idx(x, beta)] = NONE;
            at[idx(z, beta)] = NONE;
            color[e1] = gamma;
            at[idx(x, gamma)] = e1;
            at[idx(z, gamma)] = e1;
            color[e] = beta;
            at[idx(x, beta)] = e;
            at[idx(y, beta)] = e;
            continue;
        }
        let delta_c = *my
            .iter()
            .find(|c| mz.contains(c))
            .expect("missing sets at x, y, z cannot be pairwise disjoint");
        let alpha = mx[0];
        // (alpha, delta)-chain starting at x with its delta edge
        let mut chain = Vec::new();
        let (mut cur, mut want) = (x, delta_c);
        while let Some(f) = Some(at[idx(cur, want)]).filter(|&f| f != NONE) {
            chain.push(f);
            cur = other(f, cur);
            want = if want == alpha { delta_c } else { alpha };
        }
        let swap_chain = |at: &mut Vec<usize>, color: &mut Vec<Color>| {
            for &f in &chain {
                at[idx(edges[f].u, color[f])] = NONE;
                at[idx(edges[f].v, color[f])] = NONE;
            }
            for &f in &chain {
                color[f] = if color[f] == alpha { delta_c } else { alpha };
                at[idx(edges[f].u, color[f])] = f;
                at[idx(edges[f].v, color[f])] = f;
            }
        };
        if cur != y {
            swap_chain(&mut at, &mut color);
            color[e] = delta_c;
            at[idx(x, delta_c)] = e;
            at[idx(y, delta_c)] = e;
        } else {
            // shift beta from xz to xy, then free delta at x and give it to xz
            at[idx(x, beta)] = NONE;
            at[idx(z, beta)] = NONE;
            color[e] = beta;
            at[idx(x, beta)] = e;
            at[idx(y, beta)] = e;
            swap_chain(&mut at, &mut color);
            color[e1] = delta_c;
            at[idx(x, delta_c)] = e1;
            at[idx(z, delta_c)] = e1;
        }
    }
    EdgeColoring::from_parts(k, edges, color)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(list: &[(usize, usize)]) -> Vec<ColorEdge> {
        list.iter()
            .enumerate()
            .map(|(i, &(u, v))| ColorEdge { id: i as InstanceId, u, v })
            .collect()
    }

    fn colors(c: &EdgeColoring) -> Vec<Color> {
        c.iter().map(|(_, x)| x).collect()
    }

    #[test]
    fn greedy_triangle_uses_three_colors() {
        let es = edges(&[(0, 1), (1, 2), (0, 2)]);
        let c = greedy_color(&es, 3, Lists::Full).unwrap();
        assert!(is_proper(&es, &c));
        assert_eq!(colors(&c), [1, 2, 3]);
    }

    #[test]
    fn greedy_bundle_gets_distinct_colors() {
        let es = edges(&[(0, 1); 4]);
        let c = greedy_color(&es, 7, Lists::Full).unwrap();
        assert_eq!(colors(&c), [1, 2, 3, 4]);
    }

    #[test]
    fn greedy_disjoint_edges_share_color() {
        let es = edges(&[(0, 1), (2, 3), (4, 5)]);
        let c = greedy_color(&es, 1, Lists::Full).unwrap();
        assert_eq!(colors(&c), [1, 1, 1]);
    }

    #[test]
    fn greedy_fails_with_too_few_colors() {
        let es = edges(&[(0, 1), (0, 1)]);
        assert!(matches!(
            greedy_color(&es, 1, Lists::Full),
            Err(SolveError::MethodFailure { .. })
        ));
    }

    #[test]
    fn greedy_respects_lists() {
        let es = edges(&[(0, 1), (1, 2)]);
        let lists = vec![vec![2, 5], vec![2, 3]];
        let c = greedy_color(&es, 0, Lists::Explicit(&lists)).unwrap();
        assert_eq!(colors(&c), [2, 3]);
        let excluded = vec![vec![1], vec![1, 2, 3]];
        let c = greedy_color(&es, 0, Lists::Excluding { universe: 5, excluded: &excluded }).unwrap();
        assert_eq!(colors(&c), [2, 4]);
    }

    #[test]
    fn equitable_spreads_disjoint_edges() {
        let es = edges(&[(0, 1), (2, 3), (4, 5)]);
        let c = greedy_color(&es, 1, Lists::Full).unwrap().with_palette(3);
        let eq = make_equitable(&es, &c, 3);
        assert_eq!(eq.sizes(), &[1, 1, 1]);
        assert!(is_proper(&es, &eq));
    }

    #[test]
    fn equitable_leaves_balanced_path_alone() {
        let es = edges(&[(0, 1), (1, 2), (2, 3)]);
        let c = greedy_color(&es, 2, Lists::Full).unwrap();
        assert_eq!(colors(&c), [1, 2, 1]);
        let eq = make_equitable(&es, &c, 2);
        assert_eq!(colors(&eq), [1, 2, 1]);
        assert_eq!(eq.sizes(), &[2, 1]);
    }

    #[test]
    fn equitable_four_disjoint_edges() {
        let es = edges(&[(0, 1), (2, 3), (4, 5), (6, 7)]);
        let c = EdgeColoring::from_parts(2, &es, vec![1, 1, 1, 2]);
        let eq = make_equitable(&es, &c, 2);
        assert_eq!(eq.sizes(), &[2, 2]);
        assert!(is_proper(&es, &eq));
    }

    #[test]
    fn equitable_skips_even_cycles() {
        // a 4-cycle colored 1,2,1,2 plus two isolated edges in color 1
        let es = edges(&[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (6, 7)]);
        let c = EdgeColoring::from_parts(3, &es, vec![1, 2, 1, 2, 1, 1]);
        let eq = make_equitable(&es, &c, 3);
        assert!(is_proper(&es, &eq));
        assert_eq!(eq.spread(), 0);
    }

    #[test]
    fn shannon_triangle_with_doubled_edges() {
        let es = edges(&[(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]);
        let c = shannon_color(&es);
        assert!(is_proper(&es, &c));
        assert_eq!(c.k(), 6);
        assert_eq!(c.colors_used(), 6);
    }

    #[test]
    fn shannon_small_cases() {
        let path = edges(&[(0, 1), (1, 2)]);
        let c = shannon_color(&path);
        assert!(is_proper(&path, &c));
        assert_eq!(c.colors_used(), 2);
        for mu in 1..6 {
            let bundle = edges(&vec![(0, 1); mu]);
            let c = shannon_color(&bundle);
            assert!(is_proper(&bundle, &c));
            assert_eq!(c.colors_used(), mu);
            assert!(c.k() as usize <= (3 * mu / 2).max(1));
        }
    }
}
