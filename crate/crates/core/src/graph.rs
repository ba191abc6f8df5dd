//! Demand graphs and the labeled working multigraph that liftings act on.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;

/// One of the two classes of `K_{n,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A vertex `a_i` or `b_i`; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub side: Side,
    pub index: u32,
}

impl VertexId {
    pub const fn new(side: Side, index: u32) -> Self {
        VertexId { side, index }
    }

    pub const fn a(index: u32) -> Self {
        VertexId::new(Side::A, index)
    }

    pub const fn b(index: u32) -> Self {
        VertexId::new(Side::B, index)
    }

    /// Dense index in `0..2n`: `a_i ↦ i-1`, `b_i ↦ n+i-1`.
    #[inline]
    pub fn dense(self, n: u32) -> usize {
        match self.side {
            Side::A => (self.index - 1) as usize,
            Side::B => (n + self.index - 1) as usize,
        }
    }

    #[inline]
    pub fn from_dense(idx: usize, n: u32) -> Self {
        let idx = idx as u32;
        if idx < n {
            VertexId::a(idx + 1)
        } else {
            VertexId::b(idx - n + 1)
        }
    }

    pub fn in_range(self, n: u32) -> bool {
        self.index >= 1 && self.index <= n
    }

    /// The same index in the other class.
    pub fn mirrored(self) -> Self {
        VertexId::new(self.side.opposite(), self.index)
    }

    /// Parses `a3` / `b12`.
    pub fn parse(s: &str) -> Option<Self> {
        let mut chars = s.chars();
        let side = match chars.next()? {
            'a' | 'A' => Side::A,
            'b' | 'B' => Side::B,
            _ => return None,
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let index = rest.parse().ok()?;
        Some(VertexId::new(side, index))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::A => write!(f, "a{}", self.index),
            Side::B => write!(f, "b{}", self.index),
        }
    }
}

/// Label of a demand-edge instance. Stable under lifting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabel {
    pub id: u32,
    /// Padding edge added by a solver; never reported.
    pub synthetic: bool,
}

impl EdgeLabel {
    pub const fn demand(id: u32) -> Self {
        EdgeLabel {
            id,
            synthetic: false,
        }
    }
}

/// An aggregated demand bundle `u v × multiplicity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DemandEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub multiplicity: u32,
}

impl DemandEdge {
    pub fn is_crossing(&self) -> bool {
        self.u.side != self.v.side
    }
}

/// Immutable loopless demand multigraph on `A ∪ B`, `|A| = |B| = n`.
///
/// Entries are kept in insertion order with at most one entry per unordered
/// vertex pair. Labels are assigned by expanding entries in order: entry `i`
/// copy `j` gets label `offset(i) + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemandGraph {
    n: u32,
    edges: Vec<DemandEdge>,
    index: BTreeMap<(VertexId, VertexId), usize>,
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl DemandGraph {
    pub fn new(n: u32) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyClasses);
        }
        Ok(DemandGraph {
            n,
            edges: Vec::new(),
            index: BTreeMap::new(),
        })
    }

    pub fn from_edges<I>(n: u32, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, u32)>,
    {
        let mut d = DemandGraph::new(n)?;
        for (u, v, m) in edges {
            d.add_edge(u, v, m)?;
        }
        Ok(d)
    }

    /// Adds `multiplicity` copies of `uv`, merging with an existing entry.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, multiplicity: u32) -> Result<(), GraphError> {
        for w in [u, v] {
            if !w.in_range(self.n) {
                return Err(GraphError::OutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if multiplicity == 0 {
            return Err(GraphError::ZeroMultiplicity(u, v));
        }
        match self.index.get(&ordered(u, v)) {
            Some(&i) => self.edges[i].multiplicity += multiplicity,
            None => {
                self.index.insert(ordered(u, v), self.edges.len());
                self.edges.push(DemandEdge { u, v, multiplicity });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[DemandEdge] {
        &self.edges
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        self.index
            .get(&ordered(u, v))
            .map_or(0, |&i| self.edges[i].multiplicity)
    }

    /// `e(D)`, counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(|e| e.multiplicity as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0usize; 2 * self.n as usize];
        for e in &self.edges {
            deg[e.u.dense(self.n)] += e.multiplicity as usize;
            deg[e.v.dense(self.n)] += e.multiplicity as usize;
        }
        deg
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .map(|e| e.multiplicity as usize)
            .sum()
    }

    /// `Δ(D)`.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `(e(D[A]), e(D[A,B]), e(D[B]))`.
    pub fn part_counts(&self) -> (usize, usize, usize) {
        let (mut ea, mut eab, mut eb) = (0, 0, 0);
        for e in &self.edges {
            let m = e.multiplicity as usize;
            match (e.u.side, e.v.side) {
                (Side::A, Side::A) => ea += m,
                (Side::B, Side::B) => eb += m,
                _ => eab += m,
            }
        }
        (ea, eab, eb)
    }

    /// Every demand-edge instance with its label, in label order.
    pub fn instances(&self) -> Vec<(EdgeLabel, VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        let mut id = 0u32;
        for e in &self.edges {
            for _ in 0..e.multiplicity {
                out.push((EdgeLabel::demand(id), e.u, e.v));
                id += 1;
            }
        }
        out
    }

    /// Swaps the roles of `A` and `B`; labels are preserved.
    pub fn transposed(&self) -> DemandGraph {
        let mut t = DemandGraph::new(self.n).expect("n > 0");
        for e in &self.edges {
            t.add_edge(e.u.mirrored(), e.v.mirrored(), e.multiplicity)
                .expect("mirror of a valid edge");
        }
        t
    }

    /// Subgraph keeping `counts[i]` copies of entry `i` (entries with zero
    /// copies are dropped). Labels of the result follow its own expansion.
    pub fn with_counts(&self, counts: &[u32]) -> DemandGraph {
        let mut d = DemandGraph::new(self.n).expect("n > 0");
        for (e, &c) in self.edges.iter().zip(counts) {
            if c > 0 {
                d.add_edge(e.u, e.v, c).expect("sub-bundle of a valid edge");
            }
        }
        d
    }
}

/// Identifier of one edge instance inside a [`LabeledMultigraph`]. Ids are
/// never reused; a lift retires one id and creates two fresh ones.
pub type InstanceId = u32;

/// Restrictions of a graph on `A ∪ B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    /// `D[A]`
    A,
    /// `D[B]`
    B,
    /// `D[A,B]`
    Crossing,
    /// `D[A,B] ∪ D[B]`
    CrossingAndB,
    All,
}

impl Part {
    fn contains(self, u: Side, v: Side) -> bool {
        match self {
            Part::A => u == Side::A && v == Side::A,
            Part::B => u == Side::B && v == Side::B,
            Part::Crossing => u != v,
            Part::CrossingAndB => !(u == Side::A && v == Side::A),
            Part::All => true,
        }
    }
}

#[derive(Debug, Clone)]
struct Slot {
    label: EdgeLabel,
    u: u32,
    v: u32,
    pos_u: u32,
    pos_v: u32,
}

/// Outcome of [`LabeledMultigraph::lift`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lifted {
    /// The target was an endpoint; nothing changed.
    Unchanged(InstanceId),
    /// Instances `(x,z)` and `(z,y)` replacing `(x,y)`.
    Split(InstanceId, InstanceId),
}

/// Mutable working multigraph whose edge instances carry labels.
///
/// Instances are stored one record per unit of multiplicity; pair
/// multiplicities are an index maintained alongside.
#[derive(Debug, Clone)]
pub struct LabeledMultigraph {
    n: u32,
    slots: Vec<Option<Slot>>,
    incidence: Vec<Vec<InstanceId>>,
    pair_mult: BTreeMap<(u32, u32), u32>,
    live: usize,
    next_synthetic: u32,
    lifts: usize,
}

impl LabeledMultigraph {
    pub fn new(n: u32) -> Self {
        LabeledMultigraph {
            n,
            slots: Vec::new(),
            incidence: alloc::vec![Vec::new(); 2 * n as usize],
            pair_mult: BTreeMap::new(),
            live: 0,
            next_synthetic: 0,
            lifts: 0,
        }
    }

    /// One instance per demand-edge copy, labeled as in
    /// [`DemandGraph::instances`].
    pub fn from_demand(d: &DemandGraph) -> Self {
        let mut g = LabeledMultigraph::new(d.n());
        for (label, u, v) in d.instances() {
            g.add_edge(label, u, v).expect("demand graph is valid");
        }
        g.next_synthetic = d.edge_count() as u32;
        g
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `e(G)`: number of live instances.
    pub fn edge_count(&self) -> usize {
        self.live
    }

    /// Number of non-trivial lifts performed so far.
    pub fn lift_count(&self) -> usize {
        self.lifts
    }

    pub fn vertex(&self, dense: usize) -> VertexId {
        VertexId::from_dense(dense, self.n)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..2 * self.n as usize).map(|i| self.vertex(i))
    }

    fn key(a: u32, b: u32) -> (u32, u32) {
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    fn check(&self, v: VertexId) -> Result<u32, GraphError> {
        if v.in_range(self.n) {
            Ok(v.dense(self.n) as u32)
        } else {
            Err(GraphError::OutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn add_edge(&mut self, label: EdgeLabel, u: VertexId, v: VertexId) -> Result<InstanceId, GraphError> {
        let (du, dv) = (self.check(u)?, self.check(v)?);
        if du == dv {
            return Err(GraphError::Loop(u));
        }
        let id = self.slots.len() as InstanceId;
        let pos_u = self.incidence[du as usize].len() as u32;
        self.incidence[du as usize].push(id);
        let pos_v = self.incidence[dv as usize].len() as u32;
        self.incidence[dv as usize].push(id);
        self.slots.push(Some(Slot {
            label,
            u: du,
            v: dv,
            pos_u,
            pos_v,
        }));
        *self.pair_mult.entry(Self::key(du, dv)).or_insert(0) += 1;
        self.live += 1;
        if label.synthetic && label.id >= self.next_synthetic {
            self.next_synthetic = label.id + 1;
        }
        Ok(id)
    }

    /// The id the next synthetic label will get.
    pub fn next_synthetic(&self) -> u32 {
        self.next_synthetic
    }

    /// Makes sure future synthetic labels are at least `next`.
    pub fn reserve_synthetic(&mut self, next: u32) {
        self.next_synthetic = self.next_synthetic.max(next);
    }

    /// Adds a padding edge with a fresh synthetic label.
    pub fn add_synthetic(&mut self, u: VertexId, v: VertexId) -> Result<InstanceId, GraphError> {
        let label = EdgeLabel {
            id: self.next_synthetic,
            synthetic: true,
        };
        self.add_edge(label, u, v)
    }

    fn detach(&mut self, vertex: u32, pos: u32) {
        let list = &mut self.incidence[vertex as usize];
        list.swap_remove(pos as usize);
        if let Some(&moved) = list.get(pos as usize) {
            let slot = self.slots[moved as usize].as_mut().expect("live instance");
            if slot.u == vertex {
                slot.pos_u = pos;
            } else {
                slot.pos_v = pos;
            }
        }
    }

    pub fn remove_edge(&mut self, id: InstanceId) -> Result<(EdgeLabel, VertexId, VertexId), GraphError> {
        let slot = self
            .slots
            .get_mut(id as usize)
            .and_then(Option::take)
            .ok_or(GraphError::MissingInstance(id))?;
        self.detach(slot.u, slot.pos_u);
        self.detach(slot.v, slot.pos_v);
        let key = Self::key(slot.u, slot.v);
        let m = self.pair_mult.get_mut(&key).expect("indexed pair");
        *m -= 1;
        if *m == 0 {
            self.pair_mult.remove(&key);
        }
        self.live -= 1;
        Ok((slot.label, self.vertex(slot.u as usize), self.vertex(slot.v as usize)))
    }

    pub fn edge(&self, id: InstanceId) -> Option<(EdgeLabel, VertexId, VertexId)> {
        let s = self.slots.get(id as usize)?.as_ref()?;
        Some((s.label, self.vertex(s.u as usize), self.vertex(s.v as usize)))
    }

    pub fn contains(&self, id: InstanceId) -> bool {
        matches!(self.slots.get(id as usize), Some(Some(_)))
    }

    /// Replaces instance `(x,y)` by `(x,z),(z,y)` carrying the same label; a
    /// no-op when `z ∈ {x,y}`.
    pub fn lift(&mut self, id: InstanceId, z: VertexId) -> Result<Lifted, GraphError> {
        let (label, x, y) = self.edge(id).ok_or(GraphError::MissingInstance(id))?;
        self.check(z)?;
        if z == x || z == y {
            return Ok(Lifted::Unchanged(id));
        }
        self.remove_edge(id)?;
        let first = self.add_edge(label, x, z)?;
        let second = self.add_edge(label, z, y)?;
        self.lifts += 1;
        Ok(Lifted::Split(first, second))
    }

    /// Instance ids at `v` (unordered).
    pub fn incident(&self, v: VertexId) -> &[InstanceId] {
        &self.incidence[v.dense(self.n)]
    }

    /// `d(v)` with multiplicity.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v.dense(self.n)].len()
    }

    pub fn degree_dense(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The endpoint of instance `id` other than `v`.
    pub fn other_end(&self, id: InstanceId, v: VertexId) -> VertexId {
        let s = self.slots[id as usize].as_ref().expect("live instance");
        let dv = v.dense(self.n) as u32;
        let o = if s.u == dv { s.v } else { s.u };
        self.vertex(o as usize)
    }

    /// `N(v)`, sorted, without repetition.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .incident(v)
            .iter()
            .map(|&id| self.other_end(id, v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `N_S(v)`: neighbors of `v` in class `side`.
    pub fn neighbors_in(&self, v: VertexId, side: Side) -> Vec<VertexId> {
        let mut out = self.neighbors(v);
        out.retain(|w| w.side == side);
        out
    }

    /// `γ_S(v)`: the number of distinct neighbors of `v` in class `side`.
    pub fn gamma(&self, v: VertexId, side: Side) -> usize {
        self.neighbors_in(v, side).len()
    }

    /// `e(v, S)`: edges from `v` into class `side`, with multiplicity.
    pub fn edges_into(&self, v: VertexId, side: Side) -> usize {
        self.incident(v)
            .iter()
            .filter(|&&id| self.other_end(id, v).side == side)
            .count()
    }

    /// `μ(uv)`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        if !u.in_range(self.n) || !v.in_range(self.n) {
            return 0;
        }
        let key = Self::key(u.dense(self.n) as u32, v.dense(self.n) as u32);
        self.pair_mult.get(&key).copied().unwrap_or(0) as usize
    }

    /// `μ(G)`, optionally restricted to one part.
    pub fn max_multiplicity(&self, part: Part) -> usize {
        self.pair_mult
            .iter()
            .filter(|(&(a, b), _)| part.contains(self.vertex(a as usize).side, self.vertex(b as usize).side))
            .map(|(_, &m)| m as usize)
            .max()
            .unwrap_or(0)
    }

    /// Live instances in id order.
    pub fn instances(&self) -> impl Iterator<Item = (InstanceId, EdgeLabel, VertexId, VertexId)> + '_ {
        self.slots.iter().enumerate().filter_map(move |(i, s)| {
            s.as_ref().map(|s| {
                (
                    i as InstanceId,
                    s.label,
                    self.vertex(s.u as usize),
                    self.vertex(s.v as usize),
                )
            })
        })
    }

    /// Live instances of one part, in id order.
    pub fn restriction(&self, part: Part) -> Vec<(InstanceId, VertexId, VertexId)> {
        self.instances()
            .filter(|(_, _, u, v)| part.contains(u.side, v.side))
            .map(|(id, _, u, v)| (id, u, v))
            .collect()
    }

    pub fn part_count(&self, part: Part) -> usize {
        self.restriction(part).len()
    }

    /// Maximum degree of the subgraph formed by one part.
    pub fn part_max_degree(&self, part: Part) -> usize {
        let mut deg = alloc::vec![0usize; 2 * self.n as usize];
        for (_, u, v) in self.restriction(part) {
            deg[u.dense(self.n)] += 1;
            deg[v.dense(self.n)] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// True iff the graph is a subgraph of `K_{n,n}`: no monochromatic edge
    /// and no parallel edges.
    pub fn is_simple_bipartite(&self) -> bool {
        self.pair_mult.iter().all(|(&(a, b), &m)| {
            m == 1 && self.vertex(a as usize).side != self.vertex(b as usize).side
        })
    }

    /// True iff every edge at `v` is crossing and simple.
    pub fn is_resolved(&self, v: VertexId) -> bool {
        let nb = self.neighbors(v);
        nb.len() == self.degree(v) && nb.iter().all(|w| w.side != v.side)
    }

    /// Number of lifts [`resolve`](Self::resolve) needs at `v`:
    /// `d(v) − γ_opp(v)`.
    pub fn resolution_demand(&self, v: VertexId) -> usize {
        self.degree(v) - self.gamma(v, v.side.opposite())
    }

    /// Lifts every monochromatic edge at `v` and all but one copy of each
    /// crossing bundle at `v` to distinct vertices taken from `targets` in
    /// order. Targets already adjacent to `v`, or on `v`'s own side, are
    /// skipped. Edges are lifted in instance-id order; the surviving copy of a
    /// crossing bundle is its lowest id.
    ///
    /// Returns `(lifted instance, target)` pairs in lift order.
    pub fn resolve(&mut self, v: VertexId, targets: &[VertexId]) -> Result<Vec<(InstanceId, VertexId)>, GraphError> {
        self.check(v)?;
        let opp = v.side.opposite();
        let mut ids: Vec<InstanceId> = self.incident(v).to_vec();
        ids.sort_unstable();
        let mut seen: Vec<VertexId> = Vec::new();
        let mut to_lift = Vec::new();
        for id in ids {
            let w = self.other_end(id, v);
            if w.side == opp && !seen.contains(&w) {
                seen.push(w);
            } else {
                to_lift.push(id);
            }
        }
        let usable: Vec<VertexId> = targets
            .iter()
            .copied()
            .filter(|t| t.side == opp && t.in_range(self.n) && !seen.contains(t))
            .scan(Vec::<VertexId>::new(), |acc, t| {
                if acc.contains(&t) {
                    Some(None)
                } else {
                    acc.push(t);
                    Some(Some(t))
                }
            })
            .flatten()
            .take(to_lift.len())
            .collect();
        if usable.len() < to_lift.len() {
            return Err(GraphError::InsufficientTargets {
                vertex: v,
                needed: to_lift.len(),
                available: usable.len(),
            });
        }
        let mut done = Vec::with_capacity(to_lift.len());
        for (id, t) in to_lift.into_iter().zip(usable) {
            self.lift(id, t)?;
            done.push((id, t));
        }
        Ok(done)
    }

    /// Checks that every label occurs at least once and that each label's
    /// instances form a walk between the given endpoints: the endpoints have
    /// odd degree (or the walk is closed, when they coincide), every other
    /// vertex even, and the instances are connected.
    pub fn label_walks_ok(&self, endpoints: &BTreeMap<EdgeLabel, (VertexId, VertexId)>) -> bool {
        let mut by_label: BTreeMap<EdgeLabel, Vec<(VertexId, VertexId)>> = BTreeMap::new();
        for (_, l, u, v) in self.instances() {
            by_label.entry(l).or_default().push((u, v));
        }
        endpoints.iter().all(|(label, &(s, t))| match by_label.get(label) {
            None => false,
            Some(edges) => is_walk(edges, s, t),
        })
    }
}

/// Whether `edges` can be traversed as one walk from `s` to `t`.
pub(crate) fn is_walk(edges: &[(VertexId, VertexId)], s: VertexId, t: VertexId) -> bool {
    let mut deg: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &(u, v) in edges {
        *deg.entry(u).or_insert(0) += 1;
        *deg.entry(v).or_insert(0) += 1;
    }
    let parity_ok = deg.iter().all(|(&w, &d)| {
        let odd = d % 2 == 1;
        if w == s || w == t {
            odd
        } else {
            !odd
        }
    });
    if !parity_ok || !deg.contains_key(&s) || !deg.contains_key(&t) {
        return false;
    }
    // connectivity
    let mut reached: Vec<VertexId> = alloc::vec![s];
    let mut frontier = alloc::vec![s];
    while let Some(x) = frontier.pop() {
        for &(u, v) in edges {
            let y = if u == x {
                v
            } else if v == x {
                u
            } else {
                continue;
            };
            if !reached.contains(&y) {
                reached.push(y);
                frontier.push(y);
            }
        }
    }
    reached.len() == deg.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(n: u32, u: VertexId, v: VertexId) -> (LabeledMultigraph, InstanceId) {
        let mut g = LabeledMultigraph::new(n);
        let id = g.add_edge(EdgeLabel::demand(0), u, v).unwrap();
        (g, id)
    }

    #[test]
    fn vertex_parse_and_dense_roundtrip() {
        assert_eq!(VertexId::parse("a3"), Some(VertexId::a(3)));
        assert_eq!(VertexId::parse("b12"), Some(VertexId::b(12)));
        assert_eq!(VertexId::parse("c1"), None);
        assert_eq!(VertexId::parse("a"), None);
        assert_eq!(VertexId::parse("a-1"), None);
        for i in 0..10 {
            assert_eq!(VertexId::from_dense(i, 5).dense(5), i);
        }
    }

    #[test]
    fn demand_graph_aggregates_and_rejects_loops() {
        let mut d = DemandGraph::new(2).unwrap();
        d.add_edge(VertexId::a(1), VertexId::b(1), 1).unwrap();
        d.add_edge(VertexId::b(1), VertexId::a(1), 2).unwrap();
        assert_eq!(d.edges().len(), 1);
        assert_eq!(d.multiplicity(VertexId::a(1), VertexId::b(1)), 3);
        assert_eq!(d.edge_count(), 3);
        assert_eq!(d.max_degree(), 3);
        assert_eq!(d.add_edge(VertexId::a(1), VertexId::a(1), 1), Err(GraphError::Loop(VertexId::a(1))));
        assert!(matches!(
            d.add_edge(VertexId::a(5), VertexId::b(1), 1),
            Err(GraphError::OutOfRange { .. })
        ));
    }

    #[test]
    fn lift_to_opposite_vertex() {
        let (mut g, id) = single(3, VertexId::a(1), VertexId::a(2));
        let r = g.lift(id, VertexId::b(1)).unwrap();
        assert!(matches!(r, Lifted::Split(_, _)));
        assert_eq!(g.degree(VertexId::b(1)), 2);
        assert_eq!(g.degree(VertexId::a(1)), 1);
        assert_eq!(g.multiplicity(VertexId::a(1), VertexId::b(1)), 1);
        assert_eq!(g.multiplicity(VertexId::b(1), VertexId::a(2)), 1);
        assert_eq!(g.multiplicity(VertexId::a(1), VertexId::a(2)), 0);
        assert!(g.instances().all(|(_, l, _, _)| l == EdgeLabel::demand(0)));
    }

    #[test]
    fn lift_to_endpoint_is_noop() {
        let (mut g, id) = single(3, VertexId::a(1), VertexId::a(2));
        assert_eq!(g.lift(id, VertexId::a(1)).unwrap(), Lifted::Unchanged(id));
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.lift_count(), 0);
    }

    #[test]
    fn lift_crossing_edge_to_same_side_vertex() {
        let (mut g, id) = single(3, VertexId::a(1), VertexId::b(1));
        g.lift(id, VertexId::a(2)).unwrap();
        assert_eq!(g.multiplicity(VertexId::a(1), VertexId::a(2)), 1);
        assert_eq!(g.multiplicity(VertexId::a(2), VertexId::b(1)), 1);
    }

    #[test]
    fn lift_missing_instance_errors() {
        let (mut g, id) = single(3, VertexId::a(1), VertexId::b(1));
        g.lift(id, VertexId::a(2)).unwrap();
        assert_eq!(g.lift(id, VertexId::a(3)), Err(GraphError::MissingInstance(id)));
    }

    #[test]
    fn resolve_simple_vertex_does_nothing() {
        let (mut g, _) = single(3, VertexId::a(1), VertexId::b(1));
        let done = g.resolve(VertexId::a(1), &[VertexId::b(2), VertexId::b(3)]).unwrap();
        assert!(done.is_empty());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn resolve_bundle_uses_targets_in_order() {
        let d = DemandGraph::from_edges(3, [(VertexId::a(1), VertexId::b(1), 3)]).unwrap();
        let mut g = LabeledMultigraph::from_demand(&d);
        let targets = [VertexId::b(1), VertexId::b(2), VertexId::b(3)];
        let done = g.resolve(VertexId::a(1), &targets).unwrap();
        let used: Vec<_> = done.iter().map(|&(_, t)| t).collect();
        assert_eq!(used, [VertexId::b(2), VertexId::b(3)]);
        assert!(g.is_resolved(VertexId::a(1)));
        assert_eq!(g.neighbors(VertexId::a(1)), [VertexId::b(1), VertexId::b(2), VertexId::b(3)]);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.multiplicity(VertexId::b(2), VertexId::b(1)), 1);
    }

    #[test]
    fn resolve_single_monochromatic_edge() {
        let d = DemandGraph::from_edges(
            3,
            [(VertexId::a(1), VertexId::a(2), 1), (VertexId::a(1), VertexId::b(1), 1)],
        )
        .unwrap();
        let mut g = LabeledMultigraph::from_demand(&d);
        let done = g.resolve(VertexId::a(1), &[VertexId::b(2), VertexId::b(3)]).unwrap();
        assert_eq!(done.len(), 1);
        assert_eq!(done[0].1, VertexId::b(2));
        assert_eq!(g.multiplicity(VertexId::a(1), VertexId::b(2)), 1);
        assert_eq!(g.multiplicity(VertexId::b(2), VertexId::a(2)), 1);
    }

    #[test]
    fn resolve_reports_insufficient_targets() {
        let d = DemandGraph::from_edges(3, [(VertexId::a(1), VertexId::b(1), 3)]).unwrap();
        let mut g = LabeledMultigraph::from_demand(&d);
        let err = g.resolve(VertexId::a(1), &[VertexId::b(1), VertexId::b(2)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::InsufficientTargets {
                vertex: VertexId::a(1),
                needed: 2,
                available: 1
            }
        );
    }

    #[test]
    fn gamma_counts_distinct_neighbors() {
        let d = DemandGraph::from_edges(
            3,
            [(VertexId::a(1), VertexId::b(1), 2), (VertexId::a(1), VertexId::a(2), 1)],
        )
        .unwrap();
        let g = LabeledMultigraph::from_demand(&d);
        assert_eq!(g.gamma(VertexId::a(1), Side::B), 1);
        assert_eq!(g.edges_into(VertexId::a(1), Side::B), 2);
        assert_eq!(g.gamma(VertexId::a(1), Side::A), 1);
        assert_eq!(g.resolution_demand(VertexId::a(1)), 2);
    }
}
