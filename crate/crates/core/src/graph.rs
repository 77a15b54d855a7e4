//! Simple graphs of maximum degree three on at most 64 vertices.
//!
//! Vertices are contiguous indices `0..n`. Every vertex subset is a
//! [`VertexSet`], a 64-bit mask, so set algebra on neighborhoods, balls and
//! components is constant time.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Largest degree a vertex may have.
pub const MAX_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} would exceed degree {MAX_DEGREE}")]
    DegreeExceeded { vertex: usize },
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("edge {u}-{v} is not present")]
    MissingEdge { u: usize, v: usize },
    #[error("degree-2 vertex {vertex} has both edges to the same neighbor; smoothing would create a loop")]
    NotSuppressible { vertex: usize },
    #[error("suppression needs a connected graph with at least one 3-vertex")]
    SuppressPrecondition,
}

/// A set of vertices stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An immutable simple graph with every degree at most three.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubcubicGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>,
}

impl fmt::Debug for SubcubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubcubicGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl SubcubicGraph {
    /// Validates an edge list and builds the graph.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![Vec::with_capacity(MAX_DEGREE); n];
        let mut masks = vec![0u64; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            if masks[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            for x in [u, v] {
                if adj[x].len() == MAX_DEGREE {
                    return Err(GraphError::DegreeExceeded { vertex: x });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SubcubicGraph { n, adj, masks })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::build(n, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Open neighborhood as a set.
    #[inline]
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet(self.masks[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.masks[u] >> v & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Vertex count per degree, indexed `0..=3`.
    pub fn degree_tally(&self) -> [usize; 4] {
        let mut t = [0; 4];
        for v in 0..self.n {
            t[self.degree(v)] += 1;
        }
        t
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.masks[v] | 1 << v)
    }

    /// `N[X]`.
    pub fn closed_neighborhood_of_set(&self, x: VertexSet) -> VertexSet {
        x.iter().fold(x, |acc, v| acc.union(self.neighbor_set(v)))
    }

    /// All vertices at distance at most two from `v`.
    pub fn ball2(&self, v: usize) -> VertexSet {
        self.closed_neighborhood_of_set(self.closed_neighborhood(v))
    }

    /// BFS distance, `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.closed_neighborhood_of_set(frontier).difference(seen);
            if next.contains(v) {
                return Some(d);
            }
            seen = seen.union(next);
            frontier = next;
        }
        None
    }

    /// Distances from `source` to every vertex (`None` if unreachable).
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `∂(X)`: edges with exactly one endpoint in `x`, each as `(inside, outside)`.
    pub fn boundary(&self, x: VertexSet) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in x.iter().filter(|&u| u < self.n) {
            for &v in &self.adj[u] {
                if !x.contains(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn boundary_size(&self, x: VertexSet) -> usize {
        x.iter()
            .filter(|&u| u < self.n)
            .map(|u| (self.masks[u] & !x.0).count_ones() as usize)
            .sum()
    }

    /// Number of edges with both endpoints in `x`.
    pub fn edges_within(&self, x: VertexSet) -> usize {
        x.iter()
            .map(|u| (self.masks[u] & x.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Connected component containing `v`, restricted to vertices of `within`.
    pub fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let next = self
                .closed_neighborhood_of_set(frontier)
                .intersection(within)
                .difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.component_within(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Partition of `V` into connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_within(0, self.vertices()).len() == self.n
    }

    /// `ω_G(v)`: 9 for an isolated vertex, `6 - d(v)` otherwise.
    pub fn vertex_weight(&self, v: usize) -> i64 {
        match self.degree(v) {
            0 => 9,
            d => 6 - d as i64,
        }
    }

    /// `ω_G(X)`, the sum of vertex weights over `x`.
    pub fn set_weight(&self, x: VertexSet) -> i64 {
        x.iter().map(|v| self.vertex_weight(v)).sum()
    }

    /// Degree tallies, bad-component counts and the potential `ω(G)`.
    pub fn classify_bad_components(&self) -> WeightReport {
        let t = self.degree_tally();
        let (mut b1, mut b2) = (0, 0);
        for comp in self.components() {
            match self.bad_shape(comp) {
                Some(BadShape::C4) => b1 += 1,
                Some(BadShape::K4Star) => b2 += 1,
                None => {}
            }
        }
        WeightReport::new(t, b1, b2)
    }

    /// `ω(G) = 9n₀ + 5n₁ + 4n₂ + 3n₃ + 2b(G)`.
    pub fn omega(&self) -> i64 {
        self.classify_bad_components().omega
    }

    /// Recognizes a component isomorphic to `C₄` or to `K₄*`.
    ///
    /// `comp` must be a full connected component of the graph.
    pub fn bad_shape(&self, comp: VertexSet) -> Option<BadShape> {
        let mut degs = [0usize; 4];
        for v in comp.iter() {
            degs[self.degree(v)] += 1;
        }
        match comp.len() {
            4 if degs[2] == 4 => Some(BadShape::C4),
            5 if degs[3] == 4 && degs[2] == 1 => {
                // K₄ with one edge subdivided: the 2-vertex's neighbors are not adjacent.
                let s = comp.iter().find(|&v| self.degree(v) == 2)?;
                let (a, b) = (self.adj[s][0], self.adj[s][1]);
                let rest = comp.without(s).without(a).without(b);
                let k4_minus = self.edges_within(comp.without(s)) == 5;
                (!self.has_edge(a, b) && k4_minus && rest.len() == 2).then_some(BadShape::K4Star)
            }
            _ => None,
        }
    }

    /// `𝒞(X)`: `x` together with every isolated vertex and every `C₄`-component of `G - X`.
    pub fn closure(&self, x: VertexSet) -> VertexSet {
        let rest = self.vertices().difference(x);
        let mut out = x;
        for comp in self.components_within(rest) {
            if comp.len() == 1 || self.is_c4_component_within(comp) {
                out = out.union(comp);
            }
        }
        out
    }

    /// Whether `comp` (a component of some induced subgraph) induces a 4-cycle.
    pub fn is_c4_component_within(&self, comp: VertexSet) -> bool {
        comp.len() == 4
            && comp
                .iter()
                .all(|v| (self.masks[v] & comp.0).count_ones() == 2)
    }

    /// `G[X]` with a map back to parent indices.
    pub fn induced_subgraph(&self, x: VertexSet) -> Subgraph {
        let parent: Vec<usize> = x.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &p) in parent.iter().enumerate() {
            index[p] = i;
        }
        let mut edges = Vec::new();
        for (i, &p) in parent.iter().enumerate() {
            for &q in &self.adj[p] {
                if x.contains(q) && index[q] > i {
                    edges.push((i, index[q]));
                }
            }
        }
        let graph = SubcubicGraph::build(parent.len(), &edges)
            .expect("induced subgraph of a valid graph is valid");
        Subgraph { graph, parent }
    }

    /// `G - X`.
    pub fn delete_vertices(&self, x: VertexSet) -> Subgraph {
        self.induced_subgraph(self.vertices().difference(x))
    }

    /// `G - uv`, keeping vertex indices.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<SubcubicGraph, GraphError> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge { u, v });
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        SubcubicGraph::build(self.n, &edges)
    }

    /// `G + uv`, keeping vertex indices.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<SubcubicGraph, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        SubcubicGraph::build(self.n, &edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &SubcubicGraph) -> Result<SubcubicGraph, GraphError> {
        let shift = self.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        SubcubicGraph::build(self.n + other.n, &edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> SubcubicGraph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        SubcubicGraph::build(self.n, &edges).expect("relabeling preserves validity")
    }

    /// Whether some vertex of `v`'s neighborhood pair is adjacent.
    pub fn on_triangle(&self, v: usize) -> bool {
        let nb = &self.adj[v];
        (0..nb.len()).any(|i| (i + 1..nb.len()).any(|j| self.has_edge(nb[i], nb[j])))
    }

    /// Smooths every degree-2 vertex of a connected graph with a 3-vertex.
    ///
    /// The result may carry parallel edges; [`SuppressedGraph::is_simple`]
    /// reports whether it does.
    pub fn suppress_degree2(&self) -> Result<SuppressedGraph, GraphError> {
        if !self.is_connected() || self.max_degree() < 3 {
            return Err(GraphError::SuppressPrecondition);
        }
        // Multigraph as an edge list; removed edges are tombstoned.
        let mut edges: Vec<Option<(usize, usize)>> =
            self.edges().into_iter().map(Some).collect();
        let mut alive = vec![true; self.n];
        for s in (0..self.n).filter(|&v| self.degree(v) == 2) {
            let incident: Vec<usize> = (0..edges.len())
                .filter(|&i| matches!(edges[i], Some((a, b)) if a == s || b == s))
                .collect();
            debug_assert_eq!(incident.len(), 2);
            let other = |i: usize| {
                let (a, b) = edges[i].unwrap();
                if a == s {
                    b
                } else {
                    a
                }
            };
            let (x, y) = (other(incident[0]), other(incident[1]));
            if x == y {
                return Err(GraphError::NotSuppressible { vertex: s });
            }
            edges[incident[0]] = Some((x.min(y), x.max(y)));
            edges[incident[1]] = None;
            alive[s] = false;
        }
        let parent: Vec<usize> = (0..self.n).filter(|&v| alive[v]).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &p) in parent.iter().enumerate() {
            index[p] = i;
        }
        let mut out: Vec<(usize, usize)> = edges
            .into_iter()
            .flatten()
            .map(|(a, b)| {
                let (x, y) = (index[a], index[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        out.sort_unstable();
        let is_simple = out.windows(2).all(|w| w[0] != w[1]);
        Ok(SuppressedGraph {
            vertex_count: parent.len(),
            edges: out,
            parent,
            is_simple,
        })
    }
}

/// The two bad component shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BadShape {
    C4,
    K4Star,
}

/// Degree tallies, bad-component counts and `ω(G)`.
///
/// `omega` is the potential `ω(G)` and includes the `2b` term, which the
/// vertex-weight sum `ω_G(V(G))` does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub b1: usize,
    pub b2: usize,
    pub b: usize,
    pub omega: i64,
}

impl WeightReport {
    pub fn new(tally: [usize; 4], b1: usize, b2: usize) -> Self {
        let [n0, n1, n2, n3] = tally;
        let b = b1 + b2;
        let omega = 9 * n0 as i64 + 5 * n1 as i64 + 4 * n2 as i64 + 3 * n3 as i64 + 2 * b as i64;
        WeightReport { n0, n1, n2, n3, b1, b2, b, omega }
    }

    pub fn vertex_count(&self) -> usize {
        self.n0 + self.n1 + self.n2 + self.n3
    }
}

/// An induced subgraph with the parent index of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: SubcubicGraph,
    pub parent: Vec<usize>,
}

impl Subgraph {
    /// Maps a vertex set of the subgraph into parent coordinates.
    pub fn lift_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.parent[v]).collect()
    }
}

/// Result of smoothing all 2-vertices; may be a multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuppressedGraph {
    pub vertex_count: usize,
    /// Sorted, with repeats for parallel edges.
    pub edges: Vec<(usize, usize)>,
    pub parent: Vec<usize>,
    pub is_simple: bool,
}

impl SuppressedGraph {
    /// The result as a simple graph, when it is one.
    pub fn to_simple(&self) -> Option<SubcubicGraph> {
        if !self.is_simple {
            return None;
        }
        SubcubicGraph::build(self.vertex_count, &self.edges).ok()
    }
}
