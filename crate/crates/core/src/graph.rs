//! Finite simple graphs on at most 64 vertices.
//!
//! Neighborhoods are stored as [`VertexSet`] bit masks. All operations that
//! shrink a graph (induced subgraphs, vertex and star deletion, stripping
//! isolated vertices) relabel the surviving vertices `0..k` in ascending
//! order of their original index and hand back the map `new -> old`.

use std::collections::VecDeque;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, the cap is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("alpha = {0} is outside [0, 1]")]
    InvalidAlpha(Rational),
    #[error("coordinates: {0}")]
    InvalidCoordinates(String),
}

/// A finite simple undirected graph.
///
/// `coords`, when present, embeds the graph in the integer lattice: every
/// edge joins two points at L1 distance exactly one. Equality is structural
/// (vertex count and adjacency); coordinates are metadata.
#[derive(Clone, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<Vec<i64>>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Result of [`Graph::alpha_max_edge`]: `d = deg(x) >= deg(y) = e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaMaxEdge {
    pub x: usize,
    pub y: usize,
    pub d: usize,
    pub e: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            coords: None,
        })
    }

    /// Builds a graph from an edge list. Repeated edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighborhood masks, validating symmetry.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(GraphError::Loop(v));
            }
            if let Some(bad) = (nb - all).first() {
                return Err(GraphError::VertexOutOfRange { vertex: bad, n });
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            coords: None,
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Attaches lattice coordinates, checking that every edge has unit L1 length.
    pub fn with_coords(mut self, coords: Vec<Vec<i64>>) -> Result<Self, GraphError> {
        if coords.len() != self.n {
            return Err(GraphError::InvalidCoordinates(format!(
                "{} points for {} vertices",
                coords.len(),
                self.n
            )));
        }
        if let Some(dim) = coords.first().map(Vec::len) {
            if coords.iter().any(|c| c.len() != dim) {
                return Err(GraphError::InvalidCoordinates("mixed dimensions".into()));
            }
        }
        for (u, v) in self.edges() {
            if l1_distance(&coords[u], &coords[v]) != 1 {
                return Err(GraphError::InvalidCoordinates(format!(
                    "edge {u}-{v} does not have unit length"
                )));
            }
        }
        self.coords = Some(coords);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn coords(&self) -> Option<&[Vec<i64>]> {
        self.coords.as_deref()
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// N(X), the union of the open neighborhoods of the members of `x`.
    pub fn neighborhood_of(&self, x: VertexSet) -> VertexSet {
        x.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let above = self.adj[u] - VertexSet::full(u + 1);
            above.iter().map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// G[W], relabeled in ascending order; the second component maps new
    /// indices to original ones.
    pub fn induced_subgraph(&self, w: VertexSet) -> (Graph, Vec<usize>) {
        let w = w & self.vertices();
        let map = w.to_vec();
        let adj = map
            .iter()
            .map(|&old| {
                (self.adj[old] & w)
                    .iter()
                    .map(|u| w.rank_of(u))
                    .collect::<VertexSet>()
            })
            .collect();
        let coords = self
            .coords
            .as_ref()
            .map(|c| map.iter().map(|&old| c[old].clone()).collect());
        (
            Graph {
                n: map.len(),
                adj,
                coords,
            },
            map,
        )
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().without(v)).0
    }

    /// G − st(v) = G[V ∖ N[v]].
    pub fn delete_star(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices() - self.closed_neighbors(v)).0
    }

    /// Complement graph. Lattice coordinates are dropped since the complement
    /// is no longer a unit-distance graph.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| (all - self.adj[v]).without(v))
            .collect();
        Graph {
            n: self.n,
            adj,
            coords: None,
        }
    }

    /// Disjoint union, `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| VertexSet::from_bits(s.bits() << self.n)),
        );
        Ok(Graph {
            n,
            adj,
            coords: None,
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph {
            n: self.n,
            adj,
            coords: None,
        }
    }

    /// is(G).
    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Ḡ = G − is(G), with the relabeling map.
    pub fn strip_isolated(&self) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices() - self.isolated_vertices())
    }

    /// Vertices of `within` that have no neighbor inside `within`.
    #[inline]
    pub fn isolated_within(&self, within: VertexSet) -> VertexSet {
        within
            .iter()
            .filter(|&v| !self.adj[v].intersects(within))
            .collect()
    }

    #[inline]
    pub fn has_isolated_within(&self, within: VertexSet) -> bool {
        within.iter().any(|v| !self.adj[v].intersects(within))
    }

    pub fn is_independent(&self, a: VertexSet) -> bool {
        a.iter().all(|v| !self.adj[v].intersects(a))
    }

    pub fn is_clique(&self, a: VertexSet) -> bool {
        a.iter().all(|v| (a.without(v)).is_subset(self.adj[v]))
    }

    /// Smallest vertex whose (nonempty) neighborhood induces a clique.
    pub fn find_simplicial_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| !self.adj[v].is_empty() && self.is_clique(self.adj[v]))
    }

    /// Chordality by repeated deletion of a vertex whose neighborhood in the
    /// remaining graph is a clique (a perfect elimination ordering exists
    /// iff this never gets stuck).
    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let mut remaining = self.vertices();
        let mut order = Vec::with_capacity(self.n);
        while !remaining.is_empty() {
            let v = remaining
                .iter()
                .find(|&v| self.is_clique(self.adj[v] & remaining))?;
            order.push(v);
            remaining.remove(v);
        }
        Some(order)
    }

    /// Long: the vertices of degree > 2 form an independent set.
    pub fn is_long(&self) -> bool {
        let heavy: VertexSet = (0..self.n).filter(|&v| self.degree(v) > 2).collect();
        self.is_independent(heavy)
    }

    /// No induced K_{1,m}: no vertex has `m` pairwise non-adjacent neighbors.
    pub fn is_k1m_free(&self, m: usize) -> bool {
        assert!(m >= 1, "K_(1,m) needs m >= 1");
        (0..self.n).all(|v| {
            self.degree(v) < m || self.independence_number_within(self.adj[v]) < m
        })
    }

    pub fn is_claw_free(&self) -> bool {
        self.is_k1m_free(3)
    }

    /// Size of a largest independent subset of `within`.
    pub fn independence_number_within(&self, within: VertexSet) -> usize {
        let mut best = 0;
        self.mis_branch(within, 0, &mut best);
        best
    }

    fn mis_branch(&self, cand: VertexSet, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some(v) = cand
            .iter()
            .max_by_key(|&v| ((self.adj[v] & cand).len(), std::cmp::Reverse(v)))
        else {
            *best = size;
            return;
        };
        if (self.adj[v] & cand).len() <= 1 {
            // Max degree <= 1: disjoint edges and isolated vertices, one per component.
            let edges = cand.iter().filter(|&u| (self.adj[u] & cand).len() == 1).count() / 2;
            let isolated = cand.iter().filter(|&u| !self.adj[u].intersects(cand)).count();
            *best = (*best).max(size + edges + isolated);
            return;
        }
        self.mis_branch(cand - self.closed_neighbors(v), size + 1, best);
        self.mis_branch(cand.without(v), size, best);
    }

    /// An edge (x, y) maximizing deg(x) + α·deg(y) over ordered pairs with
    /// deg(x) ≥ deg(y). Ties go to the lexicographically smallest (x, y).
    pub fn alpha_max_edge(&self, alpha: Rational) -> Result<AlphaMaxEdge, GraphError> {
        if alpha < Rational::zero() || alpha > Rational::one() {
            return Err(GraphError::InvalidAlpha(alpha));
        }
        let mut best: Option<(Rational, AlphaMaxEdge)> = None;
        for x in 0..self.n {
            let d = self.degree(x);
            for y in self.adj[x] {
                let e = self.degree(y);
                if d < e {
                    continue;
                }
                let score = Rational::from_integer(d as i64) + alpha * Rational::from_integer(e as i64);
                if best.as_ref().is_none_or(|(s, _)| score > *s) {
                    best = Some((score, AlphaMaxEdge { x, y, d, e }));
                }
            }
        }
        best.map(|(_, edge)| edge).ok_or(GraphError::NoEdges)
    }

    /// BFS distance; `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut seen = VertexSet::singleton(u);
        let mut frontier = VertexSet::singleton(u);
        let mut dist = 0;
        while !frontier.is_empty() {
            dist += 1;
            let next = self.neighborhood_of(frontier) - seen;
            if next.contains(v) {
                return Some(dist);
            }
            seen |= next;
            frontier = next;
        }
        None
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut seen = VertexSet::EMPTY;
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::singleton(v);
            let mut frontier = comp;
            while !frontier.is_empty() {
                frontier = self.neighborhood_of(frontier) - comp;
                comp |= frontier;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u] - seen {
                seen.insert(w);
                queue.push_back(w);
            }
        }
        seen == self.vertices()
    }
}

pub fn l1_distance(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}
