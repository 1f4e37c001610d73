//! Simple graphs on at most 63 vertices, stored as one adjacency word per vertex.

mod generators;
mod io;

pub use generators::{Family, PlanarCertificate};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};

use crate::error::GraphError;
use std::fmt;

/// Largest supported order. A vertex set fits in a single `u64`.
pub const MAX_ORDER: usize = 63;

/// A set of vertices as a bit mask; bit `v` is vertex `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        VertexSet((1u64 << n) - 1)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
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
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    /// Complement relative to `0..n`.
    #[inline]
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::Capacity(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows(adj))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, &[])
    }

    /// Rows must already be symmetric and irreflexive.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let twice: u32 = adj.iter().map(|row| row.count_ones()).sum();
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &row)| row >> v & 1 == 0
                && VertexSet(row).iter().all(|u| adj[u] >> v & 1 == 1)));
        Graph {
            n: adj.len(),
            m: twice as usize / 2,
            adj,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Raw adjacency rows.
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Sum of degrees over `s`.
    pub fn degree_sum(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.degree(v)).sum()
    }

    /// `m[S]`: edges with both ends in `s`.
    pub fn induced_edge_count(&self, s: VertexSet) -> usize {
        let twice: u32 = s.iter().map(|v| (self.adj[v] & s.0).count_ones()).sum();
        twice as usize / 2
    }

    /// `m(S, V-S)`: edges with exactly one end in `s`.
    pub fn cut_edge_count(&self, s: VertexSet) -> usize {
        let outside = s.complement(self.n).0;
        s.iter()
            .map(|v| (self.adj[v] & outside).count_ones() as usize)
            .sum()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph, GraphError> {
        let total = self.n + other.n;
        if total > MAX_ORDER {
            return Err(GraphError::Capacity(total));
        }
        let shift = self.n;
        let left = VertexSet::full(shift).0;
        let right = VertexSet::full(total).0 & !left;
        let mut adj = Vec::with_capacity(total);
        adj.extend(
            self.adj
                .iter()
                .map(|&row| if cross { row | right } else { row }),
        );
        adj.extend(
            other
                .adj
                .iter()
                .map(|&row| (row << shift) | if cross { left } else { 0 }),
        );
        Ok(Graph::from_rows(adj))
    }

    /// Graph on the same vertices with the given set relabeled by `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph::from_rows(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {})", self.n, self.m, to_graph6(self))
    }
}

/// Degrees sorted non-decreasingly, with prefix sums.
///
/// `prefix[k]` is the sum of the `k` smallest degrees, so the `k` largest
/// degrees sum to `total() - prefix[n - k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    prefix: Vec<u64>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        let mut prefix = Vec::with_capacity(degrees.len() + 1);
        prefix.push(0);
        let mut acc = 0u64;
        for &d in &degrees {
            acc += d as u64;
            prefix.push(acc);
        }
        DegreeSequence { degrees, prefix }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Prefix sums, length `n + 1`, starting at 0.
    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn total(&self) -> u64 {
        self.prefix[self.degrees.len()]
    }

    /// Sum of the `k` smallest degrees.
    pub fn bottom_sum(&self, k: usize) -> u64 {
        self.prefix[k]
    }

    /// Sum of the `k` largest degrees.
    pub fn top_sum(&self, k: usize) -> u64 {
        self.total() - self.prefix[self.degrees.len() - k]
    }

    pub fn min(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.degrees.last().copied().unwrap_or(0)
    }
}
