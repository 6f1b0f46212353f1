//! Simple undirected graphs on at most 62 vertices, stored as one neighbour
//! mask per vertex.

mod canon;
mod generate;
mod graph6;
mod matching;

pub use canon::{canonical_form, canonical_form_colored, canonical_form_exhaustive, CanonicalForm};
pub use generate::{enumerate_connected_graphs, MAX_GENERATOR_VERTICES};
pub use graph6::{emit_graph6, parse_edge_list, parse_graph6};
pub use matching::{
    independence_domination, independence_number, matching_numbers, maximum_independent_set,
    MatchingNumbers,
};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 62;

/// A subset of the vertices `{0, .., n-1}` of some graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |m, v| m | (1u64 << v)))
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
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

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
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

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Finite simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbour masks, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = low_bits(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in Bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Parse(format!(
                        "adjacency not symmetric between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|&r| r != 0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Union of `N[v]` over `v` in `set`.
    pub fn closed_neighborhood(&self, set: VertexSet) -> VertexSet {
        VertexSet(set.iter().fold(set.0, |m, v| m | self.adj[v]))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn component_mask(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connectivity of the subgraph induced on `within`. Empty sets count as
    /// connected.
    pub(crate) fn is_connected_within(&self, within: u64) -> bool {
        if within == 0 {
            return true;
        }
        self.component_mask(within.trailing_zeros() as usize, within) == within
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(low_bits(self.n))
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> VertexSet {
        let full = low_bits(self.n);
        let mut cuts = 0u64;
        for v in 0..self.n {
            if !self.is_connected_within(full & !(1 << v)) {
                cuts |= 1 << v;
            }
        }
        VertexSet(cuts)
    }

    /// Relabels so that new vertex `k` is old vertex `order[k]`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n);
        let mut pos = vec![0usize; self.n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let adj = order
            .iter()
            .map(|&v| Bits(self.adj[v]).fold(0u64, |m, u| m | 1 << pos[u]))
            .collect();
        Graph { n: self.n, adj }
    }

    /// The graph obtained by deleting vertex `v`; later vertices shift down.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let low = low_bits(v);
        let squeeze = |row: u64| (row & low) | ((row >> 1) & !low);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &row)| squeeze(row))
            .collect();
        Graph { n: self.n - 1, adj }
    }

    /// Appends a new vertex adjacent to exactly `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        if !neighbors.is_subset(self.vertex_set()) {
            let vertex = (neighbors.0 & !low_bits(self.n)).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let new = self.n;
        let mut adj = self.adj.clone();
        for u in neighbors.iter() {
            adj[u] |= 1 << new;
        }
        adj.push(neighbors.0);
        Ok(Graph { n: new + 1, adj })
    }

    /// Induced subgraph on `set`, vertices renumbered in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let order: Vec<usize> = set.iter().collect();
        let mut pos = vec![usize::MAX; self.n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let adj = order
            .iter()
            .map(|&v| Bits(self.adj[v] & set.0).fold(0u64, |m, u| m | 1 << pos[u]))
            .collect();
        Graph {
            n: order.len(),
            adj,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Adds a vertex joined to every vertex outside the independent set `s`.
pub fn s_suspension(g: &Graph, s: VertexSet) -> Result<Graph> {
    if !s.is_subset(g.vertex_set()) {
        let vertex = (s.mask() & !low_bits(g.n())).trailing_zeros() as usize;
        return Err(Error::VertexOutOfRange { vertex, n: g.n() });
    }
    for v in s.iter() {
        let clash = g.neighbors(v).mask() & s.mask();
        if clash != 0 {
            return Err(Error::NotIndependent(v, clash.trailing_zeros() as usize));
        }
    }
    let outside = VertexSet::from_mask(low_bits(g.n()) & !s.mask());
    g.with_vertex(outside)
}

/// Small named graphs used throughout the tests and the CLI.
pub mod named {
    use super::Graph;

    /// Star on `n >= 1` vertices, centre 0.
    pub fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("star fits")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path fits")
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle fits")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete graph fits")
    }

    /// `k` triangles sharing vertex 0.
    pub fn star_triangle(k: usize) -> Graph {
        let edges = (0..k).flat_map(|i| {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            [(0, a), (0, b), (a, b)]
        });
        Graph::from_edges(2 * k + 1, edges).expect("star triangle fits")
    }
}
