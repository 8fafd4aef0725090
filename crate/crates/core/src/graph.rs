//! Immutable simple graphs on at most 64 vertices, stored as per-vertex
//! neighbor bitsets, plus the [`VertexSet`] carrier used throughout.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard vertex limit: a [`VertexSet`] is a single machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph on {n} vertices exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("adjacency rows disagree on the pair ({u}, {v})")]
    Asymmetric { u: usize, v: usize },
}

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

// ============================================================================
// VertexSet
// ============================================================================

/// A set of vertex indices, stored as one 64-bit word.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// All vertices `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to the host's vertex range `0..n`.
    #[inline]
    pub const fn complement_within(self, n: usize) -> Self {
        VertexSet(!self.0 & low_bits(n))
    }

    #[inline]
    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub const fn least(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over members.
    #[inline]
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs: Vec<usize> = Vec::deserialize(d)?;
        for &v in &vs {
            if v >= MAX_VERTICES {
                return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
            }
        }
        Ok(vs.into_iter().collect())
    }
}

// ============================================================================
// Graph
// ============================================================================

/// An immutable simple graph on `n <= 64` vertices.
///
/// Adjacency is symmetric and irreflexive; every bitset uses only the low
/// `n` bit positions. Two graphs built from the same edge set compare equal
/// regardless of label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "Graph({l}, n={}, m={})", self.n, self.edge_count()),
            None => write!(f, "Graph(n={}, m={})", self.n, self.edge_count()),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            label: None,
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let mask = low_bits(n);
        for v in 0..n {
            g.adj[v] = mask & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_mut(u, v)?;
        }
        Ok(g)
    }

    /// Builds from raw bitsets; validates symmetry, irreflexivity and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mask = low_bits(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    v: (row & !mask).trailing_zeros() as usize,
                    n,
                });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop { v });
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                let uv = adj[u] & bit(v) != 0;
                let vu = adj[v] & bit(u) != 0;
                if uv != vu {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            label: None,
        })
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | bit(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_bits(u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Union of open neighborhoods over `set` (may intersect `set` itself).
    pub fn neighbors_of_set(&self, set: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in set.iter() {
            acc |= self.adj[v];
        }
        VertexSet(acc)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset_of(self.neighbors(v)))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.neighbors(v).intersects(set))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    // ------------------------------------------------------------------
    // Composition
    // ------------------------------------------------------------------

    pub fn complement(&self) -> Graph {
        let mask = low_bits(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        Graph {
            n: self.n,
            adj,
            label: None,
        }
    }

    /// Join: disjoint union plus all cross edges. `other`'s vertices are
    /// re-indexed to start at `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = self.disjoint_union(other)?;
        let left = low_bits(self.n);
        let right = low_bits(n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are re-indexed to start at `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph {
            n,
            adj,
            label: None,
        })
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph, GraphError> {
        let n = self
            .n
            .checked_mul(k)
            .ok_or(GraphError::TooManyVertices { n: usize::MAX })?;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = Graph::empty(0)?;
        for _ in 0..k {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// Replaces every edge by a two-edge path through a fresh vertex.
    /// Subdivision vertices are appended after the originals, in the
    /// lexicographic order of the edges they subdivide.
    pub fn subdivide_once(&self) -> Result<Graph, GraphError> {
        let edges = self.edges();
        let n = self.n + edges.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = Graph::empty(n)?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            let w = self.n + i;
            g.add_edge_mut(u, w)?;
            g.add_edge_mut(w, v)?;
        }
        Ok(g)
    }

    /// Subgraph induced on `set`, plus the map from new indices back to the
    /// original vertices (ascending).
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set.intersect(self.vertex_set()).iter().collect();
        let k = old.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    adj[i] |= bit(j);
                }
            }
        }
        (
            Graph {
                n: k,
                adj,
                label: None,
            },
            old,
        )
    }

    /// Relabels vertices: `perm[i]` is the new index of old vertex `i`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph {
            n: self.n,
            adj,
            label: self.label.clone(),
        }
    }

    // ------------------------------------------------------------------
    // Connectivity
    // ------------------------------------------------------------------

    /// Connected component containing `v`, restricted to `within`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(v));
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let grown = self
                .neighbors_of_set(frontier)
                .intersect(within)
                .minus(comp);
            comp = comp.union(grown);
            frontier = grown;
        }
        comp
    }

    /// Maximal connected pieces, sorted by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = remaining.least() {
            let comp = self.component_of(v, remaining);
            remaining = remaining.minus(comp);
            out.push(comp);
        }
        out
    }

    /// The empty and one-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertex_set()) == self.vertex_set()
    }

    /// Whether `G[set]` is connected (empty and singleton sets count).
    pub fn is_connected_subset(&self, set: VertexSet) -> bool {
        match set.least() {
            None => true,
            Some(v) => self.component_of(v, set) == set,
        }
    }

    /// Standard vertex connectivity. Complete graphs give `n - 1`; the empty
    /// graph gives 0; disconnected graphs give 0.
    pub fn vertex_connectivity(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        if self.is_complete() {
            return self.n - 1;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = self.n - 1;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    best = best.min(self.local_connectivity(u, v));
                }
            }
        }
        best
    }

    /// Maximum number of internally vertex-disjoint `s`-`t` paths for
    /// non-adjacent `s`, `t` (Menger), via unit-capacity max flow on the
    /// split graph.
    fn local_connectivity(&self, s: usize, t: usize) -> usize {
        debug_assert!(!self.has_edge(s, t) && s != t);
        // Node 2v = "in", 2v+1 = "out". Arc capacities over a dense matrix:
        // small n makes this comfortably fast.
        let nn = 2 * self.n;
        let mut cap = vec![vec![0u8; nn]; nn];
        for v in 0..self.n {
            cap[2 * v][2 * v + 1] = 1;
        }
        cap[2 * s][2 * s + 1] = 64;
        cap[2 * t][2 * t + 1] = 64;
        for (u, v) in self.edges() {
            cap[2 * u + 1][2 * v] = 64;
            cap[2 * v + 1][2 * u] = 64;
        }
        let src = 2 * s + 1;
        let dst = 2 * t;
        let mut flow = 0usize;
        loop {
            // BFS augmenting path.
            let mut prev = vec![usize::MAX; nn];
            let mut queue = std::collections::VecDeque::new();
            prev[src] = src;
            queue.push_back(src);
            while let Some(x) = queue.pop_front() {
                if x == dst {
                    break;
                }
                for y in 0..nn {
                    if cap[x][y] > 0 && prev[y] == usize::MAX {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[dst] == usize::MAX {
                return flow;
            }
            let mut y = dst;
            while y != src {
                let x = prev[y];
                cap[x][y] -= 1;
                cap[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
    }
}
