//! Immutable simple undirected graphs over at most 62 vertices.
//!
//! Row `v` of the adjacency table is a `u64` whose set bits form the open
//! neighborhood `N(v)`. Everything derived (complement, induced subgraph)
//! is a new value; a constructed [`Graph`] is never mutated, so it can be
//! shared freely across threads.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count. Matches the single-byte graph6 order
/// form and keeps every adjacency row in one machine word.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0} is not a simple-graph edge")]
    SelfLoop(usize),
    #[error("unsupported graph order {0}; supported range is 1..=62")]
    UnsupportedOrder(usize),
    #[error("graph6 parse error at byte {at}: {reason}")]
    Graph6 { at: usize, reason: &'static str },
    #[error("graph is not connected")]
    NotConnected,
    #[error("empty vertex set")]
    EmptySet,
}

/// A set of vertex indices, stored as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet { bits: 1u64 << v }
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet { bits: u64::MAX }
        } else {
            VertexSet { bits: (1u64 << n) - 1 }
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.bits |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.bits &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet { bits: self.bits | other.bits }
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet { bits: self.bits & other.bits }
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet { bits: self.bits & !other.bits }
    }

    /// Least vertex in the set, if any.
    pub fn least(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over the members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
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

/// An immutable simple undirected graph on `1..=62` vertices.
///
/// Invariants: adjacency is symmetric, irreflexive, and every set bit is
/// below `n`. All constructors enforce them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::UnsupportedOrder(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph directly from adjacency rows, validating the
    /// symmetry / irreflexivity / range invariants.
    pub fn from_adj_rows(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::UnsupportedOrder(n));
        }
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let bad = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v: bad, n });
            }
            if row & (1u64 << v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                let uv = rows[u] & (1u64 << v) != 0;
                let vu = rows[v] & (1u64 << u) != 0;
                if uv != vu {
                    // Asymmetric input is a caller bug, not a data error.
                    panic!("asymmetric adjacency rows at ({u},{v})");
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edge list with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    /// Raw adjacency row for v.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood_of(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | (1u64 << v))
    }

    /// Union of closed neighborhoods over a nonempty vertex set
    /// (N[v] for a singleton, N[v1,v2] for a pair, and so on).
    pub fn closed_neighborhood(&self, vs: VertexSet) -> Result<VertexSet, GraphError> {
        if vs.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut bits = vs.bits();
        for v in vs.iter() {
            bits |= self.adj[v];
        }
        Ok(VertexSet::from_bits(bits))
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Breadth-first distances from `src`; `u32::MAX` marks unreachable.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[src] = 0;
        let mut frontier = 1u64 << src;
        let mut seen = frontier;
        let mut d = 0u32;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            let mut bits = next;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                dist[v] = d;
            }
            frontier = next;
        }
        dist
    }

    /// Shortest-path hop count, or `None` if `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>, GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { v: x, n: self.n });
            }
        }
        let d = self.bfs_distances(u)[v];
        Ok(if d == u32::MAX { None } else { Some(d) })
    }

    /// A shortest path from `u` to `v` inclusive, choosing the least-index
    /// predecessor at every hop. `None` if unreachable.
    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let dist = self.bfs_distances(v);
        if dist[u] == u32::MAX {
            return None;
        }
        let mut path = Vec::with_capacity(dist[u] as usize + 1);
        let mut cur = u;
        path.push(cur);
        while cur != v {
            let d = dist[cur];
            let next = self
                .neighbors(cur)
                .iter()
                .find(|&w| dist[w] == d - 1)
                .expect("bfs distance field is locally decreasing");
            path.push(next);
            cur = next;
        }
        Some(path)
    }

    pub fn is_connected(&self) -> bool {
        let dist = self.bfs_distances(0);
        dist.iter().all(|&d| d != u32::MAX)
    }

    /// Maximum pairwise distance. Errors on disconnected graphs.
    pub fn diameter(&self) -> Result<u32, GraphError> {
        let mut best = 0;
        for v in 0..self.n {
            let dist = self.bfs_distances(v);
            for &d in &dist {
                if d == u32::MAX {
                    return Err(GraphError::NotConnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Max distance from `v` to any vertex; `None` when disconnected.
    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        let dist = self.bfs_distances(v);
        let mut best = 0;
        for &d in &dist {
            if d == u32::MAX {
                return None;
            }
            best = best.max(d);
        }
        Some(best)
    }

    /// Edge present iff absent here; an involution.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Connected components of the induced subgraph on `V \ removed`,
    /// ordered by least member. Removing everything yields an empty list.
    pub fn components_after_removal(&self, removed: VertexSet) -> Vec<VertexSet> {
        let alive = self.all_vertices().minus(removed);
        let mut unvisited = alive.bits();
        let mut out = Vec::new();
        while unvisited != 0 {
            let start = unvisited.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut bits = frontier;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[v];
                }
                next &= alive.bits() & !comp;
                comp |= next;
                frontier = next;
            }
            unvisited &= !comp;
            out.push(VertexSet::from_bits(comp));
        }
        out
    }

    /// Induced subgraph on a nonempty vertex set, plus the map from new
    /// indices back to the original vertices (ascending).
    pub fn induced_subgraph(&self, vs: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if vs.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let map: Vec<usize> = vs.iter().collect();
        if *map.last().unwrap() >= self.n {
            return Err(GraphError::VertexOutOfRange { v: *map.last().unwrap(), n: self.n });
        }
        let mut adj = vec![0u64; map.len()];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1u64 << j;
                }
            }
        }
        Ok((Graph { n: map.len(), adj }, map))
    }

    /// Relabels vertices by `perm` (new index `perm[v]` for old `v`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1u64 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Greedy dominating set (most new coverage first, least index on
    /// ties). Cops opening on a dominating set capture in one move, so the
    /// size bounds cop-number iteration.
    pub fn greedy_dominating_set(&self) -> VertexSet {
        let full = self.all_vertices().bits();
        let mut covered = 0u64;
        let mut set = VertexSet::EMPTY;
        while covered != full {
            let best = (0..self.n)
                .max_by_key(|&v| {
                    let gain = ((self.adj[v] | (1u64 << v)) & !covered).count_ones();
                    (gain, std::cmp::Reverse(v))
                })
                .unwrap();
            set.insert(best);
            covered |= self.adj[best] | (1u64 << best);
        }
        set
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Convenience constructors for the small named graphs used all over the
/// tests and the pattern module.
pub mod small {
    use super::Graph;

    pub fn path(k: usize) -> Graph {
        let edges: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(k, &edges).expect("valid path")
    }

    pub fn cycle(l: usize) -> Graph {
        assert!(l >= 3);
        let mut edges: Vec<_> = (0..l - 1).map(|i| (i, i + 1)).collect();
        edges.push((l - 1, 0));
        Graph::from_edges(l, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    /// Star K_{1,k} with center 0.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Graph::from_edges(k + 1, &edges).expect("valid star")
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner 5-star 5..9.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("valid petersen")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;

    #[test]
    fn from_edges_k2_and_c4() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.has_edge(0, 1) && k2.has_edge(1, 0));

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.degree(0), 2);
        // duplicates collapse
        let c4b = Graph::from_edges(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, c4b);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { v: 3, n: 3 }
        );
        assert_eq!(Graph::from_edges(0, &[]).unwrap_err(), GraphError::UnsupportedOrder(0));
        assert_eq!(Graph::from_edges(63, &[]).unwrap_err(), GraphError::UnsupportedOrder(63));
    }

    #[test]
    fn closed_neighborhoods() {
        let p3 = path(3);
        let got = p3.closed_neighborhood(VertexSet::singleton(1)).unwrap();
        assert_eq!(got, VertexSet::from_iter([0, 1, 2]));

        // N[v0,v1] on P5 = {0,1,2}
        let p5 = path(5);
        let pair = VertexSet::from_iter([0, 1]);
        assert_eq!(p5.closed_neighborhood(pair).unwrap(), VertexSet::from_iter([0, 1, 2]));

        let k4 = complete(4);
        assert_eq!(k4.closed_neighborhood(VertexSet::singleton(0)).unwrap(), k4.all_vertices());

        assert_eq!(p3.closed_neighborhood(VertexSet::EMPTY).unwrap_err(), GraphError::EmptySet);
    }

    #[test]
    fn distances_and_diameter() {
        let p5 = path(5);
        assert_eq!(p5.distance(0, 4).unwrap(), Some(4));
        assert_eq!(p5.distance(2, 2).unwrap(), Some(0));
        assert_eq!(p5.diameter().unwrap(), 4);

        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.distance(0, 2).unwrap(), None);
        assert_eq!(two_edges.diameter().unwrap_err(), GraphError::NotConnected);

        assert_eq!(complete(5).diameter().unwrap(), 1);
        assert_eq!(cycle(6).diameter().unwrap(), 3);
        assert!(matches!(
            p5.distance(0, 9),
            Err(GraphError::VertexOutOfRange { v: 9, n: 5 })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(cycle(4).is_connected());
        assert!(Graph::from_edges(1, &[]).unwrap().is_connected());
        assert!(!Graph::from_edges(2, &[]).unwrap().is_connected());
    }

    #[test]
    fn complement_involution_and_house() {
        let k3 = complete(3);
        assert_eq!(k3.complement().edge_count(), 0);

        let house = path(5).complement();
        assert_eq!(house.edge_count(), 6);
        assert_eq!(house.complement(), path(5));
    }

    #[test]
    fn components_after_removal_cases() {
        let p5 = path(5);
        let removed = p5.closed_neighborhood(VertexSet::singleton(2)).unwrap();
        assert_eq!(removed, VertexSet::from_iter([1, 2, 3]));
        let comps = p5.components_after_removal(removed);
        assert_eq!(comps, vec![VertexSet::singleton(0), VertexSet::singleton(4)]);

        let c6 = cycle(6);
        assert_eq!(c6.components_after_removal(VertexSet::EMPTY), vec![c6.all_vertices()]);

        let star3 = star(3);
        let all = star3.closed_neighborhood(VertexSet::singleton(0)).unwrap();
        assert!(star3.components_after_removal(all).is_empty());
    }

    #[test]
    fn shortest_path_least_index() {
        let c4 = cycle(4);
        // 0 -> 2 has two shortest paths; the tie must break toward vertex 1.
        assert_eq!(c4.shortest_path(0, 2), Some(vec![0, 1, 2]));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.shortest_path(0, 3), None);
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let c5 = cycle(5);
        let (sub, map) = c5.induced_subgraph(VertexSet::from_iter([0, 1, 3])).unwrap();
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(sub.edge_count(), 1); // only 0-1 survives
        assert!(sub.has_edge(0, 1));
    }

    #[test]
    fn dominating_set_covers() {
        for g in [path(5), cycle(6), complete(4), petersen()] {
            let ds = g.greedy_dominating_set();
            let covered = g.closed_neighborhood(ds).unwrap();
            assert_eq!(covered, g.all_vertices());
        }
    }
}
