//! Simple graphs on at most 64 vertices, stored as one adjacency bitmask per vertex.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count; every vertex set fits in one `u64`.
pub const MAX_VERTICES: usize = 64;

/// Set of vertex indices below [`MAX_VERTICES`], as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn single(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// All vertices below `n`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_slice(vs: &[usize]) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for &v in vs {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
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

    /// Lowest vertex index, if any.
    #[inline]
    pub fn least(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
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

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },
    #[error("{n} vertices exceed the {MAX_VERTICES}-vertex limit")]
    TooLarge { n: usize },
    #[error("multipartite part sizes must be positive")]
    EmptyPart,
    #[error("base graph has no clique of order {k}")]
    NoKClique { k: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Undirected simple graph. `adj[v]` never contains `v` and the matrix stays symmetric.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::IndexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        Graph { n, adj: vec![0; n] }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Union of the neighborhoods of all vertices in `s` (may intersect `s`).
    pub fn neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Number of vertices adjacent to every other vertex.
    pub fn universal_vertex_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == self.n - 1).count()
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Whether `set` induces a connected subgraph. Empty sets are not connected.
    pub fn is_connected_subset(&self, set: VertexSet) -> bool {
        let Some(start) = set.least() else {
            return false;
        };
        self.reach_within(start, set) == set
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    /// `start` must be a member of `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut grow = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow |= self.adj[v];
            }
            frontier = grow & within.0 & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_subset(self.vertices())
    }

    /// Connected components of `G[within]`, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.least() {
            let comp = self.reach_within(v, rest);
            rest = rest.minus(comp);
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `keep`, relabeled to `0..keep.len()` preserving
    /// index order. Second component maps new index -> old index.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(map.len());
        for (iu, &u) in map.iter().enumerate() {
            for (iv, &v) in map.iter().enumerate().skip(iu + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(iu, iv);
                }
            }
        }
        (g, map)
    }

    /// Adds `t` vertices adjacent to everything, at indices `n..n+t`.
    pub fn add_universal(&self, t: usize) -> Result<Graph, GraphError> {
        let n = self.n + t;
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        let full = VertexSet::full(n).0;
        let mut adj: Vec<u64> = self.adj.iter().map(|&a| a | (full & !VertexSet::full(self.n).0)).collect();
        for v in self.n..n {
            adj.push(full & !(1u64 << v));
        }
        Ok(Graph { n, adj })
    }

    /// Exact vertex connectivity. Complete graphs (and K_1) give n-1 by
    /// convention; disconnected and empty graphs give 0.
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
        // Minimum over nonadjacent pairs of the max number of internally
        // disjoint paths (unit-capacity flow on the split graph).
        let mut best = self.n - 1;
        for s in 0..self.n {
            for t in (s + 1)..self.n {
                if !self.has_edge(s, t) {
                    best = best.min(self.max_disjoint_paths(s, t));
                }
            }
        }
        best
    }

    /// Max internally vertex-disjoint s-t paths for nonadjacent s, t.
    fn max_disjoint_paths(&self, s: usize, t: usize) -> usize {
        debug_assert!(!self.has_edge(s, t));
        // Split graph: node 2v = v_in, 2v+1 = v_out. Arc v_in->v_out carries
        // capacity 1; each edge uv becomes u_out->v_in and v_out->u_in with
        // effectively unbounded capacity (n suffices).
        let n = self.n;
        let nn = 2 * n;
        let big = n as i32;
        let mut cap = vec![0i32; nn * nn];
        for v in 0..n {
            cap[(2 * v) * nn + 2 * v + 1] = 1;
        }
        for (u, v) in self.edges() {
            cap[(2 * u + 1) * nn + 2 * v] = big;
            cap[(2 * v + 1) * nn + 2 * u] = big;
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0usize;
        loop {
            // BFS for an augmenting path in the residual network.
            let mut parent = vec![usize::MAX; nn];
            parent[source] = source;
            let mut queue = std::collections::VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for y in 0..nn {
                    if parent[y] == usize::MAX && cap[x * nn + y] > 0 {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                return flow;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                cap[x * nn + y] -= 1;
                cap[y * nn + x] += 1;
                y = x;
            }
            flow += 1;
        }
    }

    /// Lexicographically least clique of order `k` (as an ascending vertex
    /// list), if one exists.
    pub fn least_k_clique(&self, k: usize) -> Option<Vec<usize>> {
        fn go(g: &Graph, k: usize, chosen: &mut Vec<usize>, candidates: VertexSet) -> bool {
            if chosen.len() == k {
                return true;
            }
            for v in candidates.iter() {
                chosen.push(v);
                let rest = candidates.intersect(g.neighbors(v)).minus(VertexSet::full(v + 1));
                if go(g, k, chosen, rest) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::with_capacity(k);
        if go(self, k, &mut chosen, self.vertices()) {
            Some(chosen)
        } else {
            None
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
