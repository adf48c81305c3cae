//! Deterministic graph constructions used throughout the crate and its tests.

use crate::graph::{Graph, GraphError, VertexSet};

pub fn complete(n: usize) -> Graph {
    Graph::empty(0).add_universal(n).expect("n <= 64")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("n <= 64")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges).expect("n <= 64")
}

/// Petersen graph: outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut e = Vec::with_capacity(15);
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i + 5, (i + 2) % 5 + 5));
        e.push((i, i + 5));
    }
    Graph::new(10, &e).unwrap()
}

/// Join: all of `a`, then all of `b` (indices shifted by `a.n()`), plus every
/// edge in between.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
    let n = a.n() + b.n();
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooLarge { n });
    }
    let mut edges = a.edges();
    for (u, v) in b.edges() {
        edges.push((u + a.n(), v + a.n()));
    }
    for u in 0..a.n() {
        for v in 0..b.n() {
            edges.push((u, v + a.n()));
        }
    }
    Graph::new(n, &edges)
}

/// Complete multipartite graph. Vertices are grouped part by part in the
/// given order; two vertices are adjacent iff they lie in different parts.
/// Returns the graph and the parts as vertex sets.
pub fn complete_multipartite(parts: &[usize]) -> Result<(Graph, Vec<VertexSet>), GraphError> {
    if parts.contains(&0) {
        return Err(GraphError::EmptyPart);
    }
    let n: usize = parts.iter().sum();
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooLarge { n });
    }
    let mut sets = Vec::with_capacity(parts.len());
    let mut next = 0usize;
    for &p in parts {
        sets.push((next..next + p).collect::<VertexSet>());
        next += p;
    }
    let mut g = Graph::empty(n);
    for (i, a) in sets.iter().enumerate() {
        for b in sets.iter().skip(i + 1) {
            for u in a.iter() {
                for v in b.iter() {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok((g, sets))
}

/// Glues `copies` copies of the complete multipartite graph with the given
/// parts, each new copy identified with the current graph along its
/// lexicographically least clique of order `glue`. The result of each step
/// intersects the previous graph in exactly that clique.
pub fn cockade(parts: &[usize], glue: usize, copies: usize) -> Result<Graph, GraphError> {
    assert!(copies >= 1);
    let (base, _) = complete_multipartite(parts)?;
    let base_clique = base.least_k_clique(glue).ok_or(GraphError::NoKClique { k: glue })?;
    let mut g = base.clone();
    for _ in 1..copies {
        let host_clique = g
            .least_k_clique(glue)
            .expect("glue clique persists in every cockade");
        let fresh = base.n() - glue;
        let n = g.n() + fresh;
        if n > crate::graph::MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        // Map the new copy's vertices: its least clique onto the host clique
        // (in index order), everything else onto fresh indices.
        let mut map = vec![usize::MAX; base.n()];
        for (i, &v) in base_clique.iter().enumerate() {
            map[v] = host_clique[i];
        }
        let mut next = g.n();
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        let mut edges = g.edges();
        for (u, v) in base.edges() {
            edges.push((map[u], map[v]));
        }
        g = Graph::new(n, &edges)?;
    }
    Ok(g)
}
