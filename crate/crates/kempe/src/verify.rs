//! Structural consequences of the Kempe property, and a classifier for
//! graphs at the K_9-minor edge threshold 7n - 27.
//!
//! The two check functions re-derive, per instance, bounds that hold for
//! every Kempe coloring: an edge lower bound with a tree characterization of
//! the equality case, and a vertex-connectivity lower bound. The classifier
//! reports where a graph stands relative to the threshold: edge count,
//! outcome of an exact K_9-minor search, and whether the graph is one of the
//! two known extremal families without such a minor.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::{verify_partition, Partition};
use crate::graph::{Graph, VertexSet};
use crate::minor::{find_clique_minor, SearchBudget, SearchMode, SearchOutcome};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("input is not a Kempe coloring: {0}")]
    NotKempe(String),
    #[error("graph has {n} vertices, need at least {needed}")]
    TooSmall { n: usize, needed: usize },
}

/// Edge lower bound forced by a Kempe coloring of order k:
/// m >= (k-1)n - k(k-1)/2, with equality exactly when every pair of classes
/// induces a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBoundReport {
    pub order: usize,
    pub n: usize,
    pub m: usize,
    pub bound: i64,
    pub holds: bool,
    pub equality: bool,
    pub all_pairs_trees: bool,
    /// First class pair (canonical order) whose induced subgraph is not a
    /// tree, when one exists.
    pub non_tree_pair: Option<(usize, usize)>,
}

pub fn check_lemma1(g: &Graph, p: &Partition) -> Result<EdgeBoundReport, VerifyError> {
    let rep = verify_partition(g, p).map_err(|e| VerifyError::NotKempe(e.to_string()))?;
    if !rep.kempe {
        return Err(VerifyError::NotKempe(format!(
            "class pair {:?} fails",
            rep.failing_pair
        )));
    }
    let k = rep.order;
    let (n, m) = (g.n(), g.m());
    let bound = (k as i64 - 1) * n as i64 - (k as i64) * (k as i64 - 1) / 2;

    // Each pair induces a connected subgraph, so tree-ness reduces to the
    // edge count |A| + |B| - 1. All edges inside a pair cross it.
    let mut all_pairs_trees = true;
    let mut non_tree_pair = None;
    'pairs: for i in 0..k {
        for j in (i + 1)..k {
            let (a, b) = (p.class(i), p.class(j));
            let cross: usize = a.iter().map(|u| g.neighbors(u).intersect(b).len()).sum();
            if cross != a.len() + b.len() - 1 {
                all_pairs_trees = false;
                non_tree_pair = Some((i, j));
                break 'pairs;
            }
        }
    }

    Ok(EdgeBoundReport {
        order: k,
        n,
        m,
        bound,
        holds: m as i64 >= bound,
        equality: m as i64 == bound,
        all_pairs_trees,
        non_tree_pair,
    })
}

/// Connectivity lower bound forced by a Kempe coloring of order k:
/// the graph is (k-1)-connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub order: usize,
    pub connectivity: usize,
    pub required: usize,
    pub holds: bool,
}

pub fn check_lemma2(g: &Graph, p: &Partition) -> Result<ConnectivityReport, VerifyError> {
    let rep = verify_partition(g, p).map_err(|e| VerifyError::NotKempe(e.to_string()))?;
    if !rep.kempe {
        return Err(VerifyError::NotKempe(format!(
            "class pair {:?} fails",
            rep.failing_pair
        )));
    }
    let connectivity = g.vertex_connectivity();
    let required = rep.order.saturating_sub(1);
    Ok(ConnectivityReport {
        order: rep.order,
        connectivity,
        required,
        holds: connectivity >= required,
    })
}

/// The two extremal families on the edge threshold without a K_9 minor:
/// the complete 5-partite graph K_{2,2,2,3,3}, and cockades obtained by
/// gluing copies of K_{1,2,2,2,2,2} along 6-cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalKind {
    K22233,
    Cockade,
}

#[derive(Clone, Debug)]
pub struct ThresholdReport {
    pub n: usize,
    pub m: usize,
    /// m >= 7n - 27.
    pub meets_edge_bound: bool,
    pub k9: SearchOutcome,
    pub exceptional: Option<ExceptionalKind>,
}

/// Places a graph relative to the K_9-minor threshold. Requires n >= 9
/// (below that no K_9 minor can exist and the bound is vacuous).
pub fn classify_k9_threshold(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<ThresholdReport, VerifyError> {
    let n = g.n();
    if n < 9 {
        return Err(VerifyError::TooSmall { n, needed: 9 });
    }
    let m = g.m();
    let meets_edge_bound = m as i64 >= 7 * n as i64 - 27;
    let k9 = find_clique_minor(g, 9, budget, SearchMode::Pruned);
    let exceptional = if multipartite_profile(g).as_deref() == Some(&[2, 2, 2, 3, 3]) {
        Some(ExceptionalKind::K22233)
    } else if is_exceptional_cockade(g) {
        Some(ExceptionalKind::Cockade)
    } else {
        None
    };
    Ok(ThresholdReport { n, m, meets_edge_bound, k9, exceptional })
}

/// Part sizes (sorted ascending) if the graph is complete multipartite,
/// None otherwise. The parts of a complete multipartite graph are the
/// components of its complement, each of which must be independent in the
/// graph itself.
pub fn multipartite_profile(g: &Graph) -> Option<Vec<usize>> {
    let comp = g.complement();
    let parts = comp.components_within(comp.vertices());
    for part in &parts {
        for u in part.iter() {
            if !g.neighbors(u).intersect(*part).is_empty() {
                return None;
            }
        }
    }
    let mut profile: Vec<usize> = parts.iter().map(|p| p.len()).collect();
    profile.sort_unstable();
    Some(profile)
}

/// True for any graph obtained from copies of K_{1,2,2,2,2,2} by repeatedly
/// gluing a fresh copy onto a 6-clique of the part built so far. A single
/// copy counts. Recognition: either the base itself, or some separating
/// 6-clique splits the graph into two smaller such cockades.
pub fn is_exceptional_cockade(g: &Graph) -> bool {
    if multipartite_profile(g).as_deref() == Some(&[1, 2, 2, 2, 2, 2]) {
        return true;
    }
    if g.n() < 16 {
        // Two glued copies already need 11 + 5 vertices.
        return false;
    }
    for clique in cliques_of_size(g, 6) {
        let rest = g.vertices().minus(clique);
        let comps = g.components_within(rest);
        if comps.len() < 2 {
            continue;
        }
        let first = comps[0];
        let others = rest.minus(first);
        let side1 = g.induced(first.union(clique)).0;
        let side2 = g.induced(others.union(clique)).0;
        if is_exceptional_cockade(&side1) && is_exceptional_cockade(&side2) {
            return true;
        }
    }
    false
}

/// All cliques of exactly `size` vertices, each as a vertex set, discovered
/// in ascending lexicographic order.
fn cliques_of_size(g: &Graph, size: usize) -> Vec<VertexSet> {
    fn extend(
        g: &Graph,
        current: VertexSet,
        candidates: VertexSet,
        left: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if left == 0 {
            out.push(current);
            return;
        }
        for v in candidates.iter() {
            let mut next = current;
            next.insert(v);
            let narrowed = candidates
                .intersect(g.neighbors(v))
                .minus(VertexSet::full(v + 1));
            extend(g, next, narrowed, left - 1, out);
        }
    }
    let mut out = Vec::new();
    extend(g, VertexSet::EMPTY, g.vertices(), size, &mut out);
    out
}

/// Builds a uniquely k-colorable graph with a known coloring: a k-clique
/// core plus `extra` vertices, each assigned a seeded random class and
/// joined to every vertex then outside that class. Every proper k-coloring
/// must extend the core's, so the result is complete multipartite with k
/// nonempty parts, uniquely k-colorable, and Kempe.
pub fn generate_uniquely_colorable(k: usize, extra: usize, seed: u64) -> (Graph, Partition) {
    assert!(k >= 1, "need at least one class");
    assert!(k + extra <= 20, "keep instances enumeration-checkable");
    let n = k + extra;
    let mut classes: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for v in k..n {
        let c = rng.gen_range(0..k);
        for (i, class) in classes.iter().enumerate() {
            if i != c {
                for &u in class {
                    edges.push((u, v));
                }
            }
        }
        classes[c].push(v);
    }
    let g = Graph::new(n, &edges).expect("generator stays within bounds");
    let p = Partition::from_vecs(&classes).expect("classes partition the vertices");
    (g, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{unique_coloring, Uniqueness};
    use crate::generators::{cockade, complete, complete_multipartite, cycle, path, petersen};

    fn singletons(n: usize) -> Partition {
        Partition::new((0..n).map(VertexSet::single).collect()).unwrap()
    }

    // ---- edge bound ----

    #[test]
    fn complete_graph_attains_the_edge_bound() {
        let g = complete(10);
        let r = check_lemma1(&g, &singletons(10)).unwrap();
        assert_eq!(r.bound, 45);
        assert_eq!(r.m, 45);
        assert!(r.holds && r.equality && r.all_pairs_trees);
        assert_eq!(r.non_tree_pair, None);
    }

    #[test]
    fn four_cycle_exceeds_the_bound_strictly() {
        let g = cycle(4);
        let p = Partition::from_vecs(&[vec![0, 2], vec![1, 3]]).unwrap();
        let r = check_lemma1(&g, &p).unwrap();
        assert_eq!(r.bound, 3);
        assert_eq!(r.m, 4);
        assert!(r.holds);
        assert!(!r.equality);
        assert!(!r.all_pairs_trees);
        assert_eq!(r.non_tree_pair, Some((0, 1)));
    }

    #[test]
    fn path_bipartition_attains_equality_via_trees() {
        let g = path(4);
        let p = Partition::from_vecs(&[vec![0, 2], vec![1, 3]]).unwrap();
        let r = check_lemma1(&g, &p).unwrap();
        assert_eq!(r.bound, 3);
        assert!(r.equality && r.all_pairs_trees);
    }

    #[test]
    fn edge_bound_rejects_non_kempe_input() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let p = Partition::from_vecs(&[vec![0, 2], vec![1, 3]]).unwrap();
        assert!(matches!(check_lemma1(&g, &p), Err(VerifyError::NotKempe(_))));
    }

    // ---- connectivity bound ----

    #[test]
    fn connectivity_bound_on_small_cases() {
        let g = complete(10);
        let r = check_lemma2(&g, &singletons(10)).unwrap();
        assert_eq!((r.connectivity, r.required), (9, 9));
        assert!(r.holds);

        let g = cycle(4);
        let p = Partition::from_vecs(&[vec![0, 2], vec![1, 3]]).unwrap();
        let r = check_lemma2(&g, &p).unwrap();
        assert_eq!((r.connectivity, r.required), (2, 1));
        assert!(r.holds);

        let g = path(4);
        let p = Partition::from_vecs(&[vec![0, 2], vec![1, 3]]).unwrap();
        let r = check_lemma2(&g, &p).unwrap();
        assert_eq!((r.connectivity, r.required), (1, 1));
        assert!(r.holds);
    }

    // ---- multipartite recognition ----

    #[test]
    fn profiles_of_known_graphs() {
        assert_eq!(multipartite_profile(&complete(5)), Some(vec![1; 5]));
        assert_eq!(multipartite_profile(&cycle(4)), Some(vec![2, 2]));
        assert_eq!(multipartite_profile(&Graph::empty(3)), Some(vec![3]));
        assert_eq!(multipartite_profile(&petersen()), None);
        assert_eq!(multipartite_profile(&path(4)), None);
        let (g, _) = complete_multipartite(&[2, 2, 2, 3, 3]).unwrap();
        assert_eq!(multipartite_profile(&g), Some(vec![2, 2, 2, 3, 3]));
    }

    // ---- cockade recognition ----

    #[test]
    fn cockades_of_the_base_are_recognized() {
        for copies in 1..=3 {
            let g = cockade(&[1, 2, 2, 2, 2, 2], 6, copies).unwrap();
            assert!(is_exceptional_cockade(&g), "copies = {copies}");
        }
    }

    #[test]
    fn near_misses_are_rejected() {
        assert!(!is_exceptional_cockade(&complete(11)));
        assert!(!is_exceptional_cockade(&complete(16)));
        let (g, _) = complete_multipartite(&[2, 2, 2, 3, 3]).unwrap();
        assert!(!is_exceptional_cockade(&g));
        // Cockade of the wrong base.
        let h = cockade(&[1, 2, 2, 2, 3], 5, 2).unwrap();
        assert!(!is_exceptional_cockade(&h));
    }

    // ---- threshold classification ----

    #[test]
    fn dense_multipartite_sits_on_the_threshold_without_k9() {
        let (g, _) = complete_multipartite(&[2, 2, 2, 3, 3]).unwrap();
        let r = classify_k9_threshold(&g, &SearchBudget::default()).unwrap();
        assert!(r.meets_edge_bound, "57 >= 7*12 - 27");
        assert!(matches!(r.k9, SearchOutcome::NotFound));
        assert_eq!(r.exceptional, Some(ExceptionalKind::K22233));
    }

    #[test]
    fn base_cockade_sits_on_the_threshold_without_k9() {
        let g = cockade(&[1, 2, 2, 2, 2, 2], 6, 1).unwrap();
        let r = classify_k9_threshold(&g, &SearchBudget::default()).unwrap();
        assert!(r.meets_edge_bound, "50 >= 7*11 - 27");
        assert!(matches!(r.k9, SearchOutcome::NotFound));
        assert_eq!(r.exceptional, Some(ExceptionalKind::Cockade));
    }

    #[test]
    fn complete_twelve_clears_the_threshold_with_k9() {
        let g = complete(12);
        let r = classify_k9_threshold(&g, &SearchBudget::default()).unwrap();
        assert!(r.meets_edge_bound);
        assert!(matches!(r.k9, SearchOutcome::Found(_)));
        assert_eq!(r.exceptional, None);
    }

    #[test]
    fn sparse_graphs_miss_the_bound() {
        let r = classify_k9_threshold(&petersen(), &SearchBudget::default()).unwrap();
        assert!(!r.meets_edge_bound);
        assert!(matches!(r.k9, SearchOutcome::NotFound));
        assert_eq!(r.exceptional, None);
    }

    #[test]
    fn undersized_graphs_are_rejected() {
        assert!(matches!(
            classify_k9_threshold(&complete(8), &SearchBudget::default()),
            Err(VerifyError::TooSmall { n: 8, needed: 9 })
        ));
    }

    // ---- generator ----

    #[test]
    fn generated_instances_are_unique_and_kempe() {
        for k in 1..=5 {
            for extra in 0..=3 {
                for seed in 0..3 {
                    let (g, p) = generate_uniquely_colorable(k, extra, seed);
                    assert_eq!(g.n(), k + extra);
                    let rep = verify_partition(&g, &p).unwrap();
                    assert!(rep.kempe, "k={k} extra={extra} seed={seed}");
                    match unique_coloring(&g, k) {
                        Uniqueness::Unique(q) => assert_eq!(q, p),
                        other => panic!("k={k} extra={extra} seed={seed}: {other:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn generator_with_one_extra_yields_a_near_clique() {
        // One extra vertex joined to all but one core vertex: n = 4, m = 5
        // regardless of which class the seed picks.
        for seed in 0..8 {
            let (g, _) = generate_uniquely_colorable(3, 1, seed);
            assert_eq!((g.n(), g.m()), (4, 5), "seed {seed}");
        }
    }

    #[test]
    fn generator_is_deterministic_per_seed() {
        let (g1, p1) = generate_uniquely_colorable(4, 6, 99);
        let (g2, p2) = generate_uniquely_colorable(4, 6, 99);
        assert_eq!(g1, g2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn generated_graphs_are_complete_multipartite() {
        let (g, p) = generate_uniquely_colorable(4, 6, 7);
        let mut sizes: Vec<usize> = p.classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(multipartite_profile(&g), Some(sizes));
    }
}
