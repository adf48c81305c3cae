//! Constructive pipeline from Kempe colorings to clique minors.
//!
//! Given a Kempe coloring of order exactly ten, [`from_kempe_ten`] produces a
//! clique-minor witness of order ten by explicit case analysis; no step is a
//! bare existence claim. [`from_unique`] lifts a unique k-coloring (k <= 10)
//! to a witness of order at least k by padding with universal vertices,
//! running the order-ten pipeline, and stripping the padding afterwards.

use thiserror::Error;

use crate::coloring::{unique_coloring, verify_partition, Partition, Uniqueness};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::minor::{
    find_clique_minor, verify_clique_minor, MinorWitness, SearchBudget, SearchMode, SearchOutcome,
};

/// Which case of the pipeline produced the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// The reduced graph has exactly 8 vertices and is a clique; together
    /// with the endpoints of any edge of the removed pair it forms K_10.
    CliqueN8,
    /// The endvertex's lowest neighbors in the 8 remaining classes are
    /// pairwise adjacent: they join the endvertex and the rest of the
    /// removed pair as ten branch sets.
    StarClique,
    /// A K_9 minor found after patching in a missing edge between two
    /// neighbors of the endvertex, re-rooted and extended by two sets.
    LiftedK9,
    /// The K_9 search exhausted without a witness. Impossible for valid
    /// input; diagnostics localize the contradiction.
    ExceptionalContradiction,
}

/// Replayable record of every choice the pipeline made. Vertex indices refer
/// to the graph the pipeline ran on (the padded graph when called through
/// [`from_unique`]); `padding_added` maps back.
#[derive(Clone, Debug)]
pub struct ExtractionTrace {
    /// Class indices (into the canonical partition) of the removed pair;
    /// when an endvertex was chosen, it lies in the first class.
    pub chosen_classes: (usize, usize),
    /// The graph induced on the other eight classes, relabeled.
    pub reduced: Graph,
    /// Maps reduced indices back to pipeline-graph indices.
    pub reduced_map: Vec<usize>,
    pub n_prime: usize,
    /// None only in the partial trace carried by a budget error.
    pub branch: Option<Branch>,
    /// Endvertex of the spanning tree of the removed pair (absent when the
    /// reduced graph already had 8 vertices).
    pub endvertex: Option<usize>,
    /// Lowest neighbor of the endvertex in each remaining class, in
    /// canonical class order.
    pub star_neighbors: Vec<usize>,
    /// The nonadjacent neighbor pair whose edge was patched in.
    pub nonadjacent_pair: Option<(usize, usize)>,
    /// The K_9 witness found in the patched reduced graph, in pipeline-graph
    /// indices.
    pub lifted_from: Option<MinorWitness>,
    /// Universal vertices appended by padding; empty when none were.
    pub padding_added: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum ExtractError {
    #[error("input is not a Kempe coloring: {0}")]
    NotKempe(String),
    #[error("expected a coloring of order {expected}, got {got}")]
    WrongOrder { expected: usize, got: usize },
    #[error("colorings of order {k} > 10 are out of scope")]
    OrderTooHigh { k: usize },
    #[error("padding would exceed the vertex limit: {0}")]
    TooLarge(GraphError),
    #[error("graph is not uniquely colorable: {found} proper partitions")]
    NotUnique { found: PartitionCount },
    #[error("budget exhausted after {nodes} search nodes")]
    BudgetExceeded { nodes: u64, trace: Box<ExtractionTrace> },
    #[error("no K_9 minor in the patched reduced graph; valid inputs cannot reach this")]
    ExceptionalContradiction { report: ContradictionReport, trace: Box<ExtractionTrace> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionCount {
    Zero,
    Several,
}

impl std::fmt::Display for PartitionCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartitionCount::Zero => write!(f, "zero"),
            PartitionCount::Several => write!(f, "several"),
        }
    }
}

/// One expectation of the impossible branch, with what was actually observed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagnosticItem {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub ok: bool,
}

/// Diagnostics for the branch no valid input can reach. Failed items mark
/// exactly where the input (or the implementation) violates the theory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContradictionReport {
    pub items: Vec<DiagnosticItem>,
}

impl ContradictionReport {
    pub fn failures(&self) -> impl Iterator<Item = &DiagnosticItem> {
        self.items.iter().filter(|i| !i.ok)
    }
}

/// Extends a Kempe coloring of order k <= 10 to order exactly 10 by
/// appending universal vertices as fresh singleton classes. Returns the
/// padded graph, the padded partition, and the appended vertex indices.
pub fn pad_to_ten(
    g: &Graph,
    p: &Partition,
) -> Result<(Graph, Partition, Vec<usize>), ExtractError> {
    let report = verify_partition(g, p).map_err(|e| ExtractError::NotKempe(e.to_string()))?;
    if !report.kempe {
        return Err(ExtractError::NotKempe(format!(
            "class pair {:?} fails",
            report.failing_pair
        )));
    }
    let k = report.order;
    if k > 10 {
        return Err(ExtractError::OrderTooHigh { k });
    }
    let t = 10 - k;
    let padded = g.add_universal(t).map_err(ExtractError::TooLarge)?;
    let added: Vec<usize> = (g.n()..g.n() + t).collect();
    let mut classes = p.classes().to_vec();
    classes.extend(added.iter().map(|&v| VertexSet::single(v)));
    let padded_p = Partition::new(classes).expect("fresh singletons stay disjoint");
    debug_assert!(
        verify_partition(&padded, &padded_p).map(|r| r.kempe && r.order == 10).unwrap_or(false),
        "universal singletons preserve the Kempe property"
    );
    Ok((padded, padded_p, added))
}

/// Turns a Kempe coloring of order exactly ten into a clique-minor witness
/// of order ten, with a trace of every choice. Class pairs are tried in
/// canonical order; the first pair whose pipeline completes within budget
/// wins. Deterministic for a fixed input and budget.
pub fn from_kempe_ten(
    g: &Graph,
    p: &Partition,
    budget: &SearchBudget,
) -> Result<(MinorWitness, ExtractionTrace), ExtractError> {
    let report = verify_partition(g, p).map_err(|e| ExtractError::NotKempe(e.to_string()))?;
    if !report.kempe {
        return Err(ExtractError::NotKempe(format!(
            "class pair {:?} fails",
            report.failing_pair
        )));
    }
    if report.order != 10 {
        return Err(ExtractError::WrongOrder { expected: 10, got: report.order });
    }

    let mut last_budget: Option<(u64, Box<ExtractionTrace>)> = None;
    for ia in 0..10 {
        for ib in (ia + 1)..10 {
            match attempt_pair(g, p, ia, ib, budget) {
                Ok((w, trace)) => {
                    verify_clique_minor(g, &w)
                        .expect("constructed witness must verify; this is a pipeline bug");
                    return Ok((w, trace));
                }
                Err(PairFailure::Budget { nodes, trace }) => {
                    last_budget = Some((nodes, trace));
                }
                Err(PairFailure::Contradiction { report, trace }) => {
                    return Err(ExtractError::ExceptionalContradiction { report, trace });
                }
            }
        }
    }
    let (nodes, trace) = last_budget.expect("45 pairs were attempted");
    Err(ExtractError::BudgetExceeded { nodes, trace })
}

enum PairFailure {
    Budget { nodes: u64, trace: Box<ExtractionTrace> },
    Contradiction { report: ContradictionReport, trace: Box<ExtractionTrace> },
}

fn attempt_pair(
    g: &Graph,
    p: &Partition,
    ia: usize,
    ib: usize,
    budget: &SearchBudget,
) -> Result<(MinorWitness, ExtractionTrace), PairFailure> {
    let (a, b) = (p.class(ia), p.class(ib));
    let ab = a.union(b);
    let keep = g.vertices().minus(ab);
    let (reduced, map) = g.induced(keep);
    let n_prime = reduced.n();
    // Classes other than the removed pair, in canonical order. The induced
    // relabeling is monotone, so this order matches the reduced graph's.
    let rest_classes: Vec<(usize, VertexSet)> = (0..10)
        .filter(|&i| i != ia && i != ib)
        .map(|i| (i, p.class(i)))
        .collect();

    let mut trace = ExtractionTrace {
        chosen_classes: (ia, ib),
        reduced: reduced.clone(),
        reduced_map: map.clone(),
        n_prime,
        branch: None,
        endvertex: None,
        star_neighbors: vec![],
        nonadjacent_pair: None,
        lifted_from: None,
        padding_added: vec![],
    };

    if n_prime == 8 {
        // Every remaining class is a singleton and the reduced graph is a
        // clique adjacent to all of the removed pair: any edge inside the
        // pair completes K_10.
        let (ea, eb) = least_edge_within(g, ab)
            .expect("a connected class pair on >= 2 vertices has an edge");
        let mut sets: Vec<VertexSet> = keep.iter().map(VertexSet::single).collect();
        sets.push(VertexSet::single(ea));
        sets.push(VertexSet::single(eb));
        trace.branch = Some(Branch::CliqueN8);
        return Ok((MinorWitness::new(sets), trace));
    }

    // Endvertex of a spanning tree of the pair: removing it keeps the rest
    // of the pair connected. Record the pair with z's class first.
    let z = least_bfs_leaf(g, ab);
    let first = if a.contains(z) { ia } else { ib };
    trace.chosen_classes = (first, ia + ib - first);
    trace.endvertex = Some(z);

    // Lowest neighbor of z in each remaining class; the Kempe property
    // guarantees one exists.
    let star: Vec<usize> = rest_classes
        .iter()
        .map(|(_, c)| {
            g.neighbors(z)
                .intersect(*c)
                .least()
                .expect("every vertex has a neighbor in every other class")
        })
        .collect();
    trace.star_neighbors = star.clone();

    let star_is_clique = (0..star.len()).all(|i| {
        ((i + 1)..star.len()).all(|j| g.has_edge(star[i], star[j]))
    });
    if star_is_clique {
        let mut sets: Vec<VertexSet> = star.iter().map(|&v| VertexSet::single(v)).collect();
        sets.push(VertexSet::single(z));
        sets.push(ab.minus(VertexSet::single(z)));
        trace.branch = Some(Branch::StarClique);
        return Ok((MinorWitness::new(sets), trace));
    }

    // Two of the star vertices are nonadjacent, so this pair exists.
    let (x, y) = least_nonadjacent_pair(g, g.neighbors(z).intersect(keep))
        .expect("a non-clique star yields a nonadjacent neighbor pair");
    trace.nonadjacent_pair = Some((x, y));

    let mut inv = vec![usize::MAX; g.n()];
    for (new, &old) in map.iter().enumerate() {
        inv[old] = new;
    }
    let mut patched = reduced.clone();
    patched.add_edge(inv[x], inv[y]);

    match find_clique_minor(&patched, 9, budget, SearchMode::Pruned) {
        SearchOutcome::Found(k9) => {
            let k9 = absorb_vertex(&patched, k9, inv[x]);
            trace.lifted_from = Some(k9.mapped(&map));
            let q_idx = k9
                .sets()
                .iter()
                .position(|s| s.contains(inv[x]))
                .expect("absorption placed x in a branch set");
            let mut sets: Vec<VertexSet> = k9
                .sets()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != q_idx)
                .map(|(_, s)| s.iter().map(|v| map[v]).collect())
                .collect();
            let mut q: VertexSet = k9.sets()[q_idx].iter().map(|v| map[v]).collect();
            q.insert(z);
            sets.push(q);
            sets.push(ab.minus(VertexSet::single(z)));
            trace.branch = Some(Branch::LiftedK9);
            Ok((MinorWitness::new(sets), trace))
        }
        SearchOutcome::NotFound => {
            let rest = Partition::new(rest_classes.iter().map(|&(_, c)| c).collect())
                .expect("classes of a partition stay disjoint");
            let rest_reduced = Partition::new(
                rest.classes()
                    .iter()
                    .map(|c| c.iter().map(|v| inv[v]).collect())
                    .collect(),
            )
            .expect("relabeling preserves disjointness");
            let report = contradiction_diagnostics(&patched, n_prime, &rest_reduced);
            trace.branch = Some(Branch::ExceptionalContradiction);
            Err(PairFailure::Contradiction { report, trace: Box::new(trace) })
        }
        SearchOutcome::BudgetExceeded { nodes } => {
            Err(PairFailure::Budget { nodes, trace: Box::new(trace) })
        }
    }
}

/// Lexicographically least edge inside `within`.
fn least_edge_within(g: &Graph, within: VertexSet) -> Option<(usize, usize)> {
    for u in within.iter() {
        if let Some(v) = g
            .neighbors(u)
            .intersect(within)
            .minus(VertexSet::full(u + 1))
            .least()
        {
            return Some((u, v));
        }
    }
    None
}

/// Lowest-indexed leaf of the breadth-first spanning tree of `G[within]`
/// rooted at the least vertex. `within` must induce a connected subgraph on
/// at least two vertices.
fn least_bfs_leaf(g: &Graph, within: VertexSet) -> usize {
    let root = within.least().expect("nonempty");
    let mut tree_deg = [0usize; 64];
    let mut seen = VertexSet::single(root);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).intersect(within).minus(seen).iter() {
            seen.insert(v);
            tree_deg[u] += 1;
            tree_deg[v] += 1;
            queue.push_back(v);
        }
    }
    debug_assert_eq!(seen, within, "pair classes induce a connected subgraph");
    within
        .iter()
        .find(|&v| tree_deg[v] == 1)
        .expect("a tree on >= 2 vertices has a leaf")
}

/// Lexicographically least nonadjacent pair within `candidates`.
fn least_nonadjacent_pair(g: &Graph, candidates: VertexSet) -> Option<(usize, usize)> {
    for u in candidates.iter() {
        if let Some(v) = candidates
            .minus(g.neighbors(u))
            .minus(VertexSet::full(u + 1))
            .least()
        {
            return Some((u, v));
        }
    }
    None
}

/// Ensures some branch set contains `target` by growing the set nearest to
/// it: breadth-first from `target` through unused vertices, absorbing the
/// shortest such path. The graph must be connected.
fn absorb_vertex(g: &Graph, w: MinorWitness, target: usize) -> MinorWitness {
    let support = w.support();
    if support.contains(target) {
        return w;
    }
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::single(target);
    let mut queue = std::collections::VecDeque::from([target]);
    let mut hit = None;
    'bfs: while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u).minus(seen).iter() {
            seen.insert(v);
            parent[v] = u;
            if support.contains(v) {
                hit = Some(v);
                break 'bfs;
            }
            queue.push_back(v);
        }
    }
    let hit = hit.expect("a connected graph reaches some branch set");
    let q_idx = w
        .sets()
        .iter()
        .position(|s| s.contains(hit))
        .expect("hit vertex lies in a branch set");
    let mut sets = w.sets().to_vec();
    // Walk back from the set boundary to the target, adding the interior.
    let mut v = parent[hit];
    while v != usize::MAX {
        sets[q_idx].insert(v);
        v = parent[v];
    }
    debug_assert!(sets[q_idx].contains(target));
    MinorWitness::new(sets)
}

/// Measures the patched reduced graph against everything the theory proves
/// about the branch no valid input reaches. Inputs: the patched graph, its
/// order, and the order-8 coloring of the reduced graph (same labels).
pub fn contradiction_diagnostics(
    patched: &Graph,
    n_prime: usize,
    reduced_classes: &Partition,
) -> ContradictionReport {
    let mut items = Vec::new();
    let lower = 16usize.saturating_sub(n_prime);

    items.push(DiagnosticItem {
        name: "order-window".into(),
        expected: "n' in {11, 12}".into(),
        observed: n_prime.to_string(),
        ok: n_prime == 11 || n_prime == 12,
    });

    let kappa = patched.vertex_connectivity();
    items.push(DiagnosticItem {
        name: "connectivity".into(),
        expected: ">= 7".into(),
        observed: kappa.to_string(),
        ok: kappa >= 7,
    });

    let singletons = reduced_classes
        .classes()
        .iter()
        .filter(|c| c.len() == 1)
        .count();
    items.push(DiagnosticItem {
        name: "singleton-classes".into(),
        expected: format!(">= {lower} (16 - n')"),
        observed: singletons.to_string(),
        ok: singletons >= lower,
    });

    let universal = patched.universal_vertex_count();
    items.push(DiagnosticItem {
        name: "universal-vertices".into(),
        expected: format!(">= {lower} (16 - n'); the exceptional graphs have 0 and 1"),
        observed: universal.to_string(),
        ok: universal >= lower,
    });

    let m = patched.m();
    let bound = 7 * n_prime as i64 - 27;
    items.push(DiagnosticItem {
        name: "edge-bound".into(),
        expected: format!(">= {bound} (7n' - 27)"),
        observed: m.to_string(),
        ok: m as i64 >= bound,
    });

    ContradictionReport { items }
}

/// Full pipeline for a uniquely k-colorable graph, 1 <= k <= 10: verify
/// uniqueness, re-verify the Kempe property, pad to order ten, extract, and
/// strip every branch set that touches the padding. At least k sets survive.
pub fn from_unique(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
) -> Result<(MinorWitness, ExtractionTrace), ExtractError> {
    assert!(k >= 1, "a coloring has at least one class");
    if k > 10 {
        return Err(ExtractError::OrderTooHigh { k });
    }
    let p = match unique_coloring(g, k) {
        Uniqueness::Unique(p) => p,
        Uniqueness::None => return Err(ExtractError::NotUnique { found: PartitionCount::Zero }),
        Uniqueness::Multiple => {
            return Err(ExtractError::NotUnique { found: PartitionCount::Several })
        }
    };
    // Unique colorings of this kind are Kempe; checked per instance rather
    // than assumed.
    let report = verify_partition(g, &p).expect("enumerated partitions cover the graph");
    if !report.kempe {
        return Err(ExtractError::NotKempe(format!(
            "unique {k}-coloring fails the pair-connectivity requirement at {:?}",
            report.failing_pair
        )));
    }
    let (padded, padded_p, added) = pad_to_ten(g, &p)?;
    let (w10, mut trace) = from_kempe_ten(&padded, &padded_p, budget)?;
    trace.padding_added = added.clone();
    let added_set = VertexSet::from_slice(&added);
    let sets: Vec<VertexSet> = w10
        .sets()
        .iter()
        .filter(|s| !s.intersects(added_set))
        .cloned()
        .collect();
    let w = MinorWitness::new(sets);
    assert!(
        w.order() >= k,
        "at most {} branch sets can touch the padding",
        added.len()
    );
    verify_clique_minor(g, &w).expect("stripped witness stays valid in the original graph");
    Ok((w, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, join, path};

    fn singleton_partition(n: usize) -> Partition {
        Partition::new((0..n).map(VertexSet::single).collect()).unwrap()
    }

    // ---- padding ----

    #[test]
    fn padding_extends_to_order_ten() {
        // K_4 minus the edge {2,3} with its unique 3-coloring.
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let p = Partition::from_vecs(&[vec![0], vec![1], vec![2, 3]]).unwrap();
        let (padded, pp, added) = pad_to_ten(&g, &p).unwrap();
        assert_eq!(padded.n(), 11);
        assert_eq!(pp.order(), 10);
        assert_eq!(added, vec![4, 5, 6, 7, 8, 9, 10]);
        let r = verify_partition(&padded, &pp).unwrap();
        assert!(r.kempe);
    }

    #[test]
    fn padding_a_full_coloring_is_identity() {
        let k10 = complete(10);
        let p = singleton_partition(10);
        let (padded, pp, added) = pad_to_ten(&k10, &p).unwrap();
        assert_eq!(padded, k10);
        assert_eq!(pp, p);
        assert!(added.is_empty());
    }

    #[test]
    fn padding_rejects_non_kempe() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let p = Partition::from_vecs(&[vec![0, 2], vec![1, 3]]).unwrap();
        assert!(matches!(pad_to_ten(&g, &p), Err(ExtractError::NotKempe(_))));
    }

    #[test]
    fn padding_the_empty_graph_builds_k10() {
        let g = Graph::empty(0);
        let p = Partition::new(vec![]).unwrap();
        let (padded, pp, added) = pad_to_ten(&g, &p).unwrap();
        assert!(padded.is_complete());
        assert_eq!(padded.n(), 10);
        assert_eq!(pp.order(), 10);
        assert_eq!(added.len(), 10);
    }

    // ---- order-ten extraction ----

    #[test]
    fn k10_extracts_ten_singletons() {
        let k10 = complete(10);
        let p = singleton_partition(10);
        let (w, trace) = from_kempe_ten(&k10, &p, &SearchBudget::default()).unwrap();
        assert_eq!(w.order(), 10);
        assert_eq!(verify_clique_minor(&k10, &w), Ok(()));
        // First pair (0,1) leaves 8 vertices.
        assert_eq!(trace.branch, Some(Branch::CliqueN8));
        assert_eq!(trace.n_prime, 8);
        assert!(trace.padding_added.is_empty());
    }

    #[test]
    fn p3_joined_to_k8_takes_the_clique_branch() {
        // Path a-b-c on 0,1,2 joined to K_8: classes {{0,2},{1}} plus
        // singletons; removing the first pair leaves exactly the K_8.
        let g = join(&path(3), &complete(8)).unwrap();
        let mut classes = vec![vec![0, 2], vec![1]];
        classes.extend((3..11).map(|v| vec![v]));
        let p = Partition::from_vecs(&classes).unwrap();
        let (w, trace) = from_kempe_ten(&g, &p, &SearchBudget::default()).unwrap();
        assert_eq!(trace.branch, Some(Branch::CliqueN8));
        assert_eq!(trace.n_prime, 8);
        assert_eq!(trace.chosen_classes, (0, 1));
        assert_eq!(w.order(), 10);
        assert_eq!(verify_clique_minor(&g, &w), Ok(()));
        // The chosen edge is the least edge of the removed pair: (0,1).
        assert!(w.sets().contains(&VertexSet::single(0)));
        assert!(w.sets().contains(&VertexSet::single(1)));
    }

    #[test]
    fn wrong_order_is_rejected() {
        let k9 = complete(9);
        let p = singleton_partition(9);
        assert!(matches!(
            from_kempe_ten(&k9, &p, &SearchBudget::default()),
            Err(ExtractError::WrongOrder { expected: 10, got: 9 })
        ));
    }

    #[test]
    fn non_kempe_is_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let p = Partition::from_vecs(&[vec![0, 2], vec![1, 3]]).unwrap();
        assert!(matches!(
            from_kempe_ten(&g, &p, &SearchBudget::default()),
            Err(ExtractError::NotKempe(_))
        ));
    }

    // ---- unique-coloring extraction ----

    #[test]
    fn complete_graphs_extract_their_own_order() {
        for k in 1..=10usize {
            let g = complete(k);
            let (w, _) = from_unique(&g, k, &SearchBudget::default()).unwrap();
            assert_eq!(w.order(), k, "K_{k}");
            assert_eq!(verify_clique_minor(&g, &w), Ok(()));
            assert_eq!(w.support(), g.vertices());
        }
    }

    #[test]
    fn k4_minus_edge_extracts_order_three() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let (w, trace) = from_unique(&g, 3, &SearchBudget::default()).unwrap();
        assert!(w.order() >= 3);
        assert_eq!(verify_clique_minor(&g, &w), Ok(()));
        assert_eq!(trace.padding_added, vec![4, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn path_extracts_order_two() {
        let g = path(4);
        let (w, _) = from_unique(&g, 2, &SearchBudget::default()).unwrap();
        assert!(w.order() >= 2);
        assert_eq!(verify_clique_minor(&g, &w), Ok(()));
    }

    #[test]
    fn non_unique_graphs_are_rejected() {
        use crate::generators::cycle;
        assert!(matches!(
            from_unique(&cycle(5), 3, &SearchBudget::default()),
            Err(ExtractError::NotUnique { found: PartitionCount::Several })
        ));
        assert!(matches!(
            from_unique(&complete(4), 3, &SearchBudget::default()),
            Err(ExtractError::NotUnique { found: PartitionCount::Zero })
        ));
    }

    #[test]
    fn order_above_ten_is_rejected() {
        let g = complete(11);
        assert!(matches!(
            from_unique(&g, 11, &SearchBudget::default()),
            Err(ExtractError::OrderTooHigh { k: 11 })
        ));
    }

    // ---- the lifted branch ----

    /// Uniquely 4-colorable graph whose first class pair leads to two
    /// nonadjacent star neighbors (4 and 5), forcing the patched K_9 search.
    pub(crate) fn lifted_branch_instance() -> (Graph, usize) {
        let edges = [
            (0, 2), (1, 2), (1, 3),
            (0, 4), (0, 6), (1, 4),
            (0, 5), (1, 5), (1, 7),
            (2, 4), (3, 6), (2, 6),
            (2, 5), (3, 7), (2, 7),
            (4, 7), (6, 7), (5, 6),
            (0, 7),
        ];
        (Graph::new(8, &edges).unwrap(), 4)
    }

    #[test]
    fn crafted_instance_takes_the_lifted_branch() {
        let (g, k) = lifted_branch_instance();
        match unique_coloring(&g, k) {
            Uniqueness::Unique(p) => {
                assert_eq!(
                    p.to_vecs(),
                    vec![vec![0, 1], vec![2, 3], vec![4, 6], vec![5, 7]]
                );
            }
            other => panic!("instance must be uniquely colorable, got {other:?}"),
        }
        let (w, trace) = from_unique(&g, k, &SearchBudget::default()).unwrap();
        assert_eq!(trace.branch, Some(Branch::LiftedK9));
        assert_eq!(trace.endvertex, Some(0));
        assert_eq!(trace.nonadjacent_pair, Some((4, 5)));
        assert!(trace.lifted_from.is_some());
        assert!(w.order() >= k);
        assert_eq!(verify_clique_minor(&g, &w), Ok(()));
    }

    // ---- budget propagation ----

    /// Two-vertex blowup of K_10 with the edges between minima of
    /// consecutive classes removed. Among any 8 remaining classes two are
    /// consecutive, so every class pair drives the pipeline into the
    /// patched K_9 search; no pair can finish without spending budget.
    fn blowup_all_pairs_search() -> (Graph, Partition) {
        let mut edges = Vec::new();
        for u in 0..20usize {
            for v in (u + 1)..20 {
                if u / 2 == v / 2 {
                    continue;
                }
                if u % 2 == 0 && v == u + 2 {
                    continue;
                }
                edges.push((u, v));
            }
        }
        let g = Graph::new(20, &edges).unwrap();
        let classes: Vec<Vec<usize>> = (0..10).map(|i| vec![2 * i, 2 * i + 1]).collect();
        (g, Partition::from_vecs(&classes).unwrap())
    }

    #[test]
    fn starved_search_reports_budget_after_trying_every_pair() {
        let (g, p) = blowup_all_pairs_search();
        match from_kempe_ten(&g, &p, &SearchBudget::nodes(1)) {
            Err(ExtractError::BudgetExceeded { trace, .. }) => {
                // Partial trace: the pair reached the search but no branch.
                assert_eq!(trace.branch, None);
                assert!(trace.nonadjacent_pair.is_some());
                assert!(trace.endvertex.is_some());
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn blowup_extracts_through_the_lifted_branch_within_default_budget() {
        let (g, p) = blowup_all_pairs_search();
        let (w, trace) = from_kempe_ten(&g, &p, &SearchBudget::default()).unwrap();
        assert_eq!(trace.branch, Some(Branch::LiftedK9));
        assert_eq!(w.order(), 10);
        assert_eq!(verify_clique_minor(&g, &w), Ok(()));
    }

    #[test]
    fn starvation_falls_through_to_a_pair_that_needs_no_search() {
        // The crafted instance's first pair needs the search, but a later
        // pair resolves by star inspection alone, so the pipeline still
        // succeeds with no budget at all.
        let (g, k) = lifted_branch_instance();
        let (w, trace) = from_unique(&g, k, &SearchBudget::nodes(1)).unwrap();
        assert_eq!(trace.branch, Some(Branch::StarClique));
        assert!(trace.chosen_classes != (0, 1));
        assert!(w.order() >= k);
        assert_eq!(verify_clique_minor(&g, &w), Ok(()));
    }

    // ---- diagnostics ----

    #[test]
    fn diagnostics_expose_the_exceptional_gap() {
        // The dense 12-vertex exceptional graph, offered as if it were a
        // patched reduced graph of order 12 with an 8-class coloring.
        let (g, _) = complete_multipartite(&[2, 2, 2, 3, 3]).unwrap();
        let p = Partition::from_vecs(&[
            vec![0],
            vec![1],
            vec![2, 3],
            vec![4, 5],
            vec![6],
            vec![7, 8],
            vec![9],
            vec![10, 11],
        ])
        .unwrap();
        let report = contradiction_diagnostics(&g, 12, &p);
        assert_eq!(report.items.len(), 5);
        let by_name = |n: &str| report.items.iter().find(|i| i.name == n).unwrap();
        assert!(by_name("order-window").ok);
        assert!(by_name("connectivity").ok, "connectivity 9 >= 7");
        assert!(by_name("edge-bound").ok, "57 = 7*12 - 27");
        // No universal vertex, but >= 4 are required: the contradiction.
        let uni = by_name("universal-vertices");
        assert!(!uni.ok);
        assert_eq!(uni.observed, "0");
        assert!(report.failures().count() >= 1);
    }

    #[test]
    fn diagnostics_on_a_conforming_graph_pass() {
        // K_12 with singleton classes passes every expectation at n' = 12.
        let g = complete(12);
        let p = Partition::new((0..8).map(VertexSet::single).collect()).unwrap();
        let report = contradiction_diagnostics(&g, 12, &p);
        assert!(report.items.iter().all(|i| i.ok), "{report:?}");
    }
}
