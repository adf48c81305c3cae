//! Clique minors: branch-set witnesses, witness verification, and exact
//! search with an explicit node/time budget.

use std::time::{Duration, Instant};

use crate::graph::{Graph, VertexSet};

/// Witness for a clique minor: one branch set per minor vertex, kept in
/// canonical form (sets ordered by least vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    sets: Vec<VertexSet>,
}

impl MinorWitness {
    pub fn new(mut sets: Vec<VertexSet>) -> MinorWitness {
        sets.sort_by_key(|s| s.least());
        MinorWitness { sets }
    }

    pub fn from_vecs(sets: &[Vec<usize>]) -> MinorWitness {
        MinorWitness::new(sets.iter().map(|s| VertexSet::from_slice(s)).collect())
    }

    /// Order of the minor this witness certifies.
    #[inline]
    pub fn order(&self) -> usize {
        self.sets.len()
    }

    #[inline]
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn support(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s))
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.to_vec()).collect()
    }

    /// Relabels every vertex through `map` (new index = map[old index]).
    pub fn mapped(&self, map: &[usize]) -> MinorWitness {
        MinorWitness::new(
            self.sets
                .iter()
                .map(|s| s.iter().map(|v| map[v]).collect())
                .collect(),
        )
    }
}

/// First violated witness condition, in check order: nonempty and in-range
/// sets, pairwise disjointness, connectedness, pairwise adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorViolation {
    EmptySet { index: usize },
    OutOfRange { index: usize },
    Overlap { first: usize, second: usize },
    Disconnected { index: usize },
    NotAdjacent { first: usize, second: usize },
}

impl std::fmt::Display for MinorViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MinorViolation::EmptySet { index } => write!(f, "branch set {index} is empty"),
            MinorViolation::OutOfRange { index } => {
                write!(f, "branch set {index} leaves the vertex set")
            }
            MinorViolation::Overlap { first, second } => {
                write!(f, "branch sets {first} and {second} overlap")
            }
            MinorViolation::Disconnected { index } => {
                write!(f, "branch set {index} induces a disconnected subgraph")
            }
            MinorViolation::NotAdjacent { first, second } => {
                write!(f, "no edge between branch sets {first} and {second}")
            }
        }
    }
}

/// Checks that `w` certifies a clique minor of order `w.order()` in `g`.
pub fn verify_clique_minor(g: &Graph, w: &MinorWitness) -> Result<(), MinorViolation> {
    let sets = w.sets();
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return Err(MinorViolation::EmptySet { index: i });
        }
        if !s.is_subset_of(g.vertices()) {
            return Err(MinorViolation::OutOfRange { index: i });
        }
    }
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            if sets[i].intersects(sets[j]) {
                return Err(MinorViolation::Overlap { first: i, second: j });
            }
        }
    }
    for (i, s) in sets.iter().enumerate() {
        if !g.is_connected_subset(*s) {
            return Err(MinorViolation::Disconnected { index: i });
        }
    }
    for i in 0..sets.len() {
        let reach = g.neighborhood_of_set(sets[i]);
        for (j, &other) in sets.iter().enumerate().skip(i + 1) {
            if !reach.intersects(other) {
                return Err(MinorViolation::NotAdjacent { first: i, second: j });
            }
        }
    }
    Ok(())
}

/// Node and wall-clock budget for the search. Nodes count assignment
/// decisions in the backtracking tree.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget { node_limit: 100_000_000, time_limit: Duration::from_secs(60) }
    }
}

impl SearchBudget {
    pub fn nodes(node_limit: u64) -> SearchBudget {
        SearchBudget { node_limit, ..SearchBudget::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Feasibility pruning at every node. The production mode.
    Pruned,
    /// No pruning beyond the canonical symmetry break; every family of
    /// disjoint nonempty sets is checked at a leaf. Oracle for small inputs.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(MinorWitness),
    /// The search space was exhausted: no clique minor of the requested
    /// order exists.
    NotFound,
    /// Budget ran out before the space was exhausted.
    BudgetExceeded { nodes: u64 },
}

struct Searcher<'g> {
    g: &'g Graph,
    t: usize,
    mode: SearchMode,
    node_limit: u64,
    deadline: Instant,
    nodes: u64,
    out_of_budget: bool,
}

/// Partial assignment: `sets[..opened]` grow as vertices 0..pos are placed;
/// vertices may also be left unused. Branch sets open in index order, so set
/// i's least vertex is below set i+1's, and every unordered family is
/// visited exactly once.
#[derive(Clone, Copy)]
struct Partial {
    sets: [u64; 10],
    opened: usize,
    used: u64,
}

impl<'g> Searcher<'g> {
    fn run(&mut self) -> SearchOutcome {
        if self.t == 0 {
            return SearchOutcome::Found(MinorWitness::new(vec![]));
        }
        if self.t > self.g.n() {
            return SearchOutcome::NotFound;
        }
        let start = Partial { sets: [0; 10], opened: 0, used: 0 };
        match self.descend(0, start) {
            Some(w) => SearchOutcome::Found(w),
            None if self.out_of_budget => SearchOutcome::BudgetExceeded { nodes: self.nodes },
            None => SearchOutcome::NotFound,
        }
    }

    fn charge_node(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.out_of_budget = true;
            return false;
        }
        if self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline {
            self.out_of_budget = true;
            return false;
        }
        true
    }

    fn descend(&mut self, pos: usize, state: Partial) -> Option<MinorWitness> {
        if !self.charge_node() {
            return None;
        }
        let n = self.g.n();
        if pos == n {
            return self.leaf(&state);
        }
        if self.mode == SearchMode::Pruned && !self.feasible(pos, &state) {
            return None;
        }
        let v_bit = 1u64 << pos;
        // Moves in canonical order: existing sets ascending, open the next
        // set, leave the vertex unused.
        for c in 0..state.opened {
            let mut next = state;
            next.sets[c] |= v_bit;
            next.used |= v_bit;
            if let Some(w) = self.descend(pos + 1, next) {
                return Some(w);
            }
            if self.out_of_budget {
                return None;
            }
        }
        if state.opened < self.t {
            let mut next = state;
            next.sets[state.opened] |= v_bit;
            next.opened += 1;
            next.used |= v_bit;
            if let Some(w) = self.descend(pos + 1, next) {
                return Some(w);
            }
            if self.out_of_budget {
                return None;
            }
        }
        self.descend(pos + 1, state)
    }

    fn leaf(&self, state: &Partial) -> Option<MinorWitness> {
        if state.opened != self.t {
            return None;
        }
        let w = MinorWitness::new(
            state.sets[..self.t].iter().map(|&s| VertexSet(s)).collect(),
        );
        match verify_clique_minor(self.g, &w) {
            Ok(()) => Some(w),
            Err(_) => None,
        }
    }

    /// Sound necessary conditions for the partial assignment to extend to a
    /// witness. `unassigned` is every vertex at or above `pos`.
    fn feasible(&self, pos: usize, state: &Partial) -> bool {
        let n = self.g.n();
        let remaining = n - pos;
        // Enough vertices left to open the missing sets.
        if remaining < self.t - state.opened {
            return false;
        }
        let unassigned = VertexSet::full(n).minus(VertexSet(state.used));
        let pool = VertexSet(state.used).union(unassigned);

        // Residual edge bound: a witness on w used vertices needs
        // C(t,2) cross edges plus w - t internal tree edges, and w is at
        // least max(|used|, t).
        let assigned = VertexSet(state.used).len();
        let mut avail = 0usize;
        for v in pool.iter() {
            avail += self.g.neighbors(v).intersect(pool).len();
        }
        avail /= 2;
        let need = self.t * (self.t - 1) / 2 + assigned.max(self.t) - self.t;
        if avail < need {
            return false;
        }

        // Each open set must be reconnectable using unassigned vertices.
        for c in 0..state.opened {
            let s = VertexSet(state.sets[c]);
            let scope = s.union(unassigned);
            let from = s.least().expect("open sets are nonempty");
            if !s.is_subset_of(self.g.reach_within(from, scope)) {
                return false;
            }
        }

        // Every non-adjacent open pair must still admit a connecting edge,
        // and the unassigned vertices must offer enough distinct adjacency
        // slots to serve all unresolved pairs.
        let has_unassigned_edge = unassigned
            .iter()
            .any(|v| self.g.neighbors(v).intersects(unassigned));
        let mut unresolved = 0usize;
        for i in 0..state.opened {
            let si = VertexSet(state.sets[i]);
            let ni = self.g.neighborhood_of_set(si);
            for j in (i + 1)..state.opened {
                let sj = VertexSet(state.sets[j]);
                if ni.intersects(sj) {
                    continue;
                }
                unresolved += 1;
                let nj = self.g.neighborhood_of_set(sj);
                let reachable = ni.intersects(unassigned)
                    || nj.intersects(unassigned)
                    || has_unassigned_edge;
                if !reachable {
                    return false;
                }
            }
        }
        if unresolved > 0 {
            let mut slots = 0usize;
            for v in unassigned.iter() {
                let touch = self.g.neighbors(v).intersect(pool).len();
                slots += touch.min(self.t - 1);
                if slots >= unresolved {
                    break;
                }
            }
            if slots < unresolved {
                return false;
            }
        }
        true
    }
}

/// Searches for a clique minor of order `t`. `NotFound` is returned only
/// after the (symmetry-reduced) space of branch-set families is exhausted;
/// running out of budget is reported separately. Deterministic: the found
/// witness is the first one in the search's canonical order.
pub fn find_clique_minor(
    g: &Graph,
    t: usize,
    budget: &SearchBudget,
    mode: SearchMode,
) -> SearchOutcome {
    assert!(t <= 10, "only minors up to order 10 are searched for");
    let mut s = Searcher {
        g,
        t,
        mode,
        node_limit: budget.node_limit,
        deadline: Instant::now() + budget.time_limit,
        nodes: 0,
        out_of_budget: false,
    };
    s.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, cycle, petersen};

    fn witness(sets: &[&[usize]]) -> MinorWitness {
        MinorWitness::from_vecs(&sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
    }

    // ---- verification ----

    #[test]
    fn singleton_witness_in_a_clique() {
        let k5 = complete(5);
        let w = witness(&[&[0], &[1], &[2], &[3], &[4]]);
        assert_eq!(verify_clique_minor(&k5, &w), Ok(()));
    }

    #[test]
    fn contracted_cycle_gives_k2() {
        let c4 = cycle(4);
        let w = witness(&[&[0, 1], &[2, 3]]);
        assert_eq!(verify_clique_minor(&c4, &w), Ok(()));
    }

    #[test]
    fn violations_are_localized_in_check_order() {
        let p = petersen();
        // 0 and 2 are nonadjacent outer vertices.
        assert_eq!(
            verify_clique_minor(&p, &witness(&[&[0], &[2]])),
            Err(MinorViolation::NotAdjacent { first: 0, second: 1 })
        );
        assert_eq!(
            verify_clique_minor(&p, &witness(&[&[0, 2], &[1]])),
            Err(MinorViolation::Disconnected { index: 0 })
        );
        assert_eq!(
            verify_clique_minor(&p, &witness(&[&[0, 1], &[1, 2]])),
            Err(MinorViolation::Overlap { first: 0, second: 1 })
        );
        assert_eq!(
            verify_clique_minor(&p, &MinorWitness::new(vec![VertexSet::EMPTY, VertexSet::single(0)])),
            Err(MinorViolation::EmptySet { index: 0 })
        );
        assert_eq!(
            verify_clique_minor(&cycle(4), &witness(&[&[0], &[7]])),
            Err(MinorViolation::OutOfRange { index: 1 })
        );
    }

    #[test]
    fn canonical_order_sorts_by_least_vertex() {
        let w = witness(&[&[5, 6], &[0], &[2, 3]]);
        assert_eq!(w.to_vecs(), vec![vec![0], vec![2, 3], vec![5, 6]]);
    }

    // ---- search: positive cases ----

    #[test]
    fn complete_graphs_contain_their_own_order() {
        for n in 1..=10 {
            let g = complete(n);
            match find_clique_minor(&g, n, &SearchBudget::default(), SearchMode::Pruned) {
                SearchOutcome::Found(w) => {
                    assert_eq!(w.order(), n);
                    assert_eq!(verify_clique_minor(&g, &w), Ok(()));
                }
                other => panic!("expected Found on K_{n}, got {other:?}"),
            }
        }
    }

    #[test]
    fn petersen_has_k5_but_not_k6() {
        let p = petersen();
        let b = SearchBudget::default();
        match find_clique_minor(&p, 5, &b, SearchMode::Pruned) {
            SearchOutcome::Found(w) => {
                assert_eq!(w.order(), 5);
                assert_eq!(verify_clique_minor(&p, &w), Ok(()));
            }
            other => panic!("expected Found, got {other:?}"),
        }
        assert_eq!(find_clique_minor(&p, 6, &b, SearchMode::Pruned), SearchOutcome::NotFound);
        // Exhaustive oracle agrees on both.
        assert!(matches!(
            find_clique_minor(&p, 5, &b, SearchMode::Exhaustive),
            SearchOutcome::Found(_)
        ));
        assert_eq!(
            find_clique_minor(&p, 6, &b, SearchMode::Exhaustive),
            SearchOutcome::NotFound
        );
    }

    #[test]
    fn found_witness_is_deterministic() {
        let p = petersen();
        let b = SearchBudget::default();
        let w1 = find_clique_minor(&p, 5, &b, SearchMode::Pruned);
        let w2 = find_clique_minor(&p, 5, &b, SearchMode::Pruned);
        assert_eq!(w1, w2);
    }

    // ---- search: negative cases ----

    #[test]
    fn dense_multipartite_has_no_k9() {
        let (g, _) = complete_multipartite(&[2, 2, 2, 3, 3]).unwrap();
        assert_eq!(
            find_clique_minor(&g, 9, &SearchBudget::default(), SearchMode::Pruned),
            SearchOutcome::NotFound
        );
        let (g, _) = complete_multipartite(&[1, 2, 2, 2, 2, 2]).unwrap();
        assert_eq!(
            find_clique_minor(&g, 9, &SearchBudget::default(), SearchMode::Pruned),
            SearchOutcome::NotFound
        );
    }

    #[test]
    fn order_monotonicity_on_a_sample() {
        let (g, _) = complete_multipartite(&[2, 2, 2, 3, 3]).unwrap();
        let b = SearchBudget::default();
        // K_8 minor exists (contract parts appropriately), K_9 does not.
        assert!(matches!(
            find_clique_minor(&g, 8, &b, SearchMode::Pruned),
            SearchOutcome::Found(_)
        ));
    }

    #[test]
    fn too_many_branch_sets_is_not_found() {
        assert_eq!(
            find_clique_minor(&complete(3), 4, &SearchBudget::default(), SearchMode::Pruned),
            SearchOutcome::NotFound
        );
    }

    // ---- budget ----

    #[test]
    fn tiny_node_budget_is_reported() {
        let (g, _) = complete_multipartite(&[2, 2, 2, 3, 3]).unwrap();
        match find_clique_minor(&g, 9, &SearchBudget::nodes(10), SearchMode::Pruned) {
            SearchOutcome::BudgetExceeded { nodes } => assert!(nodes > 10),
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn zero_time_budget_is_reported() {
        let g = petersen();
        let b = SearchBudget { node_limit: u64::MAX, time_limit: Duration::ZERO };
        // The deadline check fires on node 4096; a Found before that wins,
        // NotFound cannot be claimed.
        match find_clique_minor(&g, 6, &b, SearchMode::Pruned) {
            SearchOutcome::BudgetExceeded { .. } | SearchOutcome::Found(_) => {}
            SearchOutcome::NotFound => panic!("NotFound claimed under a zero time budget"),
        }
    }

    // ---- oracle agreement ----

    #[test]
    fn modes_agree_on_random_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let b = SearchBudget::default();
        for _ in 0..60 {
            let n = rng.gen_range(1..=7);
            let t = rng.gen_range(1..=5);
            let mut edges = vec![];
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let fast = find_clique_minor(&g, t, &b, SearchMode::Pruned);
            let slow = find_clique_minor(&g, t, &b, SearchMode::Exhaustive);
            match (&fast, &slow) {
                (SearchOutcome::Found(w1), SearchOutcome::Found(w2)) => {
                    assert_eq!(verify_clique_minor(&g, w1), Ok(()));
                    assert_eq!(verify_clique_minor(&g, w2), Ok(()));
                }
                (SearchOutcome::NotFound, SearchOutcome::NotFound) => {}
                other => panic!("modes disagree on {:?} t={t}: {other:?}", g.edges()),
            }
        }
    }
}
