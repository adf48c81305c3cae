//! Proper partitions, Kempe colorings, and unique colorability.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("not a partition: {0}")]
    NotAPartition(String),
}

/// Partition of a vertex set into nonempty, pairwise disjoint classes,
/// kept in canonical form: classes ordered by their least vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    classes: Vec<VertexSet>,
}

impl Partition {
    /// Validates disjointness and nonemptiness, then canonicalizes.
    /// Coverage of a particular graph's vertex set is checked by
    /// [`verify_partition`], not here.
    pub fn new(classes: Vec<VertexSet>) -> Result<Partition, ColoringError> {
        let mut seen = VertexSet::EMPTY;
        for c in &classes {
            if c.is_empty() {
                return Err(ColoringError::NotAPartition("empty class".into()));
            }
            if seen.intersects(*c) {
                return Err(ColoringError::NotAPartition(format!(
                    "classes overlap at vertex {}",
                    seen.intersect(*c).least().unwrap()
                )));
            }
            seen = seen.union(*c);
        }
        let mut classes = classes;
        classes.sort_by_key(|c| c.least());
        Ok(Partition { classes })
    }

    pub fn from_vecs(classes: &[Vec<usize>]) -> Result<Partition, ColoringError> {
        Partition::new(classes.iter().map(|c| VertexSet::from_slice(c)).collect())
    }

    /// Number of classes.
    #[inline]
    pub fn order(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> VertexSet {
        self.classes[i]
    }

    /// Union of all classes.
    pub fn support(&self) -> VertexSet {
        self.classes
            .iter()
            .fold(VertexSet::EMPTY, |acc, c| acc.union(*c))
    }

    /// Class index containing `v`, if any.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.to_vec()).collect()
    }
}

/// Outcome of checking a partition against a graph.
///
/// `failing_pair` localizes the first failure in canonical class order:
/// `(i, i)` marks a class that is not an anticlique, `(i, j)` with `i < j` a
/// class pair whose union induces a disconnected subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeReport {
    pub order: usize,
    pub proper: bool,
    pub kempe: bool,
    /// Every vertex has a neighbor in every class other than its own.
    pub star_ok: bool,
    pub failing_pair: Option<(usize, usize)>,
}

/// Checks that `p` partitions the vertices of `g` and reports whether it is a
/// proper coloring and a Kempe coloring.
pub fn verify_partition(g: &Graph, p: &Partition) -> Result<KempeReport, ColoringError> {
    if p.support() != g.vertices() {
        return Err(ColoringError::NotAPartition(
            "classes do not cover exactly the vertex set".into(),
        ));
    }
    let k = p.order();

    let mut proper = true;
    let mut failing_pair = None;
    'outer: for (i, c) in p.classes().iter().enumerate() {
        for v in c.iter() {
            if g.neighbors(v).intersects(*c) {
                proper = false;
                failing_pair = Some((i, i));
                break 'outer;
            }
        }
    }

    let mut kempe = proper;
    if proper {
        'pairs: for i in 0..k {
            for j in (i + 1)..k {
                if !g.is_connected_subset(p.class(i).union(p.class(j))) {
                    kempe = false;
                    failing_pair = Some((i, j));
                    break 'pairs;
                }
            }
        }
    }

    let mut star_ok = true;
    'star: for (i, c) in p.classes().iter().enumerate() {
        for v in c.iter() {
            for (j, d) in p.classes().iter().enumerate() {
                if i != j && !g.neighbors(v).intersects(*d) {
                    star_ok = false;
                    break 'star;
                }
            }
        }
    }

    debug_assert!(!kempe || star_ok, "a Kempe coloring satisfies the star property");
    Ok(KempeReport { order: k, proper, kempe, star_ok, failing_pair })
}

/// Lazily enumerates every proper partition of `g` into at most `k`
/// anticliques, each exactly once, in canonical form.
///
/// Backtracks over vertices in index order, trying the lowest feasible class
/// first; a vertex may open class `j` only when classes below `j` are
/// nonempty, so each partition appears once with classes ordered by least
/// vertex.
pub fn proper_partitions(g: &Graph, k: usize) -> PartitionIter<'_> {
    PartitionIter {
        g,
        k,
        assign: Vec::new(),
        classes: Vec::new(),
        exhausted: false,
        emitted_empty: false,
    }
}

pub struct PartitionIter<'g> {
    g: &'g Graph,
    k: usize,
    /// assign[v] = class index of vertex v, for v < assign.len().
    assign: Vec<usize>,
    /// Members of each open class, mirroring `assign`.
    classes: Vec<VertexSet>,
    exhausted: bool,
    emitted_empty: bool,
}

impl PartitionIter<'_> {
    /// Retreats to the deepest vertex with an untried class, returning false
    /// when the whole tree is exhausted.
    fn backtrack(&mut self) -> Option<usize> {
        while let Some(v) = self.assign.len().checked_sub(1) {
            let c = self.assign.pop().unwrap();
            self.classes[c].remove(v);
            if self.classes[c].is_empty() {
                self.classes.pop();
            }
            if c < self.classes.len() && c + 1 < self.k {
                return Some(c + 1);
            }
        }
        None
    }
}

impl Iterator for PartitionIter<'_> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.exhausted {
            return None;
        }
        let n = self.g.n();
        if n == 0 {
            // Sole partition of the empty vertex set: no classes.
            self.exhausted = true;
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(Partition { classes: vec![] });
        }
        if self.k == 0 {
            // No classes allowed, yet there are vertices to place.
            self.exhausted = true;
            return None;
        }
        // Resume: after emitting a full assignment, advance the last vertex.
        let mut try_from = if self.assign.len() == n {
            match self.backtrack() {
                Some(c) => c,
                None => {
                    self.exhausted = true;
                    return None;
                }
            }
        } else {
            0
        };
        loop {
            let v = self.assign.len();
            // Highest class this vertex may enter: one past the open ones.
            let limit = self.classes.len().min(self.k.saturating_sub(1));
            let mut placed = false;
            for c in try_from..=limit {
                if c < self.classes.len() && self.g.neighbors(v).intersects(self.classes[c]) {
                    continue;
                }
                if c == self.classes.len() {
                    self.classes.push(VertexSet::EMPTY);
                }
                self.classes[c].insert(v);
                self.assign.push(c);
                placed = true;
                break;
            }
            if !placed {
                match self.backtrack() {
                    Some(c) => {
                        try_from = c;
                        continue;
                    }
                    None => {
                        self.exhausted = true;
                        return None;
                    }
                }
            }
            try_from = 0;
            if self.assign.len() == n {
                return Some(Partition { classes: self.classes.clone() });
            }
        }
    }
}

/// Least k admitting a proper partition into at most k anticliques.
pub fn chromatic_number(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&k| proper_partitions(g, k).next().is_some())
        .expect("n colors always suffice")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    /// Exactly one proper partition into at most k anticliques.
    Unique(Partition),
    Multiple,
    None,
}

/// Decides whether `g` has exactly one proper partition into at most `k`
/// anticliques. Stops as soon as a second partition is found.
pub fn unique_coloring(g: &Graph, k: usize) -> Uniqueness {
    let mut it = proper_partitions(g, k);
    match (it.next(), it.next()) {
        (None, _) => Uniqueness::None,
        (Some(p), None) => Uniqueness::Unique(p),
        (Some(_), Some(_)) => Uniqueness::Multiple,
    }
}
