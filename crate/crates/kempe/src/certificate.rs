//! Self-contained JSON certificates.
//!
//! A certificate bundles one graph (as graph6) with one claim about it and
//! enough data to re-check the claim from the file alone. [`Certificate::verify`]
//! reruns the underlying check; it never trusts stored verdicts.
//!
//! Failure taxonomy: [`CertificateError::BadGraph`] and
//! [`CertificateError::BadData`] mean the certificate itself is broken (the
//! graph string does not decode, or the embedded data is not a partition or
//! set system of this graph); [`CertificateError::PropertyFalse`] means the
//! certificate is well formed but its claim does not hold.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{from_graph6, to_graph6};
use crate::coloring::{verify_partition, Partition};
use crate::extract::{Branch, ExtractionTrace};
use crate::graph::{Graph, GraphError};
use crate::minor::{verify_clique_minor, MinorViolation, MinorWitness};
use crate::verify::{check_lemma1, check_lemma2, ConnectivityReport, EdgeBoundReport};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("embedded graph does not decode: {0}")]
    BadGraph(GraphError),
    #[error("embedded data is malformed: {0}")]
    BadData(String),
    #[error("claimed property does not hold: {0}")]
    PropertyFalse(String),
}

/// The claim and its supporting data. Serialized adjacently tagged, so the
/// JSON carries `"kind": "..."` and `"payload": {...}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Payload {
    /// The classes form a Kempe coloring of the stated order.
    KempeColoring {
        order: usize,
        classes: Vec<Vec<usize>>,
    },
    /// The branch sets witness a complete minor of the stated order.
    CliqueMinor {
        order: usize,
        branch_sets: Vec<Vec<usize>>,
    },
    /// Edge lower bound (k-1)n - k(k-1)/2 for a Kempe coloring, with the
    /// tree characterization of equality.
    Lemma1 {
        classes: Vec<Vec<usize>>,
        order: usize,
        n: usize,
        m: usize,
        bound: i64,
        equality: bool,
        all_pairs_trees: bool,
        non_tree_pair: Option<(usize, usize)>,
    },
    /// Connectivity lower bound k-1 for a Kempe coloring of order k.
    Lemma2 {
        classes: Vec<Vec<usize>>,
        order: usize,
        connectivity: usize,
    },
    /// A clique-minor witness of order >= k extracted from a uniquely
    /// k-colorable graph, with the full decision trace.
    Extraction {
        k: usize,
        witness: Vec<Vec<usize>>,
        trace: TraceJson,
    },
}

/// Serialized form of an extraction trace. Vertex indices refer to the
/// padded graph; `padding_added` lists the appended universal vertices.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TraceJson {
    pub chosen_classes: (usize, usize),
    pub reduced_graph: String,
    pub n_prime: usize,
    pub branch_taken: Option<Branch>,
    pub z: Option<usize>,
    pub star_neighbors: Vec<usize>,
    pub xy: Option<(usize, usize)>,
    pub lifted_from: Option<Vec<Vec<usize>>>,
    pub padding_added: Vec<usize>,
}

impl From<&ExtractionTrace> for TraceJson {
    fn from(t: &ExtractionTrace) -> TraceJson {
        TraceJson {
            chosen_classes: t.chosen_classes,
            reduced_graph: to_graph6(&t.reduced),
            n_prime: t.n_prime,
            branch_taken: t.branch,
            z: t.endvertex,
            star_neighbors: t.star_neighbors.clone(),
            xy: t.nonadjacent_pair,
            lifted_from: t.lifted_from.as_ref().map(|w| w.to_vecs()),
            padding_added: t.padding_added.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Certificate {
    /// graph6 encoding of the subject graph.
    pub graph: String,
    #[serde(flatten)]
    pub body: Payload,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Certificate {
    fn base(g: &Graph, body: Payload) -> Certificate {
        Certificate {
            graph: to_graph6(g),
            body,
            tool_version: TOOL_VERSION.to_string(),
            seed: None,
        }
    }

    pub fn kempe_coloring(g: &Graph, p: &Partition) -> Certificate {
        Certificate::base(
            g,
            Payload::KempeColoring { order: p.order(), classes: p.to_vecs() },
        )
    }

    pub fn clique_minor(g: &Graph, w: &MinorWitness) -> Certificate {
        Certificate::base(
            g,
            Payload::CliqueMinor { order: w.order(), branch_sets: w.to_vecs() },
        )
    }

    pub fn lemma1(g: &Graph, p: &Partition, r: &EdgeBoundReport) -> Certificate {
        Certificate::base(
            g,
            Payload::Lemma1 {
                classes: p.to_vecs(),
                order: r.order,
                n: r.n,
                m: r.m,
                bound: r.bound,
                equality: r.equality,
                all_pairs_trees: r.all_pairs_trees,
                non_tree_pair: r.non_tree_pair,
            },
        )
    }

    pub fn lemma2(g: &Graph, p: &Partition, r: &ConnectivityReport) -> Certificate {
        Certificate::base(
            g,
            Payload::Lemma2 {
                classes: p.to_vecs(),
                order: r.order,
                connectivity: r.connectivity,
            },
        )
    }

    pub fn extraction(
        g: &Graph,
        k: usize,
        w: &MinorWitness,
        trace: &ExtractionTrace,
    ) -> Certificate {
        Certificate::base(
            g,
            Payload::Extraction { k, witness: w.to_vecs(), trace: trace.into() },
        )
    }

    pub fn with_seed(mut self, seed: u64) -> Certificate {
        self.seed = Some(seed);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Recomputes the claim from the embedded graph and data.
    pub fn verify(&self) -> Result<(), CertificateError> {
        let g = from_graph6(&self.graph).map_err(CertificateError::BadGraph)?;
        match &self.body {
            Payload::KempeColoring { order, classes } => {
                let p = partition_of(&g, classes)?;
                let rep = verify_partition(&g, &p)
                    .map_err(|e| CertificateError::BadData(e.to_string()))?;
                if !rep.kempe {
                    return Err(CertificateError::PropertyFalse(format!(
                        "not a Kempe coloring, class pair {:?} fails",
                        rep.failing_pair
                    )));
                }
                expect_eq("order", *order, rep.order)
            }
            Payload::CliqueMinor { order, branch_sets } => {
                let w = witness_of(&g, branch_sets)?;
                check_minor(&g, &w)?;
                expect_eq("order", *order, w.order())
            }
            Payload::Lemma1 {
                classes,
                order,
                n,
                m,
                bound,
                equality,
                all_pairs_trees,
                non_tree_pair,
            } => {
                let p = partition_of(&g, classes)?;
                let r = check_lemma1(&g, &p)
                    .map_err(|e| CertificateError::PropertyFalse(e.to_string()))?;
                if !r.holds {
                    return Err(CertificateError::PropertyFalse(format!(
                        "edge bound fails: {} < {}",
                        r.m, r.bound
                    )));
                }
                expect_eq("order", *order, r.order)?;
                expect_eq("n", *n, r.n)?;
                expect_eq("m", *m, r.m)?;
                expect_eq("bound", *bound, r.bound)?;
                expect_eq("equality", *equality, r.equality)?;
                expect_eq("all_pairs_trees", *all_pairs_trees, r.all_pairs_trees)?;
                expect_eq("non_tree_pair", *non_tree_pair, r.non_tree_pair)
            }
            Payload::Lemma2 { classes, order, connectivity } => {
                let p = partition_of(&g, classes)?;
                let r = check_lemma2(&g, &p)
                    .map_err(|e| CertificateError::PropertyFalse(e.to_string()))?;
                if !r.holds {
                    return Err(CertificateError::PropertyFalse(format!(
                        "connectivity bound fails: {} < {}",
                        r.connectivity, r.required
                    )));
                }
                expect_eq("order", *order, r.order)?;
                expect_eq("connectivity", *connectivity, r.connectivity)
            }
            Payload::Extraction { k, witness, trace } => {
                let w = witness_of(&g, witness)?;
                check_minor(&g, &w)?;
                if w.order() < *k {
                    return Err(CertificateError::PropertyFalse(format!(
                        "witness order {} below target {k}",
                        w.order()
                    )));
                }
                let reduced = from_graph6(&trace.reduced_graph)
                    .map_err(|e| CertificateError::BadData(format!("reduced graph: {e}")))?;
                if reduced.n() != trace.n_prime {
                    return Err(CertificateError::BadData(format!(
                        "n_prime {} does not match reduced graph order {}",
                        trace.n_prime,
                        reduced.n()
                    )));
                }
                if trace.branch_taken.is_none() {
                    return Err(CertificateError::BadData(
                        "extraction trace lacks a branch".into(),
                    ));
                }
                Ok(())
            }
        }
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    field: &str,
    stored: T,
    computed: T,
) -> Result<(), CertificateError> {
    if stored == computed {
        Ok(())
    } else {
        Err(CertificateError::PropertyFalse(format!(
            "stored {field} = {stored:?}, recomputed {computed:?}"
        )))
    }
}

/// Bounds-checks raw indices before building sets; bit sets cannot hold
/// indices at or above the vertex limit.
fn guard_indices(g: &Graph, data: &[Vec<usize>]) -> Result<(), CertificateError> {
    for set in data {
        for &v in set {
            if v >= g.n() {
                return Err(CertificateError::BadData(format!(
                    "vertex {v} out of range for a graph on {} vertices",
                    g.n()
                )));
            }
        }
    }
    Ok(())
}

fn partition_of(g: &Graph, classes: &[Vec<usize>]) -> Result<Partition, CertificateError> {
    guard_indices(g, classes)?;
    // Overlap, emptiness, and coverage are part of the claim itself.
    Partition::from_vecs(classes).map_err(|e| CertificateError::PropertyFalse(e.to_string()))
}

fn witness_of(g: &Graph, sets: &[Vec<usize>]) -> Result<MinorWitness, CertificateError> {
    guard_indices(g, sets)?;
    Ok(MinorWitness::from_vecs(sets))
}

fn check_minor(g: &Graph, w: &MinorWitness) -> Result<(), CertificateError> {
    match verify_clique_minor(g, w) {
        Ok(()) => Ok(()),
        Err(v @ MinorViolation::OutOfRange { .. }) => {
            Err(CertificateError::BadData(v.to_string()))
        }
        Err(v) => Err(CertificateError::PropertyFalse(v.to_string())),
    }
}
