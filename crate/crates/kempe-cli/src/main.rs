//! Command-line front end: verify colorings, minors, and certificates;
//! extract clique-minor witnesses from uniquely colorable graphs; generate
//! instance families.
//!
//! Exit codes: 0 every checked property holds (or the requested object was
//! produced); 1 some property is false; 2 malformed input (undecodable
//! graph, bad JSON, out-of-range indices, bad arguments); 3 search budget
//! exhausted.

use std::io::Read as _;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kempe::certificate::{Certificate, CertificateError};
use kempe::codec::{from_edge_list, from_graph6, to_graph6};
use kempe::coloring::{verify_partition, Partition};
use kempe::extract::{from_unique, pad_to_ten, ExtractError};
use kempe::generators::{cockade, complete_multipartite};
use kempe::minor::{verify_clique_minor, MinorWitness, SearchBudget};
use kempe::verify::{check_lemma1, check_lemma2, generate_uniquely_colorable};
use kempe::Graph;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "kempe",
    version,
    about = "Kempe colorings, clique minors, and machine-checkable certificates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify properties of a graph against supplied data, or re-check a
    /// self-contained certificate.
    Check(CheckArgs),
    /// Extract a clique-minor witness of order >= k from a uniquely
    /// k-colorable graph; prints an extraction certificate.
    Extract(ExtractArgs),
    /// Generate graphs from built-in families.
    Gen(GenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct CheckArgs {
    /// Graph: literal graph6, a file path, or '-' for stdin.
    graph: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Verify a proper coloring; classes as JSON arrays, inline or a path.
    #[arg(long, value_name = "CLASSES")]
    coloring: Option<String>,
    /// Verify a Kempe coloring; classes as JSON arrays, inline or a path.
    #[arg(long, value_name = "CLASSES")]
    kempe: Option<String>,
    /// Check the edge lower bound (k-1)n - k(k-1)/2 for a Kempe coloring.
    #[arg(long, value_name = "CLASSES")]
    lemma1: Option<String>,
    /// Check the connectivity lower bound k-1 for a Kempe coloring.
    #[arg(long, value_name = "CLASSES")]
    lemma2: Option<String>,
    /// Verify a clique-minor witness; branch sets as JSON arrays, inline or a path.
    #[arg(long, value_name = "SETS")]
    minor: Option<String>,
    /// Re-check a self-contained certificate; takes no graph argument.
    #[arg(
        long,
        value_name = "CERT",
        conflicts_with_all = ["graph", "coloring", "kempe", "lemma1", "lemma2", "minor"]
    )]
    certificate: Option<String>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExtractArgs {
    /// Graph: literal graph6, a file path, or '-' for stdin.
    graph: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Number of colors the graph is uniquely colorable with (1..=10).
    #[arg(short)]
    k: usize,
    /// Node budget for the embedded minor searches.
    #[arg(long, default_value_t = 100_000_000)]
    node_limit: u64,
    /// Time budget for the embedded minor searches, in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    timeout_ms: u64,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Complete multipartite graph with the given part sizes.
    Multipartite {
        /// Comma-separated part sizes, e.g. 2,2,2,3,3.
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the part classes as JSON here.
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
    /// Copies of a complete multipartite base glued along a clique.
    Cockade {
        #[arg(long, value_delimiter = ',', default_values_t = vec![1, 2, 2, 2, 2, 2])]
        parts: Vec<usize>,
        /// Size of the gluing clique.
        #[arg(long, default_value_t = 6)]
        glue: usize,
        #[arg(long, default_value_t = 2)]
        copies: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Uniquely k-colorable graph from the seeded generator.
    Unique {
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit a Kempe-coloring certificate instead of bare graph6.
        #[arg(long)]
        certificate: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the coloring classes as JSON here.
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
    /// Uniquely k-colorable graph padded with universal vertices to a
    /// Kempe coloring of order ten.
    Padded {
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit a Kempe-coloring certificate instead of bare graph6.
        #[arg(long)]
        certificate: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write the order-ten classes as JSON here.
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

fn malformed(msg: impl std::fmt::Display) -> Failure {
    Failure { code: 2, msg: msg.to_string() }
}

fn false_claim(msg: impl std::fmt::Display) -> Failure {
    Failure { code: 1, msg: msg.to_string() }
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            f.code
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    match cli.cmd {
        Cmd::Check(a) => check_cmd(a),
        Cmd::Extract(a) => extract_cmd(a),
        Cmd::Gen(a) => gen_cmd(a.family),
    }
}

// ---- input plumbing ----

fn read_input(arg: Option<&str>) -> Result<String, Failure> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| malformed(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(s) if std::path::Path::new(s).exists() => {
            std::fs::read_to_string(s).map_err(|e| malformed(format!("reading {s}: {e}")))
        }
        Some(s) => Ok(s.to_string()),
    }
}

fn parse_graph(text: &str, format: Format) -> Result<Graph, Failure> {
    match format {
        Format::Graph6 => from_graph6(text.trim()).map_err(malformed),
        Format::Edgelist => from_edge_list(text).map_err(malformed),
    }
}

/// Inline JSON passes through; anything else is a file path.
fn load_spec(spec: &str) -> Result<String, Failure> {
    let t = spec.trim_start();
    if t.starts_with('[') || t.starts_with('{') {
        Ok(spec.to_string())
    } else {
        std::fs::read_to_string(spec).map_err(|e| malformed(format!("reading {spec}: {e}")))
    }
}

fn parse_sets(g: &Graph, spec: &str) -> Result<Vec<Vec<usize>>, Failure> {
    let text = load_spec(spec)?;
    let sets: Vec<Vec<usize>> =
        serde_json::from_str(&text).map_err(|e| malformed(format!("set data: {e}")))?;
    for s in &sets {
        for &v in s {
            if v >= g.n() {
                return Err(malformed(format!(
                    "vertex {v} out of range for a graph on {} vertices",
                    g.n()
                )));
            }
        }
    }
    Ok(sets)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, format!("{text}\n"))
            .map_err(|e| malformed(format!("writing {}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

// ---- check ----

fn check_cmd(a: CheckArgs) -> Result<i32, Failure> {
    if let Some(spec) = &a.certificate {
        return check_certificate(spec, &a.output);
    }
    let g = parse_graph(&read_input(a.graph.as_deref())?, a.format)?;
    let mut checks = serde_json::Map::new();
    let mut all_ok = true;

    if let Some(spec) = &a.coloring {
        let (v, ok) = coloring_report(&g, &parse_sets(&g, spec)?, false);
        checks.insert("coloring".into(), v);
        all_ok &= ok;
    }
    if let Some(spec) = &a.kempe {
        let (v, ok) = coloring_report(&g, &parse_sets(&g, spec)?, true);
        checks.insert("kempe".into(), v);
        all_ok &= ok;
    }
    if let Some(spec) = &a.lemma1 {
        let (v, ok) = lemma1_report(&g, &parse_sets(&g, spec)?);
        checks.insert("lemma1".into(), v);
        all_ok &= ok;
    }
    if let Some(spec) = &a.lemma2 {
        let (v, ok) = lemma2_report(&g, &parse_sets(&g, spec)?);
        checks.insert("lemma2".into(), v);
        all_ok &= ok;
    }
    if let Some(spec) = &a.minor {
        let (v, ok) = minor_report(&g, &parse_sets(&g, spec)?);
        checks.insert("minor".into(), v);
        all_ok &= ok;
    }
    if checks.is_empty() {
        return Err(malformed(
            "nothing to check: pass --coloring, --kempe, --lemma1, --lemma2, --minor, or --certificate",
        ));
    }

    let report = json!({
        "graph": to_graph6(&g),
        "n": g.n(),
        "m": g.m(),
        "checks": checks,
        "ok": all_ok,
    });
    emit(&a.output, &serde_json::to_string_pretty(&report).expect("report serializes"))?;
    Ok(if all_ok { 0 } else { 1 })
}

fn check_certificate(spec: &str, output: &Option<PathBuf>) -> Result<i32, Failure> {
    let text = load_spec(spec)?;
    let cert = Certificate::from_json(&text).map_err(|e| malformed(format!("certificate: {e}")))?;
    let kind = match serde_json::to_value(&cert.body) {
        Ok(v) => v["kind"].as_str().unwrap_or("unknown").to_string(),
        Err(_) => "unknown".to_string(),
    };
    let (ok, reason) = match cert.verify() {
        Ok(()) => (true, None),
        Err(CertificateError::PropertyFalse(m)) => (false, Some(m)),
        Err(e) => return Err(malformed(e)),
    };
    let report = json!({
        "certificate": { "kind": kind, "tool_version": cert.tool_version, "ok": ok, "reason": reason },
        "ok": ok,
    });
    emit(output, &serde_json::to_string_pretty(&report).expect("report serializes"))?;
    Ok(if ok { 0 } else { 1 })
}

fn coloring_report(g: &Graph, sets: &[Vec<usize>], need_kempe: bool) -> (serde_json::Value, bool) {
    let p = match Partition::from_vecs(sets) {
        Ok(p) => p,
        Err(e) => return (json!({ "ok": false, "reason": e.to_string() }), false),
    };
    match verify_partition(g, &p) {
        Ok(r) => {
            let ok = if need_kempe { r.kempe } else { r.proper };
            (
                json!({
                    "ok": ok,
                    "order": r.order,
                    "proper": r.proper,
                    "kempe": r.kempe,
                    "star_property": r.star_ok,
                    "failing_pair": r.failing_pair,
                }),
                ok,
            )
        }
        Err(e) => (json!({ "ok": false, "reason": e.to_string() }), false),
    }
}

fn lemma1_report(g: &Graph, sets: &[Vec<usize>]) -> (serde_json::Value, bool) {
    let p = match Partition::from_vecs(sets) {
        Ok(p) => p,
        Err(e) => return (json!({ "ok": false, "reason": e.to_string() }), false),
    };
    match check_lemma1(g, &p) {
        Ok(r) => (
            json!({
                "ok": r.holds,
                "order": r.order,
                "n": r.n,
                "m": r.m,
                "bound": r.bound,
                "equality": r.equality,
                "all_pairs_trees": r.all_pairs_trees,
                "non_tree_pair": r.non_tree_pair,
            }),
            r.holds,
        ),
        Err(e) => (json!({ "ok": false, "reason": e.to_string() }), false),
    }
}

fn lemma2_report(g: &Graph, sets: &[Vec<usize>]) -> (serde_json::Value, bool) {
    let p = match Partition::from_vecs(sets) {
        Ok(p) => p,
        Err(e) => return (json!({ "ok": false, "reason": e.to_string() }), false),
    };
    match check_lemma2(g, &p) {
        Ok(r) => (
            json!({
                "ok": r.holds,
                "order": r.order,
                "connectivity": r.connectivity,
                "required": r.required,
            }),
            r.holds,
        ),
        Err(e) => (json!({ "ok": false, "reason": e.to_string() }), false),
    }
}

fn minor_report(g: &Graph, sets: &[Vec<usize>]) -> (serde_json::Value, bool) {
    let w = MinorWitness::from_vecs(sets);
    match verify_clique_minor(g, &w) {
        Ok(()) => (json!({ "ok": true, "order": w.order() }), true),
        Err(v) => (
            json!({ "ok": false, "order": w.order(), "violation": v.to_string() }),
            false,
        ),
    }
}

// ---- extract ----

fn extract_cmd(a: ExtractArgs) -> Result<i32, Failure> {
    if a.k < 1 || a.k > 10 {
        return Err(malformed("k must be between 1 and 10"));
    }
    let g = parse_graph(&read_input(a.graph.as_deref())?, a.format)?;
    let budget = SearchBudget {
        node_limit: a.node_limit,
        time_limit: Duration::from_millis(a.timeout_ms),
    };
    match from_unique(&g, a.k, &budget) {
        Ok((w, trace)) => {
            verify_clique_minor(&g, &w).expect("extracted witnesses verify");
            let cert = Certificate::extraction(&g, a.k, &w, &trace);
            emit(&a.output, &cert.to_json())?;
            Ok(0)
        }
        Err(ExtractError::BudgetExceeded { nodes, .. }) => Err(Failure {
            code: 3,
            msg: format!(
                "search budget exhausted after {nodes} nodes; raise --node-limit or --timeout-ms"
            ),
        }),
        Err(ExtractError::TooLarge(e)) => Err(malformed(e)),
        Err(ExtractError::OrderTooHigh { k }) => Err(malformed(format!("k = {k} exceeds 10"))),
        Err(ExtractError::ExceptionalContradiction { report, .. }) => {
            let items: Vec<serde_json::Value> = report
                .items
                .iter()
                .map(|i| {
                    json!({
                        "name": i.name,
                        "expected": i.expected,
                        "observed": i.observed,
                        "ok": i.ok,
                    })
                })
                .collect();
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&json!({ "contradiction": items }))
                    .expect("diagnostics serialize")
            );
            Err(false_claim(
                "no witness: the input fails the preconditions the pipeline relies on",
            ))
        }
        Err(
            e @ (ExtractError::NotUnique { .. }
            | ExtractError::NotKempe(_)
            | ExtractError::WrongOrder { .. }),
        ) => Err(false_claim(e)),
    }
}

// ---- gen ----

fn gen_cmd(family: Family) -> Result<i32, Failure> {
    match family {
        Family::Multipartite { parts, output, partition_out } => {
            let (g, classes) = complete_multipartite(&parts).map_err(malformed)?;
            if let Some(path) = &partition_out {
                let vecs: Vec<Vec<usize>> = classes.iter().map(|c| c.to_vec()).collect();
                write_json(path, &json!(vecs))?;
            }
            emit(&output, &to_graph6(&g))?;
            Ok(0)
        }
        Family::Cockade { parts, glue, copies, output } => {
            if copies < 1 {
                return Err(malformed("need at least one copy"));
            }
            let g = cockade(&parts, glue, copies).map_err(malformed)?;
            emit(&output, &to_graph6(&g))?;
            Ok(0)
        }
        Family::Unique { k, extra, seed, certificate, output, partition_out } => {
            let (g, p) = generate_checked(k, extra, seed)?;
            if let Some(path) = &partition_out {
                write_json(path, &json!(p.to_vecs()))?;
            }
            if certificate {
                let cert = Certificate::kempe_coloring(&g, &p).with_seed(seed);
                emit(&output, &cert.to_json())?;
            } else {
                emit(&output, &to_graph6(&g))?;
            }
            Ok(0)
        }
        Family::Padded { k, extra, seed, certificate, output, partition_out } => {
            if k > 10 {
                return Err(malformed("padding targets order ten; k must be at most 10"));
            }
            let (g, p) = generate_checked(k, extra, seed)?;
            let (padded, padded_p, _) = pad_to_ten(&g, &p).map_err(malformed)?;
            if let Some(path) = &partition_out {
                write_json(path, &json!(padded_p.to_vecs()))?;
            }
            if certificate {
                let cert = Certificate::kempe_coloring(&padded, &padded_p).with_seed(seed);
                emit(&output, &cert.to_json())?;
            } else {
                emit(&output, &to_graph6(&padded))?;
            }
            Ok(0)
        }
    }
}

fn generate_checked(k: usize, extra: usize, seed: u64) -> Result<(Graph, Partition), Failure> {
    if k < 1 {
        return Err(malformed("k must be at least 1"));
    }
    if k + extra > 20 {
        return Err(malformed("k + extra must stay at most 20"));
    }
    Ok(generate_uniquely_colorable(k, extra, seed))
}

fn write_json(path: &PathBuf, value: &serde_json::Value) -> Result<(), Failure> {
    std::fs::write(
        path,
        format!("{}\n", serde_json::to_string_pretty(value).expect("JSON serializes")),
    )
    .map_err(|e| malformed(format!("writing {}: {e}", path.display())))
}
