//! Text encodings: standard graph6 (header-less) and a plain edge-list format.
//!
//! Edge-list layout: first line `n m`, then `m` lines `u v` with 0-based
//! endpoints, LF line endings.

use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// Encodes to graph6. Deterministic; inverse of [`from_graph6`].
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 18-bit size form, big-endian 6-bit groups.
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Decodes a graph6 string. Rejects malformed input and graphs above the
/// 64-vertex limit.
pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
    let bad = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside the printable range 63..=126"));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 36-bit size form: necessarily beyond the vertex limit.
            return Err(GraphError::TooLarge { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(bad("truncated size header"));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge { n });
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(bad(&format!(
            "expected {expect} adjacency bytes for n={n}, got {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(s: &str) -> Result<Graph, GraphError> {
    let bad = |msg: String| GraphError::MalformedEdgeList(msg);
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty input".into()))?;
    let mut head = header.split_whitespace();
    let n: usize = head
        .next()
        .ok_or_else(|| bad("missing vertex count".into()))?
        .parse()
        .map_err(|_| bad(format!("bad vertex count in {header:?}")))?;
    let m: usize = head
        .next()
        .ok_or_else(|| bad("missing edge count".into()))?
        .parse()
        .map_err(|_| bad(format!("bad edge count in {header:?}")))?;
    if head.next().is_some() {
        return Err(bad(format!("trailing tokens in header {header:?}")));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad(format!("expected `u v` on line {line:?}")));
        };
        let u: usize = u.parse().map_err(|_| bad(format!("bad endpoint in {line:?}")))?;
        let v: usize = v.parse().map_err(|_| bad(format!("bad endpoint in {line:?}")))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(format!("header claims {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}
