//! graph6 interchange format (single-byte size header only, so `n <= 62`)
//! and a plain edge-list text format.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn bad(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        msg: msg.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let Some(&first) = body.first() else {
        return Err(bad(skip, "empty input"));
    };
    if first == 126 {
        return Err(bad(
            skip,
            format!("extended size header: more than {MAX_VERTICES} vertices"),
        ));
    }
    if !(63..126).contains(&first) {
        return Err(bad(skip, format!("invalid size byte {first}")));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[1..];
    if data.len() < need {
        return Err(bad(
            skip + 1 + data.len(),
            format!("truncated: expected {need} data bytes, found {}", data.len()),
        ));
    }
    if data.len() > need {
        return Err(bad(skip + 1 + need, "trailing bytes after graph data"));
    }
    for (k, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad(skip + 1 + k, format!("byte {b} outside 63..=126")));
        }
    }
    if !bits.is_multiple_of(6) {
        let pad = 6 - bits % 6;
        let last = data[need - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad(skip + need, "nonzero padding bits"));
        }
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `u v` lines (0-based). Blank lines and `#` comments are skipped;
/// an optional leading `n K` line fixes the vertex count, otherwise it is one
/// more than the largest vertex mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::EdgeList { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected two fields, found {}", fields.len())));
        }
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(err("`n` must come first and only once".into()));
            }
            let n: usize = fields[1]
                .parse()
                .map_err(|e| err(format!("bad vertex count: {e}")))?;
            declared = Some(n);
            continue;
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| err(format!("bad vertex `{s}`: {e}")))
        };
        edges.push((parse(fields[0])?, parse(fields[1])?));
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(inferred);
    Graph::from_edges(n, edges)
}
