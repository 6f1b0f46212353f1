use std::collections::BTreeMap;

use rayon::prelude::*;

use super::shape::CwShape;
use crate::error::{Error, Result};

/// Largest `n` accepted by the shape enumeration.
pub const MAX_SHAPE_VERTICES: usize = 16;

/// Every normalized Cameron-Walker shape on exactly `n` vertices, one per
/// isomorphism class of graph, sorted by canonical key.
pub fn enumerate_cw_shapes(n: usize) -> Result<Vec<CwShape>> {
    if n < 5 {
        return Err(Error::OutOfRange {
            what: "Cameron-Walker vertex count",
            msg: format!("n = {n}; Cameron-Walker graphs have at least 5 vertices"),
        });
    }
    if n > MAX_SHAPE_VERTICES {
        return Err(Error::OutOfRange {
            what: "Cameron-Walker vertex count",
            msg: format!("n = {n} exceeds the shape enumeration limit {MAX_SHAPE_VERTICES}"),
        });
    }
    let ms: Vec<usize> = (1..=(n - 1) / 2).collect();
    let found: Vec<(String, CwShape)> = ms
        .par_iter()
        .flat_map_iter(|&m| shapes_with_m(n, m))
        .collect();
    let unique: BTreeMap<String, CwShape> = found.into_iter().collect();
    Ok(unique.into_values().collect())
}

fn shapes_with_m(n: usize, m: usize) -> Vec<(String, CwShape)> {
    // One leaf per v is mandatory; the rest of the budget goes to w's,
    // their triangles, and extra leaves.
    let budget = n - 2 * m;
    let mut items: Vec<(u64, usize)> = Vec::new();
    let mut out = Vec::new();
    extend_ws(m, budget, &mut items, &mut out);
    out
}

fn extend_ws(m: usize, remaining: usize, items: &mut Vec<(u64, usize)>, out: &mut Vec<(String, CwShape)>) {
    if !items.is_empty() {
        emit_with_leaves(m, remaining, items, out);
    }
    let full = (1u64 << m) - 1;
    let start = items.last().copied().unwrap_or((1, 0));
    for mask in start.0..=full {
        let min_t = if mask.count_ones() >= 2 { 0 } else { 1 };
        let first_t = if mask == start.0 { start.1.max(min_t) } else { min_t };
        let mut t = first_t;
        while 2 * t < remaining {
            items.push((mask, t));
            extend_ws(m, remaining - 1 - 2 * t, items, out);
            items.pop();
            t += 1;
        }
    }
}

fn emit_with_leaves(m: usize, extra: usize, items: &[(u64, usize)], out: &mut Vec<(String, CwShape)>) {
    let covered = items.iter().fold(0u64, |a, &(mask, _)| a | mask);
    if covered != (1u64 << m) - 1 {
        return;
    }
    let t: Vec<usize> = items.iter().map(|&(_, t)| t).collect();
    let bip: Vec<(usize, usize)> = items
        .iter()
        .enumerate()
        .flat_map(|(j, &(mask, _))| crate::graph::Bits(mask).map(move |i| (i, j)))
        .collect();
    let mut s = vec![1usize; m];
    compositions(extra, 0, &mut s, &mut |s| {
        if let Ok(shape) = CwShape::new(s.to_vec(), t.clone(), &bip) {
            out.push((shape.canonical_key(), shape));
        }
    });
}

/// Adds `extra` to the entries of `s` from index `at` on, in every way.
fn compositions(extra: usize, at: usize, s: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if at + 1 == s.len() {
        s[at] += extra;
        f(s);
        s[at] -= extra;
        return;
    }
    for k in 0..=extra {
        s[at] += k;
        compositions(extra - k, at + 1, s, f);
        s[at] -= k;
    }
}
