//! Isomorph-free generation of connected graphs by canonical augmentation.
//!
//! Every connected graph on `k + 1` vertices arises from a connected graph on
//! `k` vertices by adding a vertex with a nonempty neighbourhood: delete any
//! non-cut vertex. A child is kept only when the added vertex is a canonical
//! deletion (deleting the canonically chosen minimum-degree non-cut vertex
//! gives a graph isomorphic to the parent); siblings are then deduplicated by
//! code. Parents are pairwise non-isomorphic, so each class is produced once.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{canonical_form, Bits, Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest `n` served by the built-in generator.
pub const MAX_GENERATOR_VERTICES: usize = 10;

/// All connected graphs on `n` vertices up to isomorphism, each relabelled to
/// its canonical form, sorted by canonical code.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_GENERATOR_VERTICES {
        return Err(Error::OutOfRange {
            what: "generator vertex count",
            msg: format!(
                "n = {n}; the built-in generator handles 1..={MAX_GENERATOR_VERTICES}, \
                 supply a graph6 file for larger n"
            ),
        });
    }
    let mut level: Vec<(String, Graph)> = vec![canonical_pair(&Graph::empty(1)?)];
    for _ in 1..n {
        let mut next: Vec<(String, Graph)> = level
            .par_iter()
            .flat_map_iter(|(code, parent)| children(code, parent))
            .collect();
        next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    Ok(level.into_iter().map(|(_, g)| g).collect())
}

fn canonical_pair(g: &Graph) -> (String, Graph) {
    let c = canonical_form(g);
    let relabelled = g.relabel(c.order());
    (c.into_code(), relabelled)
}

fn children(parent_code: &str, parent: &Graph) -> Vec<(String, Graph)> {
    let k = parent.n();
    let new = k;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 1..(1u64 << k) {
        let child = parent
            .with_vertex(VertexSet::from_mask(nbrs))
            .expect("generator stays below the vertex limit");
        let new_degree = nbrs.count_ones() as usize;

        let non_cut = super::low_bits(k + 1) & !child.cut_vertices().mask();
        let min_degree = Bits(non_cut).map(|v| child.degree(v)).min().unwrap_or(0);
        if new_degree != min_degree {
            continue;
        }
        let candidates: Vec<usize> = Bits(non_cut)
            .filter(|&v| child.degree(v) == min_degree)
            .collect();

        let canon = canonical_form(&child);
        if candidates.len() > 1 {
            let pos = canon.positions();
            let chosen = *candidates
                .iter()
                .max_by_key(|&&v| pos[v])
                .expect("candidates nonempty");
            if chosen != new {
                let reduced = canonical_form(&child.remove_vertex(chosen));
                if reduced.code() != parent_code {
                    continue;
                }
            }
        }
        let relabelled = child.relabel(canon.order());
        let code = canon.into_code();
        if seen.insert(code.clone()) {
            out.push((code, relabelled));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form_exhaustive;

    /// Labelled enumeration of every edge set, connectivity filter, dedup.
    fn labelled_count(n: usize, exhaustive: bool) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        let mut codes = HashSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let g = Graph::from_edges(
                n,
                Bits(mask).map(|k| pairs[k]),
            )
            .unwrap();
            if !g.is_connected() {
                continue;
            }
            let code = if exhaustive {
                canonical_form_exhaustive(&g).into_code()
            } else {
                canonical_form(&g).into_code()
            };
            codes.insert(code);
        }
        codes.len()
    }

    #[test]
    fn small_counts_match_labelled_enumeration() {
        for n in 1..=5 {
            let generated = enumerate_connected_graphs(n).unwrap();
            assert_eq!(generated.len(), labelled_count(n, true), "n = {n}");
        }
        assert_eq!(enumerate_connected_graphs(4).unwrap().len(), 6);
        assert_eq!(enumerate_connected_graphs(1).unwrap().len(), 1);
    }

    #[test]
    fn six_vertices_match_labelled_enumeration() {
        assert_eq!(enumerate_connected_graphs(6).unwrap().len(), labelled_count(6, false));
    }

    #[test]
    fn output_is_connected_sorted_and_pairwise_distinct() {
        let graphs = enumerate_connected_graphs(6).unwrap();
        let codes: Vec<String> = graphs.iter().map(|g| canonical_form(g).into_code()).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        assert!(graphs.iter().all(Graph::is_connected));
    }

    #[test]
    fn rejects_unsupported_sizes() {
        assert!(matches!(
            enumerate_connected_graphs(0),
            Err(Error::OutOfRange { .. })
        ));
        let err = enumerate_connected_graphs(11).unwrap_err();
        assert!(err.to_string().contains("graph6"));
    }
}
