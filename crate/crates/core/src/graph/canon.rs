//! Canonical labelling.
//!
//! The main routine is individualisation-refinement: refine the (optionally
//! coloured) unit partition to an equitable one, branch on the vertices of the
//! first non-singleton cell, and keep the discrete leaf whose relabelled
//! adjacency matrix is largest. Automorphisms discovered on the way prune
//! sibling branches in the same orbit.
//!
//! `canonical_form_exhaustive` tries every permutation and is only meant as a
//! test oracle for small graphs.

use super::{emit_graph6, Bits, Graph};

/// Canonical code of a graph together with the relabelling that produced it.
///
/// Two graphs (with colours, if any) are isomorphic iff their codes are equal.
/// `order()[k]` is the original vertex placed at canonical position `k`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    code: String,
    order: Vec<usize>,
}

impl CanonicalForm {
    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn into_code(self) -> String {
        self.code
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Canonical position of every original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (k, &v) in self.order.iter().enumerate() {
            pos[v] = k;
        }
        pos
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let cells = if g.n() == 0 {
        Vec::new()
    } else {
        vec![super::low_bits(g.n())]
    };
    let order = search(g.adjacency(), cells);
    CanonicalForm {
        code: emit_graph6(&g.relabel(&order)),
        order,
    }
}

/// Canonical form of a vertex-coloured graph; isomorphisms must preserve
/// colours. Cells are ordered by colour value.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    assert_eq!(colors.len(), g.n(), "one colour per vertex");
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells = palette
        .iter()
        .map(|&c| {
            colors
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x == c)
                .fold(0u64, |m, (v, _)| m | 1 << v)
        })
        .collect();
    let order = search(g.adjacency(), cells);
    let mut code: String = order
        .iter()
        .map(|&v| colors[v].to_string())
        .collect::<Vec<_>>()
        .join(",");
    code.push(';');
    code.push_str(&emit_graph6(&g.relabel(&order)));
    CanonicalForm { code, order }
}

/// Maximum relabelled adjacency over all `n!` orderings. Exponential; tests only.
pub fn canonical_form_exhaustive(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= 10, "exhaustive canonical form is limited to tiny graphs");
    let adj = g.adjacency();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = (permuted_rows(adj, &perm), perm.clone());
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let rows = permuted_rows(adj, &perm);
            if rows > best.0 {
                best = (rows, perm.clone());
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let order = best.1;
    CanonicalForm {
        code: emit_graph6(&g.relabel(&order)),
        order,
    }
}

fn permuted_rows(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; order.len()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    order
        .iter()
        .map(|&v| Bits(adj[v]).fold(0u64, |m, u| m | 1 << (63 - pos[u])))
        .collect()
}

/// Refines an ordered partition until it is equitable. Fragments of a split
/// cell are ordered by their neighbour count into the splitter, so the result
/// depends only on the structure, never on vertex labels.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(64);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 4);
            for &cell in cells.iter() {
                if cell & (cell - 1) == 0 {
                    next.push(cell);
                    continue;
                }
                scratch.clear();
                scratch.extend(Bits(cell).map(|v| ((adj[v] & splitter).count_ones(), v)));
                scratch.sort_unstable();
                let mut current = scratch[0].0;
                let mut fragment = 0u64;
                for &(count, v) in &scratch {
                    if count != current {
                        next.push(fragment);
                        fragment = 0;
                        current = count;
                    }
                    fragment |= 1 << v;
                }
                next.push(fragment);
            }
            if next.len() != cells.len() {
                changed = true;
                *cells = next;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    rows: Vec<u64>,
    order: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn search(adj: &[u64], mut cells: Vec<u64>) -> Vec<usize> {
    if adj.is_empty() {
        return Vec::new();
    }
    refine(adj, &mut cells);
    let mut s = Search {
        adj,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    s.descend(cells, &mut Vec::new(), true, 0);
    s.best.expect("search reaches at least one leaf").order
}

impl Search<'_> {
    /// Returns `Some(level)` to unwind to the node at depth `level`.
    fn descend(
        &mut self,
        cells: Vec<u64>,
        prefix: &mut Vec<usize>,
        on_first_path: bool,
        diverged_at: usize,
    ) -> Option<usize> {
        let Some(ci) = cells.iter().position(|c| c & (c - 1) != 0) else {
            return self.leaf(&cells, diverged_at);
        };
        let level = prefix.len();
        let target = cells[ci];
        let mut tried = 0u64;
        for u in Bits(target) {
            if tried != 0 && self.same_orbit_as_tried(u, tried, prefix) {
                continue;
            }
            let child_on_first = on_first_path && tried == 0;
            tried |= 1 << u;

            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ci]);
            child.push(1 << u);
            child.push(target & !(1 << u));
            child.extend_from_slice(&cells[ci + 1..]);
            refine(self.adj, &mut child);

            let child_diverged = if on_first_path && !child_on_first {
                level
            } else {
                diverged_at
            };
            prefix.push(u);
            let jump = self.descend(child, prefix, child_on_first, child_diverged);
            prefix.pop();
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], diverged_at: usize) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows = permuted_rows(self.adj, &order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                rows: rows.clone(),
                order: order.clone(),
            });
            self.best = Some(Leaf { rows, order });
            return None;
        };
        if rows == first.rows {
            let auto = compose(&first.order, &order);
            self.autos.push(auto);
            return Some(diverged_at);
        }
        let best = self.best.as_mut().expect("best set with first");
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Greater => *best = Leaf { rows, order },
            std::cmp::Ordering::Equal => {
                let auto = compose(&best.order, &order);
                self.autos.push(auto);
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }

    fn same_orbit_as_tried(&self, u: usize, tried: u64, prefix: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if prefix.iter().any(|&p| auto[p] != p) {
                continue;
            }
            any = true;
            for (v, &w) in auto.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, u);
        Bits(tried).any(|w| find(&mut parent, w) == root)
    }
}

/// The automorphism sending `from[k]` to `to[k]`.
fn compose(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut auto = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        auto[a] = b;
    }
    auto
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use std::collections::HashSet;

    #[test]
    fn relabelled_paths_agree() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).code(), canonical_form(&b).code());
        assert_ne!(
            canonical_form(&a).code(),
            canonical_form(&named::complete(3)).code()
        );
    }

    #[test]
    fn labelled_trees_on_four_vertices_give_two_classes() {
        // Every spanning tree of K4 (16 labelled trees), not just the paths.
        let all: Vec<(usize, usize)> = named::complete(4).edges().collect();
        let mut codes = HashSet::new();
        let mut exhaustive = HashSet::new();
        let mut trees = 0;
        for mask in 0u32..64 {
            if mask.count_ones() != 3 {
                continue;
            }
            let edges = all
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(4, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            trees += 1;
            codes.insert(canonical_form(&g).into_code());
            exhaustive.insert(canonical_form_exhaustive(&g).into_code());
        }
        assert_eq!(trees, 16);
        assert_eq!(codes.len(), 2);
        assert_eq!(exhaustive.len(), 2);
    }

    #[test]
    fn order_is_a_relabelling_to_the_code() {
        let g = named::star_triangle(3);
        let c = canonical_form(&g);
        assert_eq!(emit_graph6(&g.relabel(c.order())), c.code());
        let pos = c.positions();
        for (k, &v) in c.order().iter().enumerate() {
            assert_eq!(pos[v], k);
        }
    }

    #[test]
    fn symmetric_graphs_terminate_quickly() {
        for n in [1, 2, 12, 30, 62] {
            let c = canonical_form(&named::complete(n));
            assert_eq!(c.order().len(), n);
            canonical_form(&Graph::empty(n).unwrap());
        }
        canonical_form(&named::cycle(40));
    }

    #[test]
    fn colours_separate_otherwise_isomorphic_graphs() {
        let g = named::path(3);
        let a = canonical_form_colored(&g, &[1, 0, 0]);
        let b = canonical_form_colored(&g, &[0, 0, 1]);
        let c = canonical_form_colored(&g, &[0, 1, 0]);
        assert_eq!(a.code(), b.code());
        assert_ne!(a.code(), c.code());
    }
}
