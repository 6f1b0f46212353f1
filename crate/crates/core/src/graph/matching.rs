//! Exact branch-and-bound searches on vertex masks. The graphs in play are
//! tiny, so no blossom algorithm.

use super::{Bits, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchingNumbers {
    /// Maximum matching size.
    pub matching: usize,
    /// Maximum induced matching size.
    pub induced: usize,
}

pub fn matching_numbers(g: &Graph) -> MatchingNumbers {
    let all = g.vertex_set().mask();
    let adj = g.adjacency();
    let mut best = 0;
    max_matching(adj, all, 0, &mut best);
    let matching = best;
    best = 0;
    max_induced_matching(adj, all, 0, &mut best);
    MatchingNumbers {
        matching,
        induced: best,
    }
}

fn max_matching(adj: &[u64], avail: u64, size: usize, best: &mut usize) {
    // Only vertices with an available neighbour can still be matched.
    let live = Bits(avail).fold(0u64, |m, v| {
        if adj[v] & avail != 0 {
            m | 1 << v
        } else {
            m
        }
    });
    *best = (*best).max(size);
    if size + live.count_ones() as usize / 2 <= *best {
        return;
    }
    let v = live.trailing_zeros() as usize;
    for u in Bits(adj[v] & live) {
        max_matching(adj, live & !(1 << v | 1 << u), size + 1, best);
    }
    max_matching(adj, live & !(1 << v), size, best);
}

fn max_induced_matching(adj: &[u64], avail: u64, size: usize, best: &mut usize) {
    let live = Bits(avail).fold(0u64, |m, v| {
        if adj[v] & avail != 0 {
            m | 1 << v
        } else {
            m
        }
    });
    *best = (*best).max(size);
    if size + live.count_ones() as usize / 2 <= *best {
        return;
    }
    let v = live.trailing_zeros() as usize;
    for u in Bits(adj[v] & live) {
        // Later edges must avoid N[u] and N[v] entirely.
        let blocked = 1 << v | 1 << u | adj[v] | adj[u];
        max_induced_matching(adj, live & !blocked, size + 1, best);
    }
    max_induced_matching(adj, live & !(1 << v), size, best);
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set; among those, the one found first by branching
/// on the lowest-numbered vertex (deterministic).
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut best = 0u64;
    mis(g.adjacency(), g.vertex_set().mask(), 0, &mut best);
    VertexSet::from_mask(best)
}

fn mis(adj: &[u64], avail: u64, chosen: u64, best: &mut u64) {
    if avail == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + avail.count_ones() <= best.count_ones() {
        return;
    }
    let v = avail.trailing_zeros() as usize;
    // Vertices with no available neighbour are always taken.
    if adj[v] & avail == 0 {
        mis(adj, avail & !(1 << v), chosen | 1 << v, best);
        return;
    }
    mis(adj, avail & !(1 << v) & !adj[v], chosen | 1 << v, best);
    mis(adj, avail & !(1 << v), chosen, best);
}

/// `i(G)`: the minimum size of an independent set `A` with
/// `A ∪ N(A) = V(G)`.
pub fn independence_domination(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut best = n;
    ids(
        g.adjacency(),
        g.vertex_set().mask(),
        g.vertex_set().mask(),
        0,
        &mut best,
    );
    best
}

fn ids(adj: &[u64], undominated: u64, allowed: u64, size: usize, best: &mut usize) {
    if undominated == 0 {
        *best = (*best).min(size);
        return;
    }
    if size + 1 >= *best {
        return;
    }
    // Some vertex of N[v] must join A.
    let v = undominated.trailing_zeros() as usize;
    for u in Bits((adj[v] | 1 << v) & allowed) {
        let closed = adj[u] | 1 << u;
        ids(adj, undominated & !closed, allowed & !closed, size + 1, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Brute force over all edge subsets.
    fn brute_matchings(g: &Graph) -> (usize, usize) {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let (mut m, mut im) = (0, 0);
        for mask in 0u32..(1 << edges.len()) {
            let chosen: Vec<(usize, usize)> = Bits(mask as u64).map(|k| edges[k]).collect();
            let disjoint = chosen.iter().enumerate().all(|(i, a)| {
                chosen[i + 1..]
                    .iter()
                    .all(|b| a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1)
            });
            if !disjoint {
                continue;
            }
            m = m.max(chosen.len());
            let induced = chosen.iter().enumerate().all(|(i, a)| {
                chosen[i + 1..].iter().all(|b| {
                    !g.has_edge(a.0, b.0)
                        && !g.has_edge(a.0, b.1)
                        && !g.has_edge(a.1, b.0)
                        && !g.has_edge(a.1, b.1)
                })
            });
            if induced {
                im = im.max(chosen.len());
            }
        }
        (m, im)
    }

    fn brute_i(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .map(VertexSet::from_mask)
            .filter(|&a| g.is_independent(a) && g.closed_neighborhood(a) == g.vertex_set())
            .map(VertexSet::len)
            .min()
            .unwrap()
    }

    #[test]
    fn named_examples() {
        assert_eq!(
            matching_numbers(&star(5)),
            MatchingNumbers {
                matching: 1,
                induced: 1
            }
        );
        assert_eq!(brute_matchings(&cycle(5)), (2, 1));
        assert_eq!(
            matching_numbers(&cycle(5)),
            MatchingNumbers {
                matching: 2,
                induced: 1
            }
        );
        for k in 1..=4 {
            let mn = matching_numbers(&star_triangle(k));
            assert_eq!((mn.matching, mn.induced), (k, k));
        }
        assert_eq!(independence_number(&path(3)), 2);
        assert_eq!(independence_number(&complete(3)), 1);
        assert_eq!(independence_number(&Graph::empty(6).unwrap()), 6);
        assert_eq!(independence_number(&star(7)), 6);
        assert_eq!(independence_domination(&star(7)), 1);
        assert_eq!(independence_domination(&cycle(5)), 2);
        assert_eq!(brute_i(&cycle(5)), 2);
    }

    #[test]
    fn agrees_with_brute_force_on_all_six_vertex_graphs() {
        for g in crate::graph::enumerate_connected_graphs(6).unwrap() {
            let mn = matching_numbers(&g);
            assert_eq!((mn.matching, mn.induced), brute_matchings(&g), "{g:?}");
            assert!(mn.induced <= mn.matching);
            assert_eq!(independence_domination(&g), brute_i(&g), "{g:?}");
            let s = maximum_independent_set(&g);
            assert!(g.is_independent(s));
            let brute_alpha = (0u64..1 << g.n())
                .map(VertexSet::from_mask)
                .filter(|&a| g.is_independent(a))
                .map(VertexSet::len)
                .max()
                .unwrap();
            assert_eq!(s.len(), brute_alpha);
        }
    }
}
