use serde::Serialize;

use super::shape::{build_cw, CwShape};
use crate::graph::{Bits, Graph, VertexSet};
use crate::oracle::InvariantBundle;

/// Upper limit on `m` for the subset sweep.
pub const MAX_SWEEP_M: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthWitness {
    pub depth: usize,
    /// Minimising subset of `v` indices (0-based, ascending); the
    /// lexicographically least among all minimisers.
    pub argmin: Vec<usize>,
    /// Independent set `A(V)` with `A ∪ N(A) = V(G)` and `|A| = depth`,
    /// in the vertex numbering of `build_cw`.
    pub witness: VertexSet,
}

/// `f(V) = sum_{v_i in V} s_i + m - |V| + sum_{N(w_j) not in V} t_j
///        + #{j : N(w_j) in V}` for `V` given as a mask over `v` indices.
pub fn f_value(shape: &CwShape, v_mask: u64) -> usize {
    let m = shape.m();
    let from_v: usize = Bits(v_mask).map(|i| shape.s()[i]).sum::<usize>() + m
        - v_mask.count_ones() as usize;
    let from_w: usize = (0..shape.p())
        .map(|j| {
            if shape.w_neighbors(j) & !v_mask == 0 {
                1
            } else {
                shape.t()[j]
            }
        })
        .sum();
    from_v + from_w
}

/// Depth as the minimum of `f(V)` over all `V`, with the explicit
/// dominating set for the minimiser. Panics if the witness fails its checks.
pub fn depth_via_fv(shape: &CwShape) -> DepthWitness {
    let m = shape.m();
    assert!(m <= MAX_SWEEP_M, "m = {m} exceeds the subset sweep limit");
    let mut best: Option<(usize, u64)> = None;
    for mask in 0u64..(1 << m) {
        let f = f_value(shape, mask);
        best = match best {
            Some((bf, bm)) if f > bf || (f == bf && !lex_less(mask, bm)) => Some((bf, bm)),
            _ => Some((f, mask)),
        };
    }
    let (depth, mask) = best.expect("at least the empty set");
    let g = build_cw(shape);
    let witness = witness_set(shape, mask);
    check_witness(&g, witness, depth);
    DepthWitness {
        depth,
        argmin: Bits(mask).collect(),
        witness,
    }
}

/// Lexicographic order of the ascending index lists of two masks.
fn lex_less(a: u64, b: u64) -> bool {
    let (mut x, mut y) = (Bits(a), Bits(b));
    loop {
        match (x.next(), y.next()) {
            (None, None) => return false,
            (None, Some(_)) => return true,
            (Some(_), None) => return false,
            (Some(i), Some(j)) if i != j => return i < j,
            _ => {}
        }
    }
}

/// `A(V)`: leaves of `v_i` in `V`, the `v_i` outside `V`, `y_{l,1}` of every
/// `w_j` with triangles whose neighbourhood leaves `V`, and the `w_j` whose
/// neighbourhood lies inside `V`.
pub fn witness_set(shape: &CwShape, v_mask: u64) -> VertexSet {
    let layout = shape.layout();
    let mut a = VertexSet::EMPTY;
    for i in 0..shape.m() {
        if v_mask >> i & 1 == 1 {
            for k in 0..shape.s()[i] {
                a.insert(layout.leaf(i, k));
            }
        } else {
            a.insert(layout.v(i));
        }
    }
    for j in 0..shape.p() {
        if shape.w_neighbors(j) & !v_mask == 0 {
            a.insert(layout.w(j));
        } else {
            for l in 0..shape.t()[j] {
                a.insert(layout.triangle_vertex(j, l, 0));
            }
        }
    }
    a
}

fn check_witness(g: &Graph, a: VertexSet, expected: usize) {
    assert!(g.is_independent(a), "A(V) = {a:?} is not independent");
    assert_eq!(
        g.closed_neighborhood(a),
        g.vertex_set(),
        "A(V) = {a:?} does not dominate"
    );
    assert_eq!(a.len(), expected, "|A(V)| differs from f(V)");
}

/// All four invariants from the structure formulas; depth from the `f(V)`
/// sweep.
pub fn cw_invariants(shape: &CwShape) -> InvariantBundle {
    let sum_s: usize = shape.s().iter().sum();
    let sum_t: usize = shape.t().iter().sum();
    let empty_w = shape.t().iter().filter(|&&t| t == 0).count();
    let dim = sum_s + sum_t + empty_w;
    InvariantBundle {
        n: shape.vertex_count(),
        depth: depth_via_fv(shape).depth,
        reg: shape.m() + sum_t,
        dim,
        degh: dim,
        field: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &[usize], t: &[usize], bip: &[(usize, usize)]) -> CwShape {
        CwShape::new(s.to_vec(), t.to_vec(), bip).unwrap()
    }

    #[test]
    fn extreme_subsets() {
        let sh = shape(&[2, 1], &[1, 0, 3], &[(0, 0), (0, 1), (1, 1), (1, 2)]);
        let sum_s: usize = sh.s().iter().sum();
        let sum_t: usize = sh.t().iter().sum();
        assert_eq!(f_value(&sh, 0), sh.m() + sum_t);
        assert_eq!(f_value(&sh, 0b11), sh.p() + sum_s);
    }

    #[test]
    fn second_special_family_depth() {
        // m = 3, s = (1,1,2), t = (1,0), v1 joined to both w's, others to w2.
        let sh = shape(&[1, 1, 2], &[1, 0], &[(0, 0), (0, 1), (1, 1), (2, 1)]);
        let w = depth_via_fv(&sh);
        assert_eq!(w.depth, 4);
        assert_eq!(cw_invariants(&sh).values(), (3 + 2 + 4 + 2, 4, 4, 6, 6));
    }

    #[test]
    fn complete_bipartite_depth_is_min_of_extremes() {
        for (s, t) in [(vec![1, 1], vec![1, 1]), (vec![3, 1], vec![2, 0, 1]), (vec![1], vec![4, 4])] {
            let bip: Vec<(usize, usize)> = (0..s.len())
                .flat_map(|i| (0..t.len()).map(move |j| (i, j)))
                .collect();
            let sh = shape(&s, &t, &bip);
            let expect = (t.len() + s.iter().sum::<usize>()).min(s.len() + t.iter().sum::<usize>());
            assert_eq!(depth_via_fv(&sh).depth, expect);
        }
    }

    #[test]
    fn ties_pick_the_lexicographically_least_subset() {
        assert!(lex_less(0, 1));
        assert!(lex_less(0b011, 0b010));
        assert!(lex_less(0b101, 0b110));
        assert!(!lex_less(0b110, 0b110));
        let sh = shape(&[1, 1], &[1], &[(0, 0), (1, 0)]);
        let w = depth_via_fv(&sh);
        let all: Vec<(u64, usize)> = (0..4).map(|m| (m, f_value(&sh, m))).collect();
        let min = all.iter().map(|x| x.1).min().unwrap();
        let first = all
            .iter()
            .filter(|x| x.1 == min)
            .map(|x| Bits(x.0).collect::<Vec<_>>())
            .min()
            .unwrap();
        assert_eq!(w.argmin, first);
    }
}
