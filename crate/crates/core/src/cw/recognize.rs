use super::shape::CwShape;
use crate::error::{Error, Result};
use crate::graph::{matching_numbers, Bits, Graph};

/// Star `K_{1,n-1}`; the single vertex counts as a star with no leaves.
pub fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 1 && g.edge_count() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

/// `k >= 1` triangles sharing one vertex.
pub fn is_star_triangle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || n.is_multiple_of(2) || g.edge_count() != 3 * (n - 1) / 2 {
        return false;
    }
    let Some(centre) = (0..n).find(|&v| g.degree(v) == n - 1) else {
        return false;
    };
    (0..n).filter(|&v| v != centre).all(|v| g.degree(v) == 2)
}

/// Connected, induced matching number equal to matching number, neither a
/// star nor a star triangle.
pub fn is_cameron_walker_semantic(g: &Graph) -> bool {
    if !g.is_connected() || is_star(g) || is_star_triangle(g) {
        return false;
    }
    let mn = matching_numbers(g);
    mn.matching == mn.induced
}

/// Decomposes `g` into leaves, pendant triangles and a bipartite middle, and
/// returns the resulting normalized shape.
pub fn structural_shape(g: &Graph) -> Option<CwShape> {
    let n = g.n();
    if n < 5 || !g.is_connected() {
        return None;
    }
    let adj = g.adjacency();
    let degree = |v: usize| adj[v].count_ones();
    let leaves: u64 = (0..n).filter(|&v| degree(v) == 1).fold(0, |a, v| a | 1 << v);
    let v_side: u64 = Bits(leaves).fold(0, |a, x| a | adj[x]);
    if v_side & leaves != 0 {
        return None;
    }
    // Pendant triangle: two adjacent degree-2 vertices with a common third
    // neighbour of degree at least 3.
    let mut triangles: Vec<(usize, usize, usize)> = Vec::new();
    let mut in_triangle = 0u64;
    for y1 in 0..n {
        if degree(y1) != 2 {
            continue;
        }
        for y2 in Bits(adj[y1] & !((2u64 << y1) - 1)) {
            if degree(y2) != 2 {
                continue;
            }
            let common = adj[y1] & adj[y2];
            if common.count_ones() != 1 {
                continue;
            }
            let w = common.trailing_zeros() as usize;
            if degree(w) >= 3 {
                triangles.push((w, y1, y2));
                in_triangle |= 1 << y1 | 1 << y2;
            }
        }
    }
    let middle = crate::graph::low_bits(n) & !leaves & !in_triangle;
    let w_side = middle & !v_side;
    if v_side == 0 || w_side == 0 {
        return None;
    }
    if triangles.iter().any(|&(w, _, _)| v_side >> w & 1 == 1) {
        return None;
    }
    for v in Bits(v_side) {
        if adj[v] & v_side != 0 || adj[v] & in_triangle != 0 {
            return None;
        }
    }
    for w in Bits(w_side) {
        if adj[w] & w_side != 0 || adj[w] & leaves != 0 {
            return None;
        }
    }
    if !g.is_connected_within(middle) {
        return None;
    }
    let vs: Vec<usize> = Bits(v_side).collect();
    let ws: Vec<usize> = Bits(w_side).collect();
    let s: Vec<usize> = vs
        .iter()
        .map(|&v| (adj[v] & leaves).count_ones() as usize)
        .collect();
    let t: Vec<usize> = ws
        .iter()
        .map(|&w| triangles.iter().filter(|tr| tr.0 == w).count())
        .collect();
    let mut bip = Vec::new();
    for (i, &v) in vs.iter().enumerate() {
        for (j, &w) in ws.iter().enumerate() {
            if adj[v] >> w & 1 == 1 {
                bip.push((i, j));
            }
        }
    }
    let shape = CwShape::new(s, t, &bip).ok()?;
    (shape.vertex_count() == n).then_some(shape)
}

/// The normalized shape of `g` if it is a Cameron-Walker graph. Both the
/// matching characterisation and the structural decomposition are run; a
/// disagreement is reported as a verification error.
pub fn recognize_cw(g: &Graph) -> Result<Option<CwShape>> {
    let semantic = is_cameron_walker_semantic(g);
    let structural = structural_shape(g);
    match (semantic, structural) {
        (true, Some(shape)) => Ok(Some(shape)),
        (false, None) => Ok(None),
        (semantic, structural) => Err(Error::Verification(format!(
            "Cameron-Walker recognition routes disagree on {}: matching test says {semantic}, \
             structure says {}",
            crate::graph::emit_graph6(g),
            structural.map_or("none".to_string(), |s| s.to_string())
        ))),
    }
}
