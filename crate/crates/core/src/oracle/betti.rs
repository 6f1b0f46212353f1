//! Graded Betti numbers of `R/I(G)` from reduced homology of induced
//! subcomplexes of the independence complex (Hochster's formula).

use std::collections::BTreeMap;

use serde::Serialize;

use super::field::{Echelon, Field};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Largest vertex count accepted by the subset sweep.
pub const MAX_ORACLE_VERTICES: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    field: Field,
}

impl BettiTable {
    pub fn field(&self) -> Field {
        self.field
    }

    /// `beta_{i,j}`; zero when absent.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }
}

pub fn betti_table(g: &Graph, field: Field) -> Result<BettiTable> {
    let n = g.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::OutOfRange {
            what: "oracle vertex count",
            msg: format!("n = {n} exceeds {MAX_ORACLE_VERTICES}"),
        });
    }
    let field = match field {
        Field::Gfp(p) => Field::prime(p)?,
        f => f,
    };
    let adj = g.adjacency();
    let mut entries = BTreeMap::new();
    entries.insert((0, 0), 1);
    for w in 1u64..(1 << n) {
        // An isolated vertex of G[W] is a cone point of the induced complex.
        if Bits(w).any(|v| adj[v] & w == 0) {
            continue;
        }
        let j = w.count_ones() as usize;
        for (k, rank) in reduced_homology(adj, w, field).into_iter().enumerate() {
            if rank > 0 {
                // k indexes dimension k - 1.
                let i = j - k;
                *entries.entry((i, j)).or_insert(0) += rank;
            }
        }
    }
    Ok(BettiTable { entries, field })
}

/// Ranks of reduced homology of the independence complex of `G[w]`;
/// entry `k` is the rank in dimension `k - 1`.
pub(crate) fn reduced_homology(adj: &[u64], w: u64, field: Field) -> Vec<u64> {
    let faces = faces_by_size(adj, w);
    // ranks[k]: rank of the boundary map from size-k faces to size-(k-1) faces.
    let mut ranks = vec![0usize; faces.len() + 1];
    if faces.len() > 1 {
        ranks[1] = 1;
    }
    for k in 2..faces.len() {
        let lower = &faces[k - 1];
        let mut e = Echelon::new(field);
        let mut row = Vec::with_capacity(k);
        for &sigma in &faces[k] {
            row.clear();
            for (q, v) in Bits(sigma).enumerate() {
                let tau = sigma & !(1 << v);
                let col = lower.binary_search(&tau).expect("faces are closed under subsets");
                row.push((col, if q % 2 == 0 { 1 } else { -1 }));
            }
            e.push_signed(&row, lower.len());
            if e.rank() == lower.len() {
                break;
            }
        }
        ranks[k] = e.rank();
    }
    let homology: Vec<u64> = (0..faces.len())
        .map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect();
    let euler_homology: i64 = homology
        .iter()
        .enumerate()
        .map(|(k, &h)| if k % 2 == 0 { -(h as i64) } else { h as i64 })
        .sum();
    let euler_faces: i64 = faces
        .iter()
        .enumerate()
        .map(|(k, f)| if k % 2 == 0 { -(f.len() as i64) } else { f.len() as i64 })
        .sum();
    assert_eq!(euler_homology, euler_faces, "Euler characteristic mismatch on W = {w:#b}");
    homology
}

/// Independent subsets of `w`, grouped by size, each group sorted.
fn faces_by_size(adj: &[u64], w: u64) -> Vec<Vec<u64>> {
    let mut faces: Vec<Vec<u64>> = vec![Vec::new(); w.count_ones() as usize + 1];
    collect_faces(adj, w, 0, &mut faces);
    while faces.last().is_some_and(Vec::is_empty) {
        faces.pop();
    }
    for group in &mut faces {
        group.sort_unstable();
    }
    faces
}

fn collect_faces(adj: &[u64], avail: u64, chosen: u64, faces: &mut [Vec<u64>]) {
    faces[chosen.count_ones() as usize].push(chosen);
    for v in Bits(avail) {
        let later = avail & !((2u64 << v) - 1);
        collect_faces(adj, later & !adj[v], chosen | 1 << v, faces);
    }
}
