//! Face counts of the independence complex and the h-polynomial of the
//! Hilbert series of `R/I(G)`.

use serde::Serialize;

use crate::graph::{Bits, Graph};

/// `faces_by_size[i]` is the number of independent sets of size `i`, i.e.
/// `f_{i-1}`; `faces_by_size[0] = 1` is the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    faces_by_size: Vec<u64>,
}

impl FVector {
    pub fn from_faces_by_size(faces_by_size: Vec<u64>) -> Self {
        assert_eq!(faces_by_size.first(), Some(&1), "the empty face is unique");
        assert!(faces_by_size.last().is_some_and(|&f| f > 0));
        FVector { faces_by_size }
    }

    /// Krull dimension of `R/I(G)`: the size of the largest face.
    pub fn dim(&self) -> usize {
        self.faces_by_size.len() - 1
    }

    pub fn faces_by_size(&self) -> &[u64] {
        &self.faces_by_size
    }

    /// `f_i` for `i >= -1`.
    pub fn f(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.faces_by_size.get(k))
            .copied()
            .unwrap_or(0)
    }
}

pub fn independence_fvector(g: &Graph) -> FVector {
    let mut counts = vec![0u64; g.n() + 1];
    count_independent(g.adjacency(), g.vertex_set().mask(), 0, &mut counts);
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    FVector::from_faces_by_size(counts)
}

fn count_independent(adj: &[u64], avail: u64, size: usize, counts: &mut [u64]) {
    // Once no two available vertices are adjacent every subset is a face.
    if Bits(avail).all(|v| adj[v] & avail == 0) {
        let k = avail.count_ones() as usize;
        let mut binom = 1u64;
        for t in 0..=k {
            counts[size + t] += binom;
            binom = binom * (k - t) as u64 / (t + 1) as u64;
        }
        return;
    }
    let v = Bits(avail)
        .find(|&v| adj[v] & avail != 0)
        .expect("some available vertex has a neighbour");
    count_independent(adj, avail & !(1 << v) & !adj[v], size + 1, counts);
    count_independent(adj, avail & !(1 << v), size, counts);
}

/// `h(t)` with `H(t) = h(t) / (1 - t)^d`, coefficients `h_0 .. h_s`, `h_s != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HPolynomial {
    dim: usize,
    coefficients: Vec<i64>,
}

impl HPolynomial {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coefficients.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

/// `h(t) = sum_{i=0}^{d} f_{i-1} t^i (1 - t)^{d-i}`, exact.
pub fn h_polynomial(fv: &FVector) -> HPolynomial {
    let d = fv.dim();
    let f = fv.faces_by_size();
    let binom = |n: usize, k: usize| -> i64 {
        (0..k).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
    };
    let mut coefficients: Vec<i64> = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    let fi = i64::try_from(f[i]).expect("face count fits in i64");
                    sign * fi * binom(d - i, k - i)
                })
                .sum()
        })
        .collect();
    while coefficients.len() > 1 && coefficients.last() == Some(&0) {
        coefficients.pop();
    }
    let h = HPolynomial { dim: d, coefficients };
    assert_eq!(
        h.eval(1),
        fv.f(d as isize - 1) as i64,
        "h(1) must equal the number of facets of maximal size"
    );
    assert_ne!(h.eval(1), 0);
    assert_eq!(h.coefficients[0], 1);
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn fvectors_of_small_graphs() {
        let fv = independence_fvector(&named::path(3));
        assert_eq!(fv.faces_by_size(), &[1, 3, 1]);
        assert_eq!(fv.dim(), 2);
        let fv = independence_fvector(&named::complete(3));
        assert_eq!(fv.faces_by_size(), &[1, 3]);
        assert_eq!(fv.dim(), 1);
        let fv = independence_fvector(&Graph::empty(2).unwrap());
        assert_eq!(fv.faces_by_size(), &[1, 2, 1]);
        assert_eq!(fv.f(-1), 1);
        assert_eq!(fv.f(1), 1);
        assert_eq!(fv.f(2), 0);
    }

    #[test]
    fn hpolynomials_of_small_graphs() {
        let h = h_polynomial(&independence_fvector(&named::path(2)));
        assert_eq!(h.coefficients(), &[1, 1]);
        let h = h_polynomial(&independence_fvector(&named::complete(3)));
        assert_eq!(h.coefficients(), &[1, 2]);
        let h = h_polynomial(&independence_fvector(&named::path(3)));
        assert_eq!(h.coefficients(), &[1, 1, -1]);
        assert_eq!(h.degree(), 2);
        let h = h_polynomial(&independence_fvector(&Graph::empty(5).unwrap()));
        assert_eq!(h.coefficients(), &[1]);
        assert_eq!(h.dim(), 5);
    }

    /// The Hilbert function of `K[x]/I(G)` in degree `k` counts monomials of
    /// degree `k` whose support is a face. Multiply the truncated series by
    /// `(1-t)^d` and compare.
    #[test]
    fn agrees_with_hilbert_function_series() {
        for g in crate::graph::enumerate_connected_graphs(5).unwrap() {
            let fv = independence_fvector(&g);
            let d = fv.dim();
            let terms = 12;
            let mut series = vec![0i64; terms];
            for (k, slot) in series.iter_mut().enumerate() {
                // Monomials of degree k with support exactly a face of size
                // s: C(k-1, s-1) per face.
                *slot = if k == 0 {
                    1
                } else {
                    (1..=d.min(k))
                        .map(|s| fv.faces_by_size()[s] as i64 * choose(k - 1, s - 1))
                        .sum()
                };
            }
            for _ in 0..d {
                for k in (1..terms).rev() {
                    series[k] -= series[k - 1];
                }
            }
            let h = h_polynomial(&fv);
            for (k, &c) in series.iter().enumerate() {
                let expect = h.coefficients().get(k).copied().unwrap_or(0);
                assert_eq!(c, expect, "{g:?} coefficient {k}");
            }
        }
    }

    fn choose(n: usize, k: usize) -> i64 {
        (0..k).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
    }
}
