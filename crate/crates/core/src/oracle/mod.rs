//! Brute-force algebraic invariants of `R/I(G)`: face counts, h-polynomial,
//! graded Betti numbers over a chosen field, and the derived depth and
//! regularity.

mod betti;
mod complex;
mod field;

use serde::Serialize;

pub use betti::{betti_table, BettiTable, MAX_ORACLE_VERTICES};
pub use complex::{h_polynomial, independence_fvector, FVector, HPolynomial};
pub use field::Field;

use crate::error::Result;
use crate::graph::Graph;

/// `(n, depth, reg, dim, degh)` of one graph. `field` is `None` when the
/// values come from closed-form formulas, which do not depend on the field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub depth: usize,
    pub reg: usize,
    pub dim: usize,
    pub degh: usize,
    pub field: Option<Field>,
}

impl InvariantBundle {
    /// Compares the four invariants and `n`, ignoring the field tag.
    pub fn same_values(&self, other: &InvariantBundle) -> bool {
        self.values() == other.values()
    }

    pub fn values(&self) -> (usize, usize, usize, usize, usize) {
        (self.n, self.depth, self.reg, self.dim, self.degh)
    }
}

impl std::fmt::Display for InvariantBundle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "depth={} reg={} dim={} degh={}",
            self.depth, self.reg, self.dim, self.degh
        )
    }
}

pub fn oracle_invariants(g: &Graph, field: Field) -> Result<InvariantBundle> {
    let n = g.n();
    if !g.has_edges() {
        return Ok(InvariantBundle {
            n,
            depth: n,
            reg: 0,
            dim: n,
            degh: 0,
            field: Some(field),
        });
    }
    let betti = betti_table(g, field)?;
    let fv = independence_fvector(g);
    let h = h_polynomial(&fv);
    Ok(InvariantBundle {
        n,
        depth: n - betti.projective_dimension(),
        reg: betti.regularity(),
        dim: fv.dim(),
        degh: h.degree(),
        field: Some(betti.field()),
    })
}

/// A graph whose depth or regularity changes with the characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldDisagreement {
    pub graph6: String,
    pub first: InvariantBundle,
    pub second: InvariantBundle,
}

/// Computes every graph over both fields and lists those that disagree.
pub fn field_cross_check(graphs: &[Graph], first: Field, second: Field) -> Result<Vec<FieldDisagreement>> {
    use rayon::prelude::*;
    let results: Result<Vec<Option<FieldDisagreement>>> = graphs
        .par_iter()
        .map(|g| {
            let a = oracle_invariants(g, first)?;
            let b = oracle_invariants(g, second)?;
            Ok((!a.same_values(&b)).then(|| FieldDisagreement {
                graph6: crate::graph::emit_graph6(g),
                first: a,
                second: b,
            }))
        })
        .collect();
    Ok(results?.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn dd(g: &Graph) -> (usize, usize) {
        let b = oracle_invariants(g, Field::Gf2).unwrap();
        (b.depth, b.dim)
    }

    #[test]
    fn named_graphs() {
        let tri = oracle_invariants(&named::complete(3), Field::Gf2).unwrap();
        assert_eq!(tri.to_string(), "depth=1 reg=1 dim=1 degh=1");
        for n in 2..=8 {
            assert_eq!(dd(&named::star(n)), (1, n - 1));
        }
        let edgeless = oracle_invariants(&Graph::empty(4).unwrap(), Field::Gf2).unwrap();
        assert_eq!(edgeless.values(), (4, 4, 0, 4, 0));
    }

    #[test]
    fn small_graphs_obey_general_bounds_and_agree_across_fields() {
        for n in 2..=6 {
            let graphs = crate::graph::enumerate_connected_graphs(n).unwrap();
            for g in &graphs {
                let b = oracle_invariants(g, Field::Gf2).unwrap();
                assert!(1 <= b.depth && b.depth <= b.dim && b.dim < n, "{g:?}");
                assert!(b.reg >= 1);
                assert!(b.degh + b.depth <= b.dim + b.reg, "{g:?}");
                assert!(b.reg + b.degh <= n, "{g:?}");
            }
            let gfp = Field::prime(Field::CROSS_CHECK_PRIME).unwrap();
            assert!(field_cross_check(&graphs, Field::Gf2, gfp).unwrap().is_empty());
        }
    }
}
