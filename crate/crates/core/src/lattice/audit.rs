use std::fmt;

use serde::Serialize;

use crate::oracle::InvariantBundle;

/// One inequality that a bundle fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: &'static str,
    pub bundle: InvariantBundle,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails for n={} {}", self.clause, self.bundle.n, self.bundle)
    }
}

pub const DEPTH_AT_LEAST_ONE: &str = "1 <= depth";
pub const DEPTH_AT_MOST_DIM: &str = "depth <= dim";
pub const DIM_AT_MOST_N: &str = "dim <= n";
pub const GAP_BOUND: &str = "degh - reg <= dim - depth";
pub const REG_PLUS_DEGH: &str = "reg + degh <= n";
pub const CW_DEPTH_AT_MOST_REG: &str = "depth <= reg";
pub const CW_REG_AT_MOST_DIM: &str = "reg <= dim";
pub const CW_DIM_IS_DEGH: &str = "dim = degh";
pub const CW_DEPTH_RANGE: &str = "2 <= depth <= floor((n-1)/2)";
pub const CW_DEPTH_PLUS_DIM: &str = "depth + dim <= n";
pub const CW_DEPTH_PLUS_TWO_DIM: &str = "n < depth + 2 dim";
pub const CW_SUM_LOWER: &str = "n + 1 <= depth + reg + dim";
pub const CW_SUM_EQUALITY: &str = "depth + reg + dim = n + 1 and depth < reg imply reg = dim";

/// Every listed inequality that `b` violates; the Cameron-Walker clauses are
/// checked only when `cw` is set.
pub fn audit_inequalities(b: &InvariantBundle, cw: bool) -> Vec<Violation> {
    let n = b.n;
    let mut failed = Vec::new();
    let mut check = |ok: bool, clause: &'static str| {
        if !ok {
            failed.push(Violation { clause, bundle: *b });
        }
    };
    check(b.depth >= 1, DEPTH_AT_LEAST_ONE);
    check(b.depth <= b.dim, DEPTH_AT_MOST_DIM);
    check(b.dim <= n, DIM_AT_MOST_N);
    check(b.degh + b.depth <= b.dim + b.reg, GAP_BOUND);
    check(b.reg + b.degh <= n, REG_PLUS_DEGH);
    if cw {
        check(b.depth <= b.reg, CW_DEPTH_AT_MOST_REG);
        check(b.reg <= b.dim, CW_REG_AT_MOST_DIM);
        check(b.dim == b.degh, CW_DIM_IS_DEGH);
        check(2 <= b.depth && 2 * b.depth < n, CW_DEPTH_RANGE);
        check(b.depth + b.dim <= n, CW_DEPTH_PLUS_DIM);
        check(n < b.depth + 2 * b.dim, CW_DEPTH_PLUS_TWO_DIM);
        let sum = b.depth + b.reg + b.dim;
        check(n < sum, CW_SUM_LOWER);
        check(!(sum == n + 1 && b.depth < b.reg) || b.reg == b.dim, CW_SUM_EQUALITY);
    }
    failed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::oracle::{oracle_invariants, Field};

    fn bundle(n: usize, depth: usize, reg: usize, dim: usize, degh: usize) -> InvariantBundle {
        InvariantBundle {
            n,
            depth,
            reg,
            dim,
            degh,
            field: None,
        }
    }

    #[test]
    fn complete_graph_fails_the_cw_lower_bound() {
        let k4 = oracle_invariants(&named::complete(4), Field::Gf2).unwrap();
        let clauses: Vec<&str> = audit_inequalities(&k4, true).iter().map(|v| v.clause).collect();
        assert!(clauses.contains(&CW_DEPTH_PLUS_TWO_DIM), "{clauses:?}");
        assert!(audit_inequalities(&k4, false).is_empty());
    }

    #[test]
    fn single_edge_is_clean() {
        assert!(audit_inequalities(&bundle(2, 1, 1, 1, 1), false).is_empty());
    }

    #[test]
    fn depth_range_uses_strict_half() {
        // floor((n-1)/2) at n = 9 is 4, at n = 8 it is 3.
        assert!(audit_inequalities(&bundle(9, 4, 4, 4, 4), true).is_empty());
        let v = audit_inequalities(&bundle(8, 4, 4, 4, 4), true);
        assert!(v.iter().any(|v| v.clause == CW_DEPTH_RANGE));
    }

    #[test]
    fn equality_case() {
        let v = audit_inequalities(&bundle(10, 3, 4, 4, 4), true);
        assert!(v.is_empty(), "{v:?}");
        // depth + reg + dim = n + 1 with depth < reg < dim.
        let v = audit_inequalities(&bundle(11, 3, 4, 5, 5), true);
        assert_eq!(v.iter().map(|v| v.clause).collect::<Vec<_>>(), vec![CW_SUM_EQUALITY]);
    }
}
