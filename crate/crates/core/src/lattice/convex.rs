use std::collections::BTreeMap;

use serde::Serialize;

use super::set::LatticePointSet;
use crate::error::{Error, Result};

/// Two points of a line of the set with a missing point between them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gap {
    pub first: (u32, u32),
    pub second: (u32, u32),
}

/// `Ok(None)` if every column `{b : (a,b) in M}` and every row
/// `{a : (a,b) in M}` is an integer interval; otherwise the first gap found,
/// columns before rows, each in ascending order.
pub fn is_convex(set: &LatticePointSet) -> Result<Option<Gap>> {
    if set.arity != 2 {
        return Err(Error::Arity {
            expected: 2,
            got: set.arity,
        });
    }
    let mut columns: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut rows: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for p in &set.points {
        columns.entry(p[0]).or_default().push(p[1]);
        rows.entry(p[1]).or_default().push(p[0]);
    }
    for (&a, bs) in &columns {
        if let Some(w) = bs.windows(2).find(|w| w[1] > w[0] + 1) {
            return Ok(Some(Gap {
                first: (a, w[0]),
                second: (a, w[1]),
            }));
        }
    }
    for (&b, as_) in &mut rows {
        as_.sort_unstable();
        if let Some(w) = as_.windows(2).find(|w| w[1] > w[0] + 1) {
            return Ok(Some(Gap {
                first: (w[0], b),
                second: (w[1], b),
            }));
        }
    }
    Ok(None)
}
