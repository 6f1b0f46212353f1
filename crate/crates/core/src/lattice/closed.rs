use super::set::{LatticePointSet, Provenance, SetKind};
use crate::error::{Error, Result};

/// Builds the closed-form set of `kind` for `n`.
pub fn closed_form_set(kind: SetKind, n: usize) -> Result<LatticePointSet> {
    if n < kind.min_n() {
        return Err(Error::OutOfRange {
            what: "closed-form n",
            msg: format!("{kind} is defined for n >= {}, got {n}", kind.min_n()),
        });
    }
    let mut set = LatticePointSet::new(n, kind.arity(), Provenance::ClosedForm { kind });
    let points = match kind {
        SetKind::CMinus => c_minus(n),
        SetKind::CPlus => c_plus(n),
        SetKind::CwDd => cw_dd(n),
        SetKind::Cw2Dd => cw2_dd(n),
        SetKind::CwTuple4 => cw_tuple4(n),
        SetKind::Rd => rd(n),
    };
    for p in points {
        set.insert(p.into_iter().map(|x| x as u32).collect());
    }
    Ok(set)
}

fn c_minus(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![1, n - 1]];
    for a in 1..=n / 2 {
        for b in a..=n - 2 {
            out.push(vec![a, b]);
        }
    }
    out
}

fn c_plus(n: usize) -> Vec<Vec<usize>> {
    (1..n)
        .flat_map(|a| (a..n).map(move |b| vec![a, b]))
        .collect()
}

fn cw2_dd(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![2, n - 2], vec![2, n - 3]];
    if n % 2 == 1 {
        out.push(vec![2, (n - 1) / 2]);
    }
    out
}

fn cw_dd(n: usize) -> Vec<Vec<usize>> {
    let mut out = cw2_dd(n);
    for b in 1..n {
        if n < 3 * b && 2 * b < n {
            out.push(vec![b, b]);
        }
    }
    for a in 3..=(n - 1) / 2 {
        for b in a + 1..=n - a {
            if 2 * b > n - a {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

fn cw_tuple4(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![2, 2, n - 2, n - 2], vec![2, 2, n - 3, n - 3]];
    if n % 2 == 1 {
        let k = (n - 1) / 2;
        out.push(vec![2, k, k, k]);
    }
    let half = (n - 1) / 2;
    for a in 3..=half {
        for d in a..=half {
            if n < a + 2 * d {
                out.push(vec![a, d, d, d]);
            }
        }
    }
    for a in 3..n {
        for d in a + 1..=n.saturating_sub(a) {
            if n < 2 * a + d {
                out.push(vec![a, a, d, d]);
            }
        }
    }
    for a in 3..n {
        for r in a + 1..n {
            for d in r + 1..n.saturating_sub(r) {
                if n + 2 <= a + r + d {
                    out.push(vec![a, r, d, d]);
                }
            }
        }
    }
    out
}

fn rd(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 2..=(n - 1) / 2 {
        let lo = r.max((n + 1).saturating_sub(2 * r));
        for d in lo..=n - r {
            out.push(vec![r, d]);
        }
    }
    out
}

/// Membership in the general depth-dim region: `1 <= a <= b <= n - 1` and
/// `a <= b + 1 - ceil(b / (n - b))`.
pub fn in_general_region(n: usize, a: usize, b: usize) -> bool {
    if a == 0 || a > b || b >= n {
        return false;
    }
    let q = b.div_ceil(n - b);
    a + q <= b + 1
}

/// First `b` with `ceil(n/2) + 1 <= b <= n - 2` and
/// `b + 1 - ceil(b / (n - b)) < floor(n/2)`, if any.
pub fn half_bound_violation(n: usize) -> Option<usize> {
    (n.div_ceil(2) + 1..=n.saturating_sub(2)).find(|&b| b + 1 < b.div_ceil(n - b) + n / 2)
}
