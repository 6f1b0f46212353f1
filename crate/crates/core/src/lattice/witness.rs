use std::fmt;
use std::str::FromStr;

use super::closed::{closed_form_set, in_general_region};
use super::set::SetKind;
use crate::cw::{build_cw, cw_invariants, CwShape, Family};
use crate::error::{Error, Result};
use crate::graph::{maximum_independent_set, named, s_suspension, Graph, VertexSet};
use crate::oracle::{oracle_invariants, Field, InvariantBundle};

/// Largest `n` for which general-graph witnesses are produced; they are
/// checked with the homology oracle.
pub const MAX_GRAPH_WITNESS_N: usize = 12;

/// Largest `n` for Cameron-Walker witnesses.
pub const MAX_CW_WITNESS_N: usize = crate::graph::MAX_VERTICES;

/// Which set a point is claimed to belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    /// `(depth, dim)` of some graph on `n` vertices.
    GraphPair,
    /// `(depth, dim)` of a Cameron-Walker graph.
    CwPair,
    /// `(depth, reg, dim, degh)` of a Cameron-Walker graph.
    CwTuple,
}

impl PointKind {
    pub fn name(self) -> &'static str {
        match self {
            PointKind::GraphPair => "graph-pair",
            PointKind::CwPair => "cw-pair",
            PointKind::CwTuple => "cw-tuple",
        }
    }

    pub fn arity(self) -> usize {
        if self == PointKind::CwTuple {
            4
        } else {
            2
        }
    }
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PointKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<PointKind> {
        [PointKind::GraphPair, PointKind::CwPair, PointKind::CwTuple]
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!("unknown point kind `{s}` (graph-pair, cw-pair, cw-tuple)"))
            })
    }
}

/// A verified graph realising a point.
#[derive(Clone, Debug)]
pub struct Witness {
    pub graph: Graph,
    /// How the graph was built, e.g. `g:1,1,2 + 2 suspensions` or `g1:3,1,1`.
    pub construction: String,
    pub shape: Option<CwShape>,
    pub invariants: InvariantBundle,
}

/// Builds a graph on `n` vertices realising `point` and checks its
/// invariants before returning it.
pub fn witness_for_point(kind: PointKind, n: usize, point: &[u32]) -> Result<Witness> {
    if point.len() != kind.arity() {
        return Err(Error::Arity {
            expected: kind.arity(),
            got: point.len(),
        });
    }
    let p: Vec<usize> = point.iter().map(|&x| x as usize).collect();
    match kind {
        PointKind::GraphPair => graph_pair(n, p[0], p[1]),
        PointKind::CwPair => {
            require_cw(n, SetKind::CwDd, point)?;
            let (construction, shape) = cw_pair_shape(n, p[0], p[1])?;
            finish_cw(n, point, construction, shape, |b| vec![b.depth, b.dim])
        }
        PointKind::CwTuple => {
            require_cw(n, SetKind::CwTuple4, point)?;
            let (construction, shape) = cw_tuple_shape(n, p[0], p[1], p[2])?;
            finish_cw(n, point, construction, shape, |b| vec![b.depth, b.reg, b.dim, b.degh])
        }
    }
}

fn require_cw(n: usize, kind: SetKind, point: &[u32]) -> Result<()> {
    if !(5..=MAX_CW_WITNESS_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "witness n",
            msg: format!("Cameron-Walker witnesses need 5 <= n <= {MAX_CW_WITNESS_N}, got {n}"),
        });
    }
    if !closed_form_set(kind, n)?.contains(point) {
        return Err(Error::PointNotInSet {
            point: point.to_vec(),
            set: format!("{kind}({n})"),
        });
    }
    Ok(())
}

fn contradiction(what: &str, n: usize, point: &[u32], got: &InvariantBundle) -> Error {
    Error::Verification(format!(
        "{what} witness for {point:?} at n = {n} has n = {} {got}",
        got.n
    ))
}

fn finish_cw(
    n: usize,
    point: &[u32],
    construction: String,
    shape: CwShape,
    coords: impl Fn(&InvariantBundle) -> Vec<usize>,
) -> Result<Witness> {
    let invariants = cw_invariants(&shape);
    let graph = build_cw(&shape);
    let want: Vec<usize> = point.iter().map(|&x| x as usize).collect();
    if graph.n() != n || invariants.n != n || coords(&invariants) != want {
        return Err(contradiction(&construction, n, point, &invariants));
    }
    Ok(Witness {
        graph,
        construction,
        shape: Some(shape),
        invariants,
    })
}

fn graph_pair(n: usize, a: usize, b: usize) -> Result<Witness> {
    if !(2..=MAX_GRAPH_WITNESS_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "witness n",
            msg: format!("graph witnesses need 2 <= n <= {MAX_GRAPH_WITNESS_N}, got {n}"),
        });
    }
    let in_c_minus = n >= 3
        && closed_form_set(SetKind::CMinus, n)?.contains(&[a as u32, b as u32]);
    if !in_c_minus && !in_general_region(n, a, b) {
        return Err(Error::PointNotInSet {
            point: vec![a as u32, b as u32],
            set: format!("the depth-dim region for n = {n}"),
        });
    }
    let (mut graph, mut construction) = if a == 1 && b == n - 1 {
        (named::star(n), format!("star:{n}"))
    } else if a + b <= n {
        let mut s = vec![1; a];
        s[a - 1] = b - a + 1;
        let family = Family::CliqueWithLeaves(s);
        (family.build()?, family.to_string())
    } else {
        // a - 1 = q (m - 1) + t with m = n - b.
        let m = n - b;
        let (q, t) = ((a - 1) / (m - 1), (a - 1) % (m - 1));
        let mut s = vec![q; m - 1 - t];
        s.extend(std::iter::repeat_n(q + 1, t));
        s.push(b - a + 1);
        let family = Family::CliqueWithLeaves(s);
        (family.build()?, family.to_string())
    };
    let extra = n - graph.n();
    for _ in 0..extra {
        let s: VertexSet = maximum_independent_set(&graph).iter().take(a - 1).collect();
        graph = s_suspension(&graph, s)?;
    }
    if extra > 0 {
        construction.push_str(&format!(" + {extra} suspension{}", if extra == 1 { "" } else { "s" }));
    }
    let invariants = oracle_invariants(&graph, Field::Gf2)?;
    if graph.n() != n || invariants.depth != a || invariants.dim != b {
        return Err(contradiction(&construction, n, &[a as u32, b as u32], &invariants));
    }
    Ok(Witness {
        graph,
        construction,
        shape: None,
        invariants,
    })
}

fn family_shape(family: Family) -> Result<(String, CwShape)> {
    let shape = family.shape()?.expect("Cameron-Walker family");
    Ok((family.to_string(), shape))
}

fn literal_shape(s: Vec<usize>, t: Vec<usize>, bip: &[(usize, usize)]) -> Result<(String, CwShape)> {
    let shape = CwShape::new(s, t, bip)?;
    Ok((shape.to_string(), shape))
}

/// Depth-2 graphs, shared by pairs and tuples. `b` is the dimension.
fn depth_two(n: usize, b: usize) -> Result<(String, CwShape)> {
    if b == n - 2 {
        family_shape(Family::DepthTwoE1 { s1: 1, s2: 1, p: b - 2 })
    } else if b == n - 3 {
        family_shape(Family::DepthTwoE2 { s1: b - 1 })
    } else {
        family_shape(Family::DepthTwoE3 { t1: b - 1 })
    }
}

fn cw_pair_shape(n: usize, a: usize, b: usize) -> Result<(String, CwShape)> {
    if a == 2 {
        depth_two(n, b)
    } else if a == b {
        family_shape(Family::SpecialOne {
            m: 3 * b - n,
            p: n - 2 * b,
            t: 1,
        })
    } else if 2 * b < n {
        family_shape(Family::SpecialOne {
            m: a + 2 * b - n,
            p: n - 2 * b,
            t: b - a + 1,
        })
    } else if b < n - a {
        family_shape(Family::SpecialTwo {
            m: a - 1,
            s: 2 * b + 1 - n,
            t: n - a - b,
        })
    } else {
        let mut s = vec![1; a];
        s[a - 1] = b - a;
        let bip: Vec<(usize, usize)> = (0..a).map(|i| (i, 0)).collect();
        literal_shape(s, vec![0], &bip)
    }
}

fn cw_tuple_shape(n: usize, a: usize, r: usize, d: usize) -> Result<(String, CwShape)> {
    if a == 2 {
        return depth_two(n, d);
    }
    if r == d {
        return family_shape(Family::SpecialOne {
            m: a + 2 * d - n,
            p: n - 2 * d,
            t: d - a + 1,
        });
    }
    if a == r {
        let (m, p) = if d < n - a { (2 * a + d - n, n - a - d) } else { (a, d - a) };
        let bip: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..p).map(move |j| (i, j))).collect();
        let mut s = vec![1; m];
        let t = if d < n - a {
            s[m - 1] = d - a + 1;
            vec![1; p]
        } else {
            vec![0; p]
        };
        return literal_shape(s, t, &bip);
    }
    let p = n + 1 - d - r;
    let mut t = vec![1; p];
    t[p - 1] = 0;
    if n >= a + 2 * r {
        let mut bip: Vec<(usize, usize)> = (0..p).map(|j| (0, j)).collect();
        bip.push((1, p - 1));
        t[0] = 2 * r + d - n - 1;
        literal_shape(vec![a + r + d - n - 1, n + 2 - a - 2 * r], t, &bip)
    } else {
        let m = a + 2 * r + 1 - n;
        let mut bip: Vec<(usize, usize)> = (0..p).map(|j| (0, j)).collect();
        bip.extend((1..m).map(|i| (i, p - 1)));
        let mut s = vec![1; m];
        s[0] = d - r;
        t[0] = d - a;
        literal_shape(s, t, &bip)
    }
}
