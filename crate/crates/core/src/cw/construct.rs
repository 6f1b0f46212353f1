use std::fmt;
use std::str::FromStr;

use super::shape::{build_cw, CwShape};
use crate::error::{Error, Result};
use crate::graph::{named, Graph, MAX_VERTICES};

/// Named graph families with their parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Star on `n` vertices.
    Star(usize),
    /// `k` triangles sharing a vertex.
    StarTriangle(usize),
    /// Clique on `v_1..v_m`, `s_i` leaves on `v_i`, `s` non-decreasing.
    CliqueWithLeaves(Vec<usize>),
    /// Complete bipartite middle `K_{m,p}`, one leaf per `v_i`, one triangle
    /// on each `w_j` except `t` on `w_p`.
    SpecialOne { m: usize, p: usize, t: usize },
    /// `p = 2`, `v_1` joined to both w's and `v_2..v_m` to `w_2`; one leaf on
    /// `v_1..v_{m-1}`, `s` on `v_m`; `t` triangles on `w_1`, none on `w_2`.
    SpecialTwo { m: usize, s: usize, t: usize },
    /// Depth-2 family with `m = 2`, middle `K_{2,p}`, no triangles.
    DepthTwoE1 { s1: usize, s2: usize, p: usize },
    /// Depth-2 family with `m = p = 1`, one triangle.
    DepthTwoE2 { s1: usize },
    /// Depth-2 family with `m = p = 1`, one leaf, `t1 >= 2` triangles.
    DepthTwoE3 { t1: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Star(_) => "star",
            Family::StarTriangle(_) => "star-triangle",
            Family::CliqueWithLeaves(_) => "g",
            Family::SpecialOne { .. } => "g1",
            Family::SpecialTwo { .. } => "g2",
            Family::DepthTwoE1 { .. } => "e1",
            Family::DepthTwoE2 { .. } => "e2",
            Family::DepthTwoE3 { .. } => "e3",
        }
    }

    fn params(&self) -> Vec<usize> {
        match self {
            Family::Star(n) => vec![*n],
            Family::StarTriangle(k) => vec![*k],
            Family::CliqueWithLeaves(s) => s.clone(),
            Family::SpecialOne { m, p, t } => vec![*m, *p, *t],
            Family::SpecialTwo { m, s, t } => vec![*m, *s, *t],
            Family::DepthTwoE1 { s1, s2, p } => vec![*s1, *s2, *p],
            Family::DepthTwoE2 { s1 } => vec![*s1],
            Family::DepthTwoE3 { t1 } => vec![*t1],
        }
    }

    fn invalid(&self, msg: impl Into<String>) -> Error {
        Error::InvalidParams {
            family: self.name(),
            msg: msg.into(),
        }
    }

    /// The Cameron-Walker shape of the family, or `None` for the families
    /// that are not Cameron-Walker graphs.
    pub fn shape(&self) -> Result<Option<CwShape>> {
        let shape = match *self {
            Family::Star(_) | Family::StarTriangle(_) | Family::CliqueWithLeaves(_) => {
                return Ok(None)
            }
            Family::SpecialOne { m, p, t } => {
                if m == 0 || p == 0 || t == 0 {
                    return Err(self.invalid("need m, p, t >= 1"));
                }
                let mut ts = vec![1; p];
                ts[p - 1] = t;
                let bip: Vec<(usize, usize)> =
                    (0..m).flat_map(|i| (0..p).map(move |j| (i, j))).collect();
                CwShape::new(vec![1; m], ts, &bip)
            }
            Family::SpecialTwo { m, s, t } => {
                if m < 2 || s == 0 || t == 0 {
                    return Err(self.invalid("need m >= 2, s >= 1, t >= 1"));
                }
                let mut ss = vec![1; m];
                ss[m - 1] = s;
                let mut bip = vec![(0, 0)];
                bip.extend((0..m).map(|i| (i, 1)));
                CwShape::new(ss, vec![t, 0], &bip)
            }
            Family::DepthTwoE1 { s1, s2, p } => {
                if s1 == 0 || s2 == 0 || p == 0 {
                    return Err(self.invalid("need s1, s2, p >= 1"));
                }
                let bip: Vec<(usize, usize)> =
                    (0..2).flat_map(|i| (0..p).map(move |j| (i, j))).collect();
                CwShape::new(vec![s1, s2], vec![0; p], &bip)
            }
            Family::DepthTwoE2 { s1 } => {
                if s1 == 0 {
                    return Err(self.invalid("need s1 >= 1"));
                }
                CwShape::new(vec![s1], vec![1], &[(0, 0)])
            }
            Family::DepthTwoE3 { t1 } => {
                if t1 < 2 {
                    return Err(self.invalid("need t1 >= 2"));
                }
                CwShape::new(vec![1], vec![t1], &[(0, 0)])
            }
        };
        shape.map(Some).map_err(|e| self.invalid(e.to_string()))
    }

    pub fn build(&self) -> Result<Graph> {
        if let Some(shape) = self.shape()? {
            return Ok(build_cw(&shape));
        }
        match self {
            Family::Star(n) => {
                if *n == 0 || *n > MAX_VERTICES {
                    return Err(self.invalid(format!("need 1 <= n <= {MAX_VERTICES}")));
                }
                Ok(named::star(*n))
            }
            Family::StarTriangle(k) => {
                if *k == 0 || 2 * k + 1 > MAX_VERTICES {
                    return Err(self.invalid("need 1 <= k <= 30"));
                }
                Ok(named::star_triangle(*k))
            }
            Family::CliqueWithLeaves(s) => clique_with_leaves(s).map_err(|e| self.invalid(e)),
            _ => unreachable!("Cameron-Walker families return a shape"),
        }
    }
}

/// Vertices `v_1..v_m` first, then the leaves of `v_1`, of `v_2`, and so on.
fn clique_with_leaves(s: &[usize]) -> std::result::Result<Graph, String> {
    let m = s.len();
    if m == 0 {
        return Err("need m >= 1".into());
    }
    if s.contains(&0) {
        return Err("every s_i must be at least 1".into());
    }
    if s.windows(2).any(|w| w[0] > w[1]) {
        return Err("s must be non-decreasing".into());
    }
    let n = m + s.iter().sum::<usize>();
    if n > MAX_VERTICES {
        return Err(format!("{n} vertices exceed {MAX_VERTICES}"));
    }
    let mut edges: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let mut next = m;
    for (i, &k) in s.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(n, edges).map_err(|e| e.to_string())
}

pub fn construct(family: &Family) -> Result<Graph> {
    family.build()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(ToString::to_string).collect();
        write!(f, "{}:{}", self.name(), params.join(","))
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `star:N`, `star-triangle:K`, `g:S1,..,Sm`, `g1:M,P,T`, `g2:M,S,T`,
    /// `e1:S1,S2,P`, `e2:S1`, `e3:T1`.
    fn from_str(text: &str) -> Result<Family> {
        let bad = |msg: String| Error::Parse(format!("family `{text}`: {msg}"));
        let (name, rest) = text
            .split_once(':')
            .ok_or_else(|| bad("expected NAME:PARAMS".into()))?;
        let params: Vec<usize> = rest
            .split(',')
            .map(|x| x.trim().parse().map_err(|e| bad(format!("`{x}`: {e}"))))
            .collect::<Result<_>>()?;
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(format!("expected {k} parameters, got {}", params.len())))
            }
        };
        let family = match name {
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "star-triangle" => {
                arity(1)?;
                Family::StarTriangle(params[0])
            }
            "g" => Family::CliqueWithLeaves(params),
            "g1" => {
                arity(3)?;
                Family::SpecialOne {
                    m: params[0],
                    p: params[1],
                    t: params[2],
                }
            }
            "g2" => {
                arity(3)?;
                Family::SpecialTwo {
                    m: params[0],
                    s: params[1],
                    t: params[2],
                }
            }
            "e1" => {
                arity(3)?;
                Family::DepthTwoE1 {
                    s1: params[0],
                    s2: params[1],
                    p: params[2],
                }
            }
            "e2" => {
                arity(1)?;
                Family::DepthTwoE2 { s1: params[0] }
            }
            "e3" => {
                arity(1)?;
                Family::DepthTwoE3 { t1: params[0] }
            }
            other => return Err(bad(format!("unknown family `{other}`"))),
        };
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cw::cw_invariants;

    #[test]
    fn parses_and_displays() {
        for text in ["star:5", "star-triangle:3", "g:1,2,3", "g1:2,2,2", "g2:3,1,1", "e1:1,1,2", "e2:4", "e3:2"] {
            let family: Family = text.parse().unwrap();
            assert_eq!(family.to_string(), text);
        }
        assert!("g1:1,2".parse::<Family>().is_err());
        assert!("h:1".parse::<Family>().is_err());
    }

    #[test]
    fn clique_with_leaves_example() {
        let g = construct(&Family::CliqueWithLeaves(vec![1, 2, 3])).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 3 + 6);
        assert!(construct(&Family::CliqueWithLeaves(vec![2, 1])).is_err());
        assert!(construct(&Family::CliqueWithLeaves(vec![0, 1])).is_err());
    }

    #[test]
    fn parameter_bounds() {
        assert!(construct(&Family::SpecialTwo { m: 1, s: 1, t: 1 }).is_err());
        assert!(construct(&Family::DepthTwoE3 { t1: 1 }).is_err());
        assert!(construct(&Family::SpecialOne { m: 0, p: 1, t: 1 }).is_err());
        assert!(construct(&Family::Star(0)).is_err());
    }

    #[test]
    fn special_family_formulas() {
        for m in 1..=4 {
            for p in 1..=3 {
                for t in 1..=3 {
                    let shape = Family::SpecialOne { m, p, t }.shape().unwrap().unwrap();
                    let b = cw_invariants(&shape);
                    let d = m + p + t - 1;
                    assert_eq!(b.values(), (2 * m + 3 * p + 2 * t - 2, m + p, d, d, d));
                }
            }
        }
        for m in 2..=4 {
            for s in 1..=3 {
                for t in 1..=3 {
                    let shape = Family::SpecialTwo { m, s, t }.shape().unwrap().unwrap();
                    let b = cw_invariants(&shape);
                    let d = m + s + t;
                    assert_eq!(b.values(), (2 * m + s + 2 * t + 1, m + 1, m + t, d, d));
                }
            }
        }
        let e2 = Family::DepthTwoE2 { s1: 3 }.shape().unwrap().unwrap();
        assert_eq!(cw_invariants(&e2).values(), (7, 2, 2, 4, 4));
    }
}
