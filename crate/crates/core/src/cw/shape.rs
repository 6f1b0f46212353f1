use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form_colored, Bits, Graph, MAX_VERTICES};

/// Structure data of a Cameron-Walker graph: `m` leaf-bearing vertices
/// `v_i` with `s_i` leaves each, `p` vertices `w_j` carrying `t_j` pendant
/// triangles each, and a connected bipartite graph between them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CwShape {
    s: Vec<usize>,
    t: Vec<usize>,
    /// Per `w_j`, the mask of its `v` neighbours.
    w_neighbors: Vec<u64>,
}

/// Vertex numbering of `build_cw`: v's, w's, leaves grouped by `i`, then
/// triangle pairs grouped by `j`.
#[derive(Clone, Debug)]
pub struct CwLayout {
    m: usize,
    p: usize,
    leaf_start: Vec<usize>,
    triangle_start: Vec<usize>,
    n: usize,
}

impl CwLayout {
    pub fn v(&self, i: usize) -> usize {
        i
    }

    pub fn w(&self, j: usize) -> usize {
        self.m + j
    }

    pub fn leaf(&self, i: usize, k: usize) -> usize {
        self.leaf_start[i] + k
    }

    /// `which` is 0 or 1 for `y_{l,1}` and `y_{l,2}`.
    pub fn triangle_vertex(&self, j: usize, l: usize, which: usize) -> usize {
        self.triangle_start[j] + 2 * l + which
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }
}

impl CwShape {
    /// `bip` lists 0-based `(v, w)` pairs.
    pub fn new(s: Vec<usize>, t: Vec<usize>, bip: &[(usize, usize)]) -> Result<CwShape> {
        let (m, p) = (s.len(), t.len());
        if m == 0 || m > 62 {
            return Err(Error::InvalidShape(format!("m = {m}; need 1 <= m <= 62")));
        }
        if p == 0 {
            return Err(Error::InvalidShape("p = 0; need p >= 1".into()));
        }
        let mut w_neighbors = vec![0u64; p];
        for &(v, w) in bip {
            if v >= m || w >= p {
                return Err(Error::InvalidShape(format!(
                    "bipartite edge {}-{} outside m = {m}, p = {p}",
                    v + 1,
                    w + 1
                )));
            }
            w_neighbors[w] |= 1 << v;
        }
        let shape = CwShape { s, t, w_neighbors };
        shape.validate()?;
        Ok(shape)
    }

    fn validate(&self) -> Result<()> {
        let m = self.m();
        if let Some(i) = self.s.iter().position(|&x| x == 0) {
            return Err(Error::InvalidShape(format!(
                "s_{} = 0; every v_i needs at least one leaf",
                i + 1
            )));
        }
        if let Some(j) = self.w_neighbors.iter().position(|&x| x == 0) {
            return Err(Error::InvalidShape(format!("w_{} has no bipartite neighbour", j + 1)));
        }
        let covered = self.w_neighbors.iter().fold(0u64, |a, &b| a | b);
        if covered != crate::graph::low_bits(m) {
            let i = (!covered).trailing_zeros() as usize;
            return Err(Error::InvalidShape(format!("v_{} has no bipartite neighbour", i + 1)));
        }
        if !self.bip_connected() {
            return Err(Error::InvalidShape("bipartite part is disconnected".into()));
        }
        let n = self.vertex_count();
        if n < 5 {
            return Err(Error::InvalidShape(format!("{n} vertices; need at least 5")));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if m == 1 && self.t.iter().all(|&x| x == 0) {
            return Err(Error::InvalidShape(
                "m = 1 with no pendant triangles builds a star".into(),
            ));
        }
        Ok(())
    }

    fn bip_connected(&self) -> bool {
        let mut vs = self.w_neighbors[0];
        let mut ws = 1u64;
        loop {
            let mut grown = ws;
            for (j, &nb) in self.w_neighbors.iter().enumerate() {
                if nb & vs != 0 {
                    grown |= 1 << j;
                }
            }
            let grown_vs = Bits(grown).fold(vs, |a, j| a | self.w_neighbors[j]);
            if grown == ws && grown_vs == vs {
                break;
            }
            ws = grown;
            vs = grown_vs;
        }
        ws.count_ones() as usize == self.p() && vs.count_ones() as usize == self.m()
    }

    pub fn m(&self) -> usize {
        self.s.len()
    }

    pub fn p(&self) -> usize {
        self.t.len()
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    /// Mask over `v` indices adjacent to `w_j` in the bipartite part.
    pub fn w_neighbors(&self, j: usize) -> u64 {
        self.w_neighbors[j]
    }

    /// 0-based `(v, w)` pairs, sorted.
    pub fn bip_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .w_neighbors
            .iter()
            .enumerate()
            .flat_map(|(j, &nb)| Bits(nb).map(move |i| (i, j)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn is_complete_bipartite(&self) -> bool {
        let all = crate::graph::low_bits(self.m());
        self.w_neighbors.iter().all(|&nb| nb == all)
    }

    pub fn vertex_count(&self) -> usize {
        self.m() + self.p() + self.s.iter().sum::<usize>() + 2 * self.t.iter().sum::<usize>()
    }

    pub fn layout(&self) -> CwLayout {
        let (m, p) = (self.m(), self.p());
        let mut next = m + p;
        let leaf_start = self
            .s
            .iter()
            .map(|&k| {
                let start = next;
                next += k;
                start
            })
            .collect();
        let triangle_start = self
            .t
            .iter()
            .map(|&k| {
                let start = next;
                next += 2 * k;
                start
            })
            .collect();
        CwLayout {
            m,
            p,
            leaf_start,
            triangle_start,
            n: next,
        }
    }

    /// A `w_j` with no triangles and a single bipartite neighbour is just a
    /// leaf of that neighbour; the normal form absorbs every such `w_j`.
    pub fn normalized(&self) -> CwShape {
        let mut s = self.s.clone();
        let mut t = Vec::with_capacity(self.p());
        let mut w_neighbors = Vec::with_capacity(self.p());
        for (j, &nb) in self.w_neighbors.iter().enumerate() {
            if self.t[j] == 0 && nb.count_ones() == 1 {
                s[nb.trailing_zeros() as usize] += 1;
            } else {
                t.push(self.t[j]);
                w_neighbors.push(nb);
            }
        }
        CwShape { s, t, w_neighbors }
    }

    pub fn is_normalized(&self) -> bool {
        self.w_neighbors
            .iter()
            .zip(&self.t)
            .all(|(&nb, &t)| t > 0 || nb.count_ones() >= 2)
    }

    /// Equal for two shapes iff their normal forms agree up to relabelling
    /// the bipartite part in a way that preserves every `s_i` and `t_j`.
    pub fn canonical_key(&self) -> String {
        let shape = self.normalized();
        let (m, p) = (shape.m(), shape.p());
        let bip = Graph::from_edges(
            m + p,
            shape.bip_edges().into_iter().map(|(i, j)| (i, m + j)),
        )
        .expect("bipartite part fits");
        let colors: Vec<u32> = shape
            .s
            .iter()
            .map(|&x| 2 * x as u32)
            .chain(shape.t.iter().map(|&x| 2 * x as u32 + 1))
            .collect();
        canonical_form_colored(&bip, &colors).into_code()
    }
}

pub fn build_cw(shape: &CwShape) -> Graph {
    let layout = shape.layout();
    let mut edges = Vec::new();
    for (j, &nb) in shape.w_neighbors.iter().enumerate() {
        for i in Bits(nb) {
            edges.push((layout.v(i), layout.w(j)));
        }
    }
    for (i, &k) in shape.s.iter().enumerate() {
        for leaf in 0..k {
            edges.push((layout.v(i), layout.leaf(i, leaf)));
        }
    }
    for (j, &k) in shape.t.iter().enumerate() {
        for l in 0..k {
            let (y1, y2) = (layout.triangle_vertex(j, l, 0), layout.triangle_vertex(j, l, 1));
            edges.extend([(layout.w(j), y1), (layout.w(j), y2), (y1, y2)]);
        }
    }
    Graph::from_edges(layout.n(), edges).expect("validated shapes fit")
}

impl fmt::Display for CwShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let bip = self
            .bip_edges()
            .iter()
            .map(|(i, j)| format!("{}-{}", i + 1, j + 1))
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "cw m={} p={} s={} t={} bip={}",
            self.m(),
            self.p(),
            join(&self.s),
            join(&self.t),
            bip
        )
    }
}

impl FromStr for CwShape {
    type Err = Error;

    fn from_str(text: &str) -> Result<CwShape> {
        let bad = |msg: String| Error::Parse(format!("shape literal `{}`: {msg}", text.trim()));
        let mut tokens = text.split_whitespace();
        if tokens.next() != Some("cw") {
            return Err(bad("must start with `cw`".into()));
        }
        let (mut m, mut p, mut s, mut t, mut bip) = (None, None, None, None, None);
        for token in tokens {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{token}`")))?;
            let list = |v: &str| -> Result<Vec<usize>> {
                v.split(',')
                    .map(|x| x.parse().map_err(|e| bad(format!("`{x}` in {key}: {e}"))))
                    .collect()
            };
            match key {
                "m" => m = Some(value.parse::<usize>().map_err(|e| bad(format!("m: {e}")))?),
                "p" => p = Some(value.parse::<usize>().map_err(|e| bad(format!("p: {e}")))?),
                "s" => s = Some(list(value)?),
                "t" => t = Some(list(value)?),
                "bip" => {
                    let mut edges = Vec::new();
                    for pair in value.split(',') {
                        let (a, b) = pair
                            .split_once('-')
                            .ok_or_else(|| bad(format!("bipartite edge `{pair}` needs v-w")))?;
                        let parse = |x: &str| -> Result<usize> {
                            match x.parse::<usize>() {
                                Ok(k) if k >= 1 => Ok(k - 1),
                                _ => Err(bad(format!("`{x}` is not a 1-based index"))),
                            }
                        };
                        edges.push((parse(a)?, parse(b)?));
                    }
                    bip = Some(edges);
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        let s = s.ok_or_else(|| bad("missing s=".into()))?;
        let t = t.ok_or_else(|| bad("missing t=".into()))?;
        let bip = bip.ok_or_else(|| bad("missing bip=".into()))?;
        if m.is_some_and(|m| m != s.len()) {
            return Err(bad(format!("m = {} but s has {} entries", m.unwrap(), s.len())));
        }
        if p.is_some_and(|p| p != t.len()) {
            return Err(bad(format!("p = {} but t has {} entries", p.unwrap(), t.len())));
        }
        CwShape::new(s, t, &bip)
    }
}
