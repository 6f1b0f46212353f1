//! Verification suites: each compares computed invariants or enumerated sets
//! against the corresponding closed form for a range of `n` and reports one
//! check per statement and `n`.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cw::{
    build_cw, cw_invariants, depth_two_type, depth_via_fv, enumerate_cw_shapes, DepthTwoType,
};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_connected_graphs, independence_domination, independence_number, s_suspension, Bits,
    Graph, VertexSet,
};
use crate::lattice::{
    closed_form_set, diff_sets, enumerate_cw_sets, enumerate_graph_pair_set,
    format_diff, half_bound_violation, in_general_region, is_convex, GraphSource,
    LatticePointSet, Provenance, SetKind,
};
use crate::oracle::{oracle_invariants, Field};

/// Largest `n` at which the convexity and inequality suites enumerate all
/// connected graphs.
pub const GRAPH_SUITE_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub enum Suite {
    Cwdd,
    Main3,
    Sandwich,
    FormulasVsOracle,
    Depth2Classification,
    Convexity,
    Inequalities,
    Suspension,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Cwdd,
        Suite::Main3,
        Suite::Sandwich,
        Suite::FormulasVsOracle,
        Suite::Depth2Classification,
        Suite::Convexity,
        Suite::Inequalities,
        Suite::Suspension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cwdd => "cwdd",
            Suite::Main3 => "main3",
            Suite::Sandwich => "sandwich",
            Suite::FormulasVsOracle => "formulas-vs-oracle",
            Suite::Depth2Classification => "depth2-classification",
            Suite::Convexity => "convexity",
            Suite::Inequalities => "inequalities",
            Suite::Suspension => "suspension",
        }
    }

    /// The values of `n` the suite accepts.
    pub fn n_range(self) -> RangeInclusive<usize> {
        match self {
            Suite::Cwdd | Suite::Main3 | Suite::FormulasVsOracle | Suite::Depth2Classification => {
                5..=crate::lattice::MAX_CW_SET_N
            }
            Suite::Sandwich => 3..=crate::oracle::MAX_ORACLE_VERTICES,
            Suite::Convexity => 5..=200,
            Suite::Inequalities => 3..=200,
            Suite::Suspension => 2..=MAX_SUSPENSION_N,
        }
    }
}

impl From<Suite> for String {
    fn from(s: Suite) -> String {
        s.name().to_string()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::Parse(format!("unknown suite `{s}` (expected one of {})", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub ok: bool,
    /// Empty on success; the offending data otherwise.
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        let detail = if ok { String::new() } else { detail.into() };
        Check {
            label: label.into(),
            ok,
            detail,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.label)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub field: Field,
    pub source: GraphSource,
    pub cache: Option<PathBuf>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: Field::Gf2,
            source: GraphSource::Builtin,
            cache: None,
        }
    }
}

/// Every independent set of every connected graph goes through the oracle;
/// n = 8 already takes about a minute on one core.
pub const MAX_SUSPENSION_N: usize = 8;

pub fn run_suite(suite: Suite, ns: RangeInclusive<usize>, opts: &VerifyOptions) -> Result<SuiteReport> {
    let allowed = suite.n_range();
    if ns.is_empty() || !allowed.contains(ns.start()) || !allowed.contains(ns.end()) {
        return Err(Error::OutOfRange {
            what: "suite n",
            msg: format!(
                "{suite} runs for {}..{}, got {}..{}",
                allowed.start(),
                allowed.end(),
                ns.start(),
                ns.end()
            ),
        });
    }
    let mut checks = Vec::new();
    for n in ns {
        match suite {
            Suite::Cwdd => {
                let e = enumerate_cw_sets(n)?;
                checks.push(set_equality(n, &e.pairs, &closed_form_set(SetKind::CwDd, n)?));
            }
            Suite::Main3 => {
                let e = enumerate_cw_sets(n)?;
                checks.push(set_equality(n, &e.tuples, &closed_form_set(SetKind::CwTuple4, n)?));
            }
            Suite::Sandwich => sandwich(n, opts, &mut checks)?,
            Suite::FormulasVsOracle => formulas_vs_oracle(n, opts.field, &mut checks)?,
            Suite::Depth2Classification => depth_two(n, &mut checks)?,
            Suite::Convexity => convexity(n, opts, &mut checks)?,
            Suite::Inequalities => inequalities(n, opts, &mut checks)?,
            Suite::Suspension => suspension(n, opts.field, &mut checks)?,
        }
    }
    Ok(SuiteReport { suite, checks })
}

fn set_equality(n: usize, got: &LatticePointSet, want: &LatticePointSet) -> Check {
    let rows = diff_sets(want, got);
    Check::new(
        format!("n={n} {} = {}", got.provenance.kind_name(), want.provenance.kind_name()),
        rows.is_empty(),
        format!("differences (- closed form only, + enumerated only):\n{}", format_diff(&rows)),
    )
}

fn graph_pairs(n: usize, opts: &VerifyOptions) -> Result<crate::lattice::PairEnumeration> {
    enumerate_graph_pair_set(n, &opts.source, opts.field, opts.cache.as_deref())
}

fn region(n: usize) -> LatticePointSet {
    let mut set = LatticePointSet::new(
        n,
        2,
        Provenance::Enumerated {
            kind: "depth-dim-region".into(),
            source: "ceiling bound".into(),
            field: None,
        },
    );
    for b in 1..n {
        for a in 1..=b {
            if in_general_region(n, a, b) {
                set.insert(vec![a as u32, b as u32]);
            }
        }
    }
    set
}

fn missing(sub: &LatticePointSet, sup: &LatticePointSet) -> String {
    let rows: Vec<String> = sub
        .points
        .difference(&sup.points)
        .map(|p| format!("{p:?}"))
        .collect();
    format!("missing {}", rows.join(" "))
}

fn sandwich(n: usize, opts: &VerifyOptions, checks: &mut Vec<Check>) -> Result<()> {
    let e = graph_pairs(n, opts)?;
    let lower = closed_form_set(SetKind::CMinus, n)?;
    let upper = closed_form_set(SetKind::CPlus, n)?;
    checks.push(Check::new(
        format!("n={n} c-minus within graph-pairs"),
        lower.is_subset(&e.set),
        missing(&lower, &e.set),
    ));
    checks.push(Check::new(
        format!("n={n} graph-pairs within c-plus"),
        e.set.is_subset(&upper),
        missing(&e.set, &upper),
    ));
    let reg = region(n);
    checks.push(Check::new(
        format!("n={n} ceiling-bound region within graph-pairs"),
        reg.is_subset(&e.set),
        missing(&reg, &e.set),
    ));
    if n > 3 {
        let smaller = graph_pairs(n - 1, opts)?;
        checks.push(Check::new(
            format!("n={n} graph-pairs({}) within graph-pairs({n})", n - 1),
            smaller.set.is_subset(&e.set),
            missing(&smaller.set, &e.set),
        ));
    }
    Ok(())
}

fn formulas_vs_oracle(n: usize, field: Field, checks: &mut Vec<Check>) -> Result<()> {
    let shapes = enumerate_cw_shapes(n)?;
    let rows: Vec<Result<(Option<String>, Option<String>)>> = shapes
        .par_iter()
        .map(|shape| {
            let g = build_cw(shape);
            let formula = cw_invariants(shape);
            let oracle = oracle_invariants(&g, field)?;
            let inv = (!formula.same_values(&oracle))
                .then(|| format!("{shape}: formulas {formula}, oracle {oracle}"));
            let fv = depth_via_fv(shape).depth;
            let i = independence_domination(&g);
            let dom = (fv != i).then(|| format!("{shape}: f(V) sweep {fv}, i(G) {i}"));
            Ok((inv, dom))
        })
        .collect();
    let mut inv_bad = Vec::new();
    let mut dom_bad = Vec::new();
    for row in rows {
        let (a, b) = row?;
        inv_bad.extend(a);
        dom_bad.extend(b);
    }
    checks.push(Check::new(
        format!("n={n} formulas = oracle over {} shapes", shapes.len()),
        inv_bad.is_empty(),
        inv_bad.join("; "),
    ));
    checks.push(Check::new(
        format!("n={n} depth sweep = independence domination over {} shapes", shapes.len()),
        dom_bad.is_empty(),
        dom_bad.join("; "),
    ));
    Ok(())
}

fn depth_two(n: usize, checks: &mut Vec<Check>) -> Result<()> {
    let shapes = enumerate_cw_shapes(n)?;
    let mut bad = Vec::new();
    let mut depth_two_dims = std::collections::BTreeSet::new();
    for shape in &shapes {
        let b = cw_invariants(shape);
        if b.depth == 1 {
            bad.push(format!("{shape}: depth 1"));
        }
        if b.depth != 2 {
            continue;
        }
        depth_two_dims.insert(b.dim);
        let (s, t) = (shape.s(), shape.t());
        let expect = match depth_two_type(shape) {
            None => {
                bad.push(format!("{shape}: depth 2 but no template"));
                continue;
            }
            Some(DepthTwoType::E1) => {
                let d = s[0] + s[1] + shape.p();
                (d + 2, 2, d)
            }
            Some(DepthTwoType::E2) => (s[0] + 4, 2, s[0] + 1),
            Some(DepthTwoType::E3) => (2 * t[0] + 3, t[0] + 1, t[0] + 1),
        };
        if (b.n, b.reg, b.dim) != expect || b.degh != b.dim {
            bad.push(format!("{shape}: {b}, template predicts n={} reg={} dim={}", expect.0, expect.1, expect.2));
        }
    }
    checks.push(Check::new(
        format!("n={n} depth-2 shapes match a template"),
        bad.is_empty(),
        bad.join("; "),
    ));
    let mut want = vec![n - 3, n - 2];
    if n % 2 == 1 {
        want.insert(0, (n - 1) / 2);
    }
    let want: std::collections::BTreeSet<usize> = want.into_iter().collect();
    checks.push(Check::new(
        format!("n={n} depth-2 dimensions"),
        depth_two_dims == want,
        format!("found {depth_two_dims:?}, expected {want:?}"),
    ));
    Ok(())
}

fn convexity(n: usize, opts: &VerifyOptions, checks: &mut Vec<Check>) -> Result<()> {
    let set = closed_form_set(SetKind::CwDd, n)?;
    let gap = is_convex(&set)?;
    let expect = n.is_multiple_of(2) || n == 5 || n == 7;
    checks.push(Check::new(
        format!("n={n} cw-dd convex = {expect}"),
        gap.is_none() == expect,
        match gap {
            Some(g) => format!("gap between {:?} and {:?}", g.first, g.second),
            None => "no gap".into(),
        },
    ));
    if n <= GRAPH_SUITE_MAX_N {
        let e = graph_pairs(n, opts)?;
        let gap = is_convex(&e.set)?;
        checks.push(Check::new(
            format!("n={n} graph-pairs convex"),
            gap.is_none(),
            format!("{gap:?}"),
        ));
    }
    Ok(())
}

fn inequalities(n: usize, opts: &VerifyOptions, checks: &mut Vec<Check>) -> Result<()> {
    if n <= GRAPH_SUITE_MAX_N {
        let e = graph_pairs(n, opts)?;
        let rows: Vec<String> = e.violations.iter().map(|(c, v)| format!("{c}: {v}")).collect();
        checks.push(Check::new(
            format!("n={n} general inequalities over {} graphs", e.graphs),
            rows.is_empty(),
            rows.join("; "),
        ));
    }
    if (5..=crate::lattice::MAX_CW_SET_N).contains(&n) {
        let e = enumerate_cw_sets(n)?;
        let rows: Vec<String> = e.violations.iter().map(|(s, v)| format!("{s}: {v}")).collect();
        checks.push(Check::new(
            format!("n={n} Cameron-Walker inequalities over {} shapes", e.shapes),
            rows.is_empty(),
            rows.join("; "),
        ));
    }
    if n >= 6 {
        let bad = half_bound_violation(n);
        checks.push(Check::new(
            format!("n={n} b + 1 - ceil(b/(n-b)) >= floor(n/2) above n/2"),
            bad.is_none(),
            format!("fails at b = {bad:?}"),
        ));
    }
    Ok(())
}

/// Independent sets of `g`, as masks.
fn independent_sets(g: &Graph) -> Vec<u64> {
    let adj = g.adjacency();
    (0u64..1 << g.n())
        .filter(|&m| Bits(m).all(|v| adj[v] & m == 0))
        .collect()
}

fn suspension(n: usize, field: Field, checks: &mut Vec<Check>) -> Result<()> {
    let graphs = enumerate_connected_graphs(n)?;
    let rows: Vec<Result<Vec<String>>> = graphs
        .par_iter()
        .map(|g| {
            let mut bad = Vec::new();
            let base = oracle_invariants(g, field)?;
            let alpha = independence_number(g);
            for s in independent_sets(g) {
                let size = s.count_ones() as usize;
                let gs = s_suspension(g, VertexSet::from_mask(s))?;
                if size < alpha && independence_number(&gs) != alpha {
                    bad.push(format!("{g:?} S={s:b}: dim changes"));
                }
                if size + 1 == base.depth || s == 0 {
                    let b = oracle_invariants(&gs, field)?;
                    if size + 1 == base.depth && b.depth != base.depth {
                        bad.push(format!("{g:?} S={s:b}: depth {} becomes {}", base.depth, b.depth));
                    }
                    if s == 0 && b.depth != 1 {
                        bad.push(format!("{g:?} empty S: depth {}", b.depth));
                    }
                }
            }
            Ok(bad)
        })
        .collect();
    let mut bad = Vec::new();
    for r in rows {
        bad.extend(r?);
    }
    checks.push(Check::new(
        format!("n={n} suspensions over {} graphs and all independent sets", graphs.len()),
        bad.is_empty(),
        bad.join("; "),
    ));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let opts = VerifyOptions::default();
        for (suite, ns) in [
            (Suite::Cwdd, 5..=9),
            (Suite::Main3, 5..=9),
            (Suite::Sandwich, 3..=5),
            (Suite::FormulasVsOracle, 5..=7),
            (Suite::Depth2Classification, 5..=9),
            (Suite::Convexity, 5..=12),
            (Suite::Inequalities, 3..=7),
            (Suite::Suspension, 2..=4),
        ] {
            let r = run_suite(suite, ns, &opts).unwrap();
            assert!(r.passed(), "{suite}: {:?}", r.checks.iter().filter(|c| !c.ok).collect::<Vec<_>>());
        }
    }

    #[test]
    fn range_and_names() {
        assert!(run_suite(Suite::Cwdd, 4..=6, &VerifyOptions::default()).is_err());
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }
}
