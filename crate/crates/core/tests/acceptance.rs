//! Acceptance run: one PASS/FAIL line per criterion. Expected values are
//! computed here from the defining inequalities or written out literally,
//! not taken from the library's closed forms.
//!
//! The n = 9 graph enumeration is long; it runs only when `CWINV_ACCEPT_N9`
//! is set (to a cache directory, or to `1` for no cache).

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use cwinv_core::cw::{
    build_cw, cw_invariants, depth_via_fv, enumerate_cw_shapes, witness_set, CwShape, Family,
};
use cwinv_core::graph::{independence_domination, named, Graph};
use cwinv_core::lattice::{
    audit_inequalities, closed_form_set, enumerate_cw_sets, enumerate_graph_pair_set,
    is_convex, witness_for_point, GraphSource, PairEnumeration, PointKind, SetKind,
};
use cwinv_core::oracle::{oracle_invariants, Field, InvariantBundle};

type Pairs = BTreeSet<(u32, u32)>;
type Tuples = BTreeSet<[u32; 4]>;
type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn c_minus(n: u32) -> Pairs {
    let mut s = Pairs::new();
    s.insert((1, n - 1));
    for b in 1..=n - 2 {
        for a in 1..=b.min(n / 2) {
            s.insert((a, b));
        }
    }
    s
}

fn c_plus(n: u32) -> Pairs {
    (1..n).flat_map(|b| (1..=b).map(move |a| (a, b))).collect()
}

fn depth_two_dims(n: u32) -> Vec<u32> {
    let mut v = vec![n - 2, n - 3];
    if n % 2 == 1 {
        v.push((n - 1) / 2);
    }
    v
}

/// Pairs satisfying the Cameron-Walker depth-dim description, tested point
/// by point over the whole grid.
fn cw_dd(n: u32) -> Pairs {
    let mut s = Pairs::new();
    for a in 1..=n {
        for b in a..=n {
            let two = a == 2 && depth_two_dims(n).contains(&b);
            let diagonal = a == b && n < 3 * b && 2 * b < n;
            let upper = a >= 3 && 2 * a < n && a < b && n < a + 2 * b && b <= n - a;
            if two || diagonal || upper {
                s.insert((a, b));
            }
        }
    }
    s
}

fn cw_tuple4(n: u32) -> Tuples {
    let mut s = Tuples::new();
    for a in 1..=n {
        for r in a..=n {
            for d in r..=n {
                let two = a == 2
                    && ((r == 2 && (d == n - 2 || d == n - 3))
                        || (n % 2 == 1 && r == (n - 1) / 2 && d == r));
                let adddd = a >= 3 && r == d && 2 * d < n && n < a + 2 * d;
                let aadd = a >= 3 && r == a && a < d && d <= n - a && n < 2 * a + d;
                let ardd = a >= 3 && a < r && r < d && d + r < n && n + 2 <= a + r + d;
                if two || adddd || aadd || ardd {
                    s.insert([a, r, d, d]);
                }
            }
        }
    }
    s
}

fn points2(set: &cwinv_core::lattice::LatticePointSet) -> Pairs {
    set.points.iter().map(|p| (p[0], p[1])).collect()
}

fn points4(set: &cwinv_core::lattice::LatticePointSet) -> Tuples {
    set.points.iter().map(|p| [p[0], p[1], p[2], p[3]]).collect()
}

fn lit2(v: &[(u32, u32)]) -> Pairs {
    v.iter().copied().collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Context {
    graph_pairs: BTreeMap<u32, PairEnumeration>,
    cw_graphs: Vec<(CwShape, Graph, InvariantBundle)>,
}

fn criterion_1(ctx: &Context) -> Outcome {
    let small: [(u32, Pairs); 3] = [
        (3, lit2(&[(1, 1), (1, 2)])),
        (4, lit2(&[(1, 1), (1, 2), (1, 3), (2, 2)])),
        (5, lit2(&[(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)])),
    ];
    for (n, want) in &small {
        let got = points2(&ctx.graph_pairs[n].set);
        ensure(&got == want, || format!("n={n}: got {got:?}, expected {want:?}"))?;
    }
    for n in 3..=8 {
        let got = points2(&ctx.graph_pairs[&n].set);
        ensure(got == c_minus(n), || {
            format!("n={n}: enumerated {got:?} differs from C-({n}) {:?}", c_minus(n))
        })?;
    }
    let counts: Vec<String> = (3..=8).map(|n| ctx.graph_pairs[&n].graphs.to_string()).collect();
    Ok(format!("n=3..8 equal C-(n); graphs per n: {}", counts.join(",")))
}

fn criterion_2() -> Outcome {
    let Some(setting) = std::env::var_os("CWINV_ACCEPT_N9") else {
        return Ok("SKIP: stretch run, set CWINV_ACCEPT_N9 to run it".into());
    };
    let cache = (setting != "1").then(|| std::path::PathBuf::from(&setting));
    let e = enumerate_graph_pair_set(9, &GraphSource::Builtin, Field::Gf2, cache.as_deref())
        .map_err(|e| e.to_string())?;
    let mut want = c_minus(9);
    want.insert((5, 6));
    let got = points2(&e.set);
    ensure(got == want, || format!("got {got:?}, expected C-(9) with (5,6)"))?;
    let w = &e.witnesses[&vec![5, 6]];
    Ok(format!("{} graphs ({} cached); witness for (5,6): {w}", e.graphs, e.cached))
}

fn criterion_3() -> Outcome {
    let mut shapes = 0;
    for n in 5..=12 {
        let e = enumerate_cw_sets(n as usize).map_err(|e| e.to_string())?;
        shapes += e.shapes;
        let got = points2(&e.pairs);
        ensure(got == cw_dd(n), || format!("n={n}: got {got:?}, expected {:?}", cw_dd(n)))?;
        let lib = points2(&closed_form_set(SetKind::CwDd, n as usize).map_err(|e| e.to_string())?);
        ensure(lib == got, || format!("n={n}: closed form {lib:?}"))?;
    }
    let want9 = lit2(&[(2, 4), (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (4, 4), (4, 5)]);
    ensure(cw_dd(9) == want9, || format!("CW_dd(9) = {:?}", cw_dd(9)))?;
    Ok(format!("n=5..12 over {shapes} shapes"))
}

fn criterion_4() -> Outcome {
    let listed: [(u32, Vec<[u32; 4]>); 2] = [
        (8, vec![[2, 2, 5, 5], [2, 2, 6, 6], [3, 3, 3, 3], [3, 3, 4, 4], [3, 3, 5, 5]]),
        (
            9,
            vec![
                [2, 2, 6, 6],
                [2, 2, 7, 7],
                [2, 4, 4, 4],
                [3, 4, 4, 4],
                [4, 4, 4, 4],
                [3, 3, 4, 4],
                [3, 3, 5, 5],
                [3, 3, 6, 6],
                [4, 4, 5, 5],
            ],
        ),
    ];
    for n in 5..=12 {
        let e = enumerate_cw_sets(n as usize).map_err(|e| e.to_string())?;
        let got = points4(&e.tuples);
        ensure(got == cw_tuple4(n), || format!("n={n}: got {got:?}, expected {:?}", cw_tuple4(n)))?;
        let lib = points4(&closed_form_set(SetKind::CwTuple4, n as usize).map_err(|e| e.to_string())?);
        ensure(lib == got, || format!("n={n}: closed form {lib:?}"))?;
    }
    for (n, list) in &listed {
        let want: Tuples = list.iter().copied().collect();
        ensure(want.len() == list.len() && cw_tuple4(*n) == want, || {
            format!("n={n}: the listed set differs from {:?}", cw_tuple4(*n))
        })?;
    }
    Ok("n=5..12; n=8 and n=9 equal the listed sets".into())
}

fn criterion_5(ctx: &Context) -> Outcome {
    let mut compared = 0;
    for (shape, g, formula) in &ctx.cw_graphs {
        let oracle = oracle_invariants(g, Field::Gf2).map_err(|e| e.to_string())?;
        ensure(formula.same_values(&oracle), || {
            format!("{shape}: formulas {formula}, oracle {oracle}")
        })?;
        compared += 1;
    }
    Ok(format!("{compared} Cameron-Walker graphs on 5..11 vertices, zero mismatches"))
}

fn criterion_6(ctx: &Context) -> Outcome {
    for (shape, g, _) in &ctx.cw_graphs {
        let w = depth_via_fv(shape);
        let i = independence_domination(g);
        ensure(w.depth == i, || format!("{shape}: sweep {}, i(G) {i}", w.depth))?;
        let a = witness_set(shape, w.argmin.iter().fold(0u64, |m, &k| m | 1 << k));
        ensure(a == w.witness, || format!("{shape}: witness differs from A(V)"))?;
        let adj = g.adjacency();
        let mut covered = 0u64;
        for v in a.iter() {
            ensure(adj[v] & a.mask() == 0, || format!("{shape}: A(V) not independent"))?;
            covered |= adj[v] | 1 << v;
        }
        ensure(covered == (1u64 << g.n()) - 1, || format!("{shape}: A(V) misses vertices"))?;
        ensure(a.len() == w.depth, || format!("{shape}: |A(V)| = {} != {}", a.len(), w.depth))?;
    }
    Ok(format!("{} graphs, zero mismatches", ctx.cw_graphs.len()))
}

fn oracle_of(g: &Graph) -> Result<InvariantBundle, String> {
    oracle_invariants(g, Field::Gf2).map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    for n in 2..=12 {
        let b = oracle_of(&named::star(n))?;
        ensure((b.depth, b.dim) == (1, n - 1), || format!("star({n}): {b}"))?;
    }
    let g = Family::CliqueWithLeaves(vec![1, 2, 3]).build().map_err(|e| e.to_string())?;
    let b = oracle_of(&g)?;
    ensure((b.n, b.depth, b.dim) == (9, 4, 6), || format!("G(3;1,2,3): {b}"))?;
    let mut checked = 0;
    for m in 1..=6 {
        for p in 1..=4 {
            for t in 1..=5 {
                let n = 2 * m + 3 * p + 2 * t - 2;
                if !(5..=12).contains(&n) {
                    continue;
                }
                let g = Family::SpecialOne { m, p, t }.build().map_err(|e| e.to_string())?;
                let b = oracle_of(&g)?;
                let d = m + p + t - 1;
                ensure(b.values() == (n, m + p, d, d, d), || format!("g1:{m},{p},{t}: {b}"))?;
                checked += 1;
            }
        }
    }
    for m in 2..=5 {
        for s in 1..=7 {
            for t in 1..=4 {
                let n = 2 * m + s + 2 * t + 1;
                if n > 12 {
                    continue;
                }
                let g = Family::SpecialTwo { m, s, t }.build().map_err(|e| e.to_string())?;
                let b = oracle_of(&g)?;
                let d = m + s + t;
                ensure(b.values() == (n, m + 1, m + t, d, d), || format!("g2:{m},{s},{t}: {b}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("stars n=2..12, G(3;1,2,3), {checked} special-family graphs with n <= 12"))
}

fn criterion_8(ctx: &Context) -> Outcome {
    let mut by_type = [0usize; 3];
    for (shape, _, b) in &ctx.cw_graphs {
        ensure(b.depth >= 2, || format!("{shape}: depth {}", b.depth))?;
        if b.depth != 2 {
            continue;
        }
        let (m, p, s, t) = (shape.m(), shape.p(), shape.s(), shape.t());
        let k = if m == 2 && t.iter().all(|&x| x == 0) {
            0
        } else if m == 1 && p == 1 && t[0] == 1 {
            1
        } else if m == 1 && p == 1 && t[0] >= 2 && s[0] == 1 {
            2
        } else {
            return Err(format!("{shape}: depth 2 outside e1, e2, e3"));
        };
        by_type[k] += 1;
    }
    for n in 5..=12u32 {
        let e = enumerate_cw_sets(n as usize).map_err(|e| e.to_string())?;
        let got: BTreeSet<u32> = points2(&e.pairs).into_iter().filter(|p| p.0 == 2).map(|p| p.1).collect();
        let want: BTreeSet<u32> = depth_two_dims(n).into_iter().collect();
        ensure(got == want, || format!("n={n}: (2,b) for b in {got:?}, expected {want:?}"))?;
    }
    Ok(format!(
        "depth-2 graphs on <= 11 vertices: e1 {}, e2 {}, e3 {}; (2,b) biconditional n=5..12",
        by_type[0], by_type[1], by_type[2]
    ))
}

fn criterion_9(ctx: &Context) -> Outcome {
    for n in 5..=20u32 {
        let set = closed_form_set(SetKind::CwDd, n as usize).map_err(|e| e.to_string())?;
        let convex = is_convex(&set).map_err(|e| e.to_string())?.is_none();
        let expect = n % 2 == 0 || n == 5 || n == 7;
        ensure(convex == expect, || format!("n={n}: convex {convex}, expected {expect}"))?;
    }
    let gap = is_convex(&closed_form_set(SetKind::CwDd, 9).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?
        .ok_or("CW_dd(9) reported convex")?;
    ensure((gap.first, gap.second) == ((2, 4), (2, 6)), || format!("CW_dd(9) gap {gap:?}"))?;
    for (n, e) in &ctx.graph_pairs {
        let gap = is_convex(&e.set).map_err(|e| e.to_string())?;
        ensure(gap.is_none(), || format!("graph pairs n={n}: {gap:?}"))?;
    }
    Ok("CW_dd law n=5..20; graph pair sets n=3..8 convex".into())
}

fn criterion_10(ctx: &Context) -> Outcome {
    let mut audited = 0;
    for (n, e) in &ctx.graph_pairs {
        ensure(e.violations.is_empty(), || format!("graphs n={n}: {:?}", e.violations))?;
        audited += e.graphs;
    }
    for n in 5..=12 {
        let e = enumerate_cw_sets(n).map_err(|e| e.to_string())?;
        ensure(e.violations.is_empty(), || format!("CW shapes n={n}: {:?}", e.violations))?;
        audited += e.shapes;
    }
    for (shape, g, _) in &ctx.cw_graphs {
        let b = oracle_of(g)?;
        let v = audit_inequalities(&b, true);
        ensure(v.is_empty(), || format!("{shape}: {v:?}"))?;
        audited += 1;
    }
    for n in 6..=200u32 {
        for b in n.div_ceil(2) + 1..=n - 2 {
            let lhs = b + 1 - b.div_ceil(n - b);
            ensure(lhs >= n / 2, || format!("n={n} b={b}: {lhs} < {}", n / 2))?;
        }
    }
    for n in 3..=8u32 {
        let got = points2(&ctx.graph_pairs[&n].set);
        ensure(c_minus(n).is_subset(&got) && got.is_subset(&c_plus(n)), || {
            format!("n={n}: sandwich fails for {got:?}")
        })?;
        for b in 1..n {
            for a in 1..=b {
                if a + b.div_ceil(n - b) <= b + 1 {
                    ensure(got.contains(&(a, b)), || format!("n={n}: ({a},{b}) missing"))?;
                }
            }
        }
        if n <= 6 {
            let next = points2(&ctx.graph_pairs[&(n + 1)].set);
            ensure(got.is_subset(&next), || format!("n={n}: not contained in n={}", n + 1))?;
        }
    }
    Ok(format!(
        "{audited} bundles audited; half bound n=6..200; sandwich, membership, monotonicity"
    ))
}

fn criterion_11() -> Outcome {
    let mut count = 0;
    let mut check = |kind: PointKind, n: usize, p: &[u32], coords: &dyn Fn(&InvariantBundle) -> Vec<u32>| {
        let w = witness_for_point(kind, n, p).map_err(|e| format!("{kind} n={n} {p:?}: {e}"))?;
        ensure(w.graph.n() == n, || format!("{kind} n={n} {p:?}: {} vertices", w.graph.n()))?;
        // Re-check every witness with the oracle, whatever verified it inside.
        let b = oracle_of(&w.graph)?;
        ensure(coords(&b) == p, || format!("{kind} n={n} {p:?}: oracle {b}"))?;
        count += 1;
        Ok::<(), String>(())
    };
    let pair = |b: &InvariantBundle| vec![b.depth as u32, b.dim as u32];
    let tuple = |b: &InvariantBundle| vec![b.depth as u32, b.reg as u32, b.dim as u32, b.degh as u32];
    for n in 5..=12u32 {
        for (a, b) in cw_dd(n) {
            check(PointKind::CwPair, n as usize, &[a, b], &pair)?;
        }
        for t in cw_tuple4(n) {
            check(PointKind::CwTuple, n as usize, &t, &tuple)?;
        }
    }
    for n in 3..=8u32 {
        for (a, b) in c_minus(n) {
            check(PointKind::GraphPair, n as usize, &[a, b], &pair)?;
        }
    }
    Ok(format!("{count} witnesses built, self-verified and re-checked by the oracle"))
}

fn main() {
    // Test-harness flags such as `--nocapture` are ignored.
    let started = Instant::now();
    let mut graph_pairs = BTreeMap::new();
    for n in 3..=8u32 {
        let e = enumerate_graph_pair_set(n as usize, &GraphSource::Builtin, Field::Gf2, None)
            .expect("graph enumeration");
        graph_pairs.insert(n, e);
    }
    let mut cw_graphs = Vec::new();
    for n in 5..=11 {
        for shape in enumerate_cw_shapes(n).expect("shape enumeration") {
            let g = build_cw(&shape);
            let b = cw_invariants(&shape);
            cw_graphs.push((shape, g, b));
        }
    }
    let ctx = Context {
        graph_pairs,
        cw_graphs,
    };
    println!("acceptance: shared enumerations ready in {:.1}s", started.elapsed().as_secs_f64());

    let criteria: Vec<Criterion> = vec![
        ("1 graph depth-dim sets n=3..8 equal C-(n)", Box::new(|| criterion_1(&ctx))),
        ("2 n=9 graph set equals C-(9) plus (5,6) [stretch]", Box::new(criterion_2)),
        ("3 Cameron-Walker depth-dim sets n=5..12", Box::new(criterion_3)),
        ("4 Cameron-Walker 4-tuple sets n=5..12", Box::new(criterion_4)),
        ("5 formulas equal the oracle on CW graphs n<=11", Box::new(|| criterion_5(&ctx))),
        ("6 f(V) depth equals i(G), witnesses valid", Box::new(|| criterion_6(&ctx))),
        ("7 construction spot checks via the oracle", Box::new(criterion_7)),
        ("8 depth-2 classification", Box::new(|| criterion_8(&ctx))),
        ("9 convexity", Box::new(|| criterion_9(&ctx))),
        ("10 inequality audit and set properties", Box::new(|| criterion_10(&ctx))),
        ("11 witness completeness", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) if detail.starts_with("SKIP") => {
                println!("criterion {name}: SKIP ({}) [{secs:.1}s]", &detail[6..])
            }
            Ok(detail) => println!("criterion {name}: PASS ({detail}) [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why}) [{secs:.1}s]");
            }
        }
    }
    println!(
        "acceptance: {} criteria, {failed} failed, {:.1}s total",
        criteria.len(),
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
