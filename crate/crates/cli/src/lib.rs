//! The `cwinv` command line.

mod svg;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cwinv_core::cw::{cw_invariants, recognize_cw, CwShape, Family};
use cwinv_core::graph::{emit_graph6, parse_edge_list, parse_graph6, Graph};
use cwinv_core::lattice::{
    closed_form_set, diff_sets, enumerate_cw_sets, enumerate_graph_pair_set, format_diff,
    witness_for_point, GraphSource, LatticePointSet, PointKind, SetKind,
};
use cwinv_core::oracle::{field_cross_check, oracle_invariants, Field};
use cwinv_core::verify::{run_suite, Suite, VerifyOptions};
use cwinv_core::Error;

pub use svg::emit_scatter_svg;

/// Environment variable naming the cache directory when `--cache` is absent.
pub const CACHE_ENV: &str = "CWINV_CACHE";

#[derive(Parser, Debug)]
#[command(name = "cwinv", version, about = "Invariants of edge ideals and Cameron-Walker lattice-point sets")]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Depth, regularity, dimension and h-degree of a graph.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "gf2")]
        field: Field,
        /// Also compute over this field and report graphs that differ.
        #[arg(long)]
        cross_check: Option<Field>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Build a named graph, e.g. `g1:3,1,1` or `e2:4`.
    Construct {
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Decide whether a graph is Cameron-Walker and print its shape.
    Recognize {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Materialise a closed-form set.
    ClosedForm {
        #[arg(long)]
        kind: SetKind,
        #[command(flatten)]
        range: NArgs,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Enumerate a set from graphs or Cameron-Walker shapes.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[command(flatten)]
        range: NArgs,
        #[arg(long, default_value = "gf2")]
        field: Field,
        #[arg(long, default_value = "builtin")]
        source: GraphSource,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Write one graph6 witness per point here (graph pairs only).
        #[arg(long)]
        witnesses: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Build and check a graph realising a point.
    Witness {
        #[arg(long)]
        kind: PointKind,
        #[arg(long)]
        n: usize,
        /// Comma-separated coordinates.
        #[arg(long)]
        point: Point,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        /// A suite name or `all`.
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        range: NArgs,
        #[arg(long, default_value = "gf2")]
        field: Field,
        #[arg(long, default_value = "builtin")]
        source: GraphSource,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Compare two set files; exit 1 if they differ.
    Diff { left: PathBuf, right: PathBuf },
    /// Scatter plot of a pair set file as SVG.
    Plot { set: PathBuf },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// A graph6 code.
    #[arg(long)]
    pub graph6: Option<String>,
    /// A file of graph6 codes, one per line.
    #[arg(long)]
    pub graph6_file: Option<PathBuf>,
    /// An edge-list file.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// A Cameron-Walker shape literal.
    #[arg(long)]
    pub shape: Option<CwShape>,
    /// A named family.
    #[arg(long)]
    pub family: Option<Family>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct NArgs {
    /// `N` or `A..B` (inclusive).
    #[arg(long)]
    pub n: Option<NRange>,
    #[arg(long)]
    pub n_range: Option<NRange>,
}

impl NArgs {
    fn range(&self) -> RangeInclusive<usize> {
        self.n.clone().or_else(|| self.n_range.clone()).expect("clap requires one").0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<NRange, String> {
        let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        Ok(NRange(a..=b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point(pub Vec<u32>);

impl FromStr for Point {
    type Err = String;

    fn from_str(s: &str) -> Result<Point, String> {
        s.split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|e| format!("`{x}`: {e}")))
            .collect::<Result<_, _>>()
            .map(Point)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    GraphPairs,
    CwPairs,
    CwTuples,
}

/// Exit code for a failed verification or a non-empty diff.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit code for usage and I/O errors.
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    Mismatch(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Verification(_) => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command, writing the
/// main output to `out` (or `--out`) and diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buffer: Vec<u8> = Vec::new();
    let mut diagnostics: Vec<u8> = Vec::new();
    let outcome = match pool(cli.threads) {
        Ok(pool) => pool.install(|| execute(&cli.command, &mut buffer, &mut diagnostics)),
        Err(e) => Err(Failure::Usage(e)),
    };
    let _ = err.write_all(&diagnostics);
    let delivered = match &cli.out {
        Some(path) => std::fs::write(path, &buffer)
            .map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(&buffer).map_err(|e| e.to_string()),
    };
    if let Err(e) = delivered {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match outcome {
        Ok(code) => code,
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "theorem contradiction: {msg}");
            EXIT_MISMATCH
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn pool(threads: Option<u32>) -> Result<rayon::ThreadPool, String> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(k) = threads {
        b = b.num_threads(k as usize);
    }
    b.build().map_err(|e| e.to_string())
}

fn io(path: &Path) -> impl Fn(std::io::Error) -> Failure + '_ {
    move |e| Failure::Usage(format!("{}: {e}", path.display()))
}

fn cache_dir(flag: &Option<PathBuf>) -> Option<PathBuf> {
    flag.clone()
        .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

fn execute(command: &Command, out: &mut Vec<u8>, err: &mut Vec<u8>) -> Outcome {
    match command {
        Command::Invariants {
            input,
            field,
            cross_check,
            format,
        } => invariants(input, *field, *cross_check, *format, out),
        Command::Construct { family, format } => {
            let g = family.build()?;
            let shape = family.shape()?;
            write_graph(family.to_string(), &g, shape.as_ref(), *format, out)
        }
        Command::Recognize { input, format } => recognize(input, *format, out),
        Command::ClosedForm {
            kind,
            range,
            format,
        } => {
            let sets = range
                .range()
                .map(|n| closed_form_set(*kind, n))
                .collect::<Result<Vec<_>, _>>()?;
            write_sets(&sets, *format, out)
        }
        Command::Enumerate {
            kind,
            range,
            field,
            source,
            cache,
            witnesses,
            format,
        } => {
            let cache = cache_dir(cache);
            let mut sets = Vec::new();
            let mut archive = String::new();
            for n in range.range() {
                match kind {
                    EnumKind::GraphPairs => {
                        let e = enumerate_graph_pair_set(n, source, *field, cache.as_deref())?;
                        let _ = writeln!(
                            err,
                            "n={n}: {} graphs, {} from cache, {} points",
                            e.graphs,
                            e.cached,
                            e.set.len()
                        );
                        if !e.violations.is_empty() {
                            let rows: Vec<String> =
                                e.violations.iter().map(|(c, v)| format!("{c}: {v}")).collect();
                            return Err(Failure::Mismatch(rows.join("\n")));
                        }
                        for (p, code) in &e.witnesses {
                            archive.push_str(&format!("{n}\t{}\t{}\t{code}\n", p[0], p[1]));
                        }
                        sets.push(e.set);
                    }
                    EnumKind::CwPairs | EnumKind::CwTuples => {
                        let e = enumerate_cw_sets(n)?;
                        if !e.violations.is_empty() {
                            let rows: Vec<String> =
                                e.violations.iter().map(|(s, v)| format!("{s}: {v}")).collect();
                            return Err(Failure::Mismatch(rows.join("\n")));
                        }
                        sets.push(if *kind == EnumKind::CwPairs { e.pairs } else { e.tuples });
                    }
                }
            }
            if let Some(path) = witnesses {
                if *kind != EnumKind::GraphPairs {
                    return Err(Failure::Usage("--witnesses applies to graph-pairs".into()));
                }
                std::fs::write(path, format!("# n\tdepth\tdim\tgraph6\n{archive}")).map_err(io(path))?;
            }
            write_sets(&sets, *format, out)
        }
        Command::Witness {
            kind,
            n,
            point,
            format,
        } => {
            let w = witness_for_point(*kind, *n, &point.0)?;
            write_graph(w.construction.clone(), &w.graph, w.shape.as_ref(), *format, out)
        }
        Command::Verify {
            suite,
            range,
            field,
            source,
            cache,
            format,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let opts = VerifyOptions {
                field: *field,
                source: source.clone(),
                cache: cache_dir(cache),
            };
            let mut reports = Vec::new();
            for s in suites {
                let ns = range.range();
                let allowed = s.n_range();
                // With `all`, each suite runs on the part of the range it supports.
                let ns = if suite == "all" {
                    let lo = *ns.start().max(allowed.start());
                    let hi = *ns.end().min(allowed.end());
                    if lo > hi {
                        continue;
                    }
                    lo..=hi
                } else {
                    ns
                };
                reports.push(run_suite(s, ns, &opts)?);
            }
            match format {
                Format::Json => {
                    let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
                    writeln!(out, "{text}").expect("write to buffer");
                }
                Format::Tsv => {
                    for r in &reports {
                        for c in &r.checks {
                            let status = if c.ok { "PASS" } else { "FAIL" };
                            writeln!(out, "{}\t{status}\t{}", r.suite, c.label).expect("write to buffer");
                        }
                    }
                }
                Format::Svg => return Err(Failure::Usage("verify writes tsv or json".into())),
            }
            let failed: Vec<String> = reports
                .iter()
                .flat_map(|r| r.checks.iter().filter(|c| !c.ok).map(move |c| format!("{}: {c}", r.suite)))
                .collect();
            if failed.is_empty() {
                Ok(0)
            } else {
                Err(Failure::Mismatch(failed.join("\n")))
            }
        }
        Command::Diff { left, right } => {
            let l = read_set(left)?;
            let r = read_set(right)?;
            if l.arity != r.arity {
                return Err(Failure::Usage(format!(
                    "arity {} against arity {}",
                    l.arity, r.arity
                )));
            }
            let rows = diff_sets(&l, &r);
            out.extend_from_slice(format_diff(&rows).as_bytes());
            Ok(if rows.is_empty() { 0 } else { EXIT_MISMATCH })
        }
        Command::Plot { set } => {
            let set = read_set(set)?;
            out.extend_from_slice(emit_scatter_svg(&set)?.as_bytes());
            Ok(0)
        }
    }
}

fn read_set(path: &Path) -> Result<LatticePointSet, Failure> {
    let text = std::fs::read_to_string(path).map_err(io(path))?;
    LatticePointSet::from_tsv(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_sets(sets: &[LatticePointSet], format: Format, out: &mut Vec<u8>) -> Outcome {
    match format {
        Format::Tsv => {
            for s in sets {
                out.extend_from_slice(s.to_tsv().as_bytes());
            }
        }
        Format::Json => {
            let text = if let [one] = sets {
                one.to_json()
            } else {
                serde_json::to_string_pretty(sets).expect("sets serialize") + "\n"
            };
            out.extend_from_slice(text.as_bytes());
        }
        Format::Svg => {
            let [one] = sets else {
                return Err(Failure::Usage("svg output takes a single n".into()));
            };
            out.extend_from_slice(emit_scatter_svg(one)?.as_bytes());
        }
    }
    Ok(0)
}

/// The graphs named by the input flags, each with a label.
fn load_graphs(input: &GraphInput) -> Result<Vec<(String, Graph)>, Failure> {
    if let Some(code) = &input.graph6 {
        return Ok(vec![(code.clone(), parse_graph6(code)?)]);
    }
    if let Some(path) = &input.graph6_file {
        let text = std::fs::read_to_string(path).map_err(io(path))?;
        let mut graphs = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let g = parse_graph6(line)
                .map_err(|e| Failure::Usage(format!("{} line {}: {e}", path.display(), k + 1)))?;
            graphs.push((line.to_string(), g));
        }
        return Ok(graphs);
    }
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path).map_err(io(path))?;
        let g = parse_edge_list(&text)?;
        return Ok(vec![(emit_graph6(&g), g)]);
    }
    if let Some(shape) = &input.shape {
        let g = cwinv_core::cw::build_cw(shape);
        return Ok(vec![(shape.to_string(), g)]);
    }
    let family = input.family.as_ref().expect("clap requires one input");
    Ok(vec![(family.to_string(), family.build()?)])
}

fn invariants(input: &GraphInput, field: Field, cross: Option<Field>, format: Format, out: &mut Vec<u8>) -> Outcome {
    let graphs = load_graphs(input)?;
    let single = graphs.len() == 1;
    let mut rows = Vec::new();
    for (label, g) in &graphs {
        let b = oracle_invariants(g, field)?;
        if let Some(shape) = recognize_cw(g)? {
            let f = cw_invariants(&shape);
            if !f.same_values(&b) {
                return Err(Failure::Mismatch(format!(
                    "{label}: Cameron-Walker formulas give {f}, the oracle {b}"
                )));
            }
        }
        rows.push((label.clone(), b));
    }
    let disagreements = match cross {
        Some(other) => {
            let gs: Vec<Graph> = graphs.iter().map(|(_, g)| g.clone()).collect();
            field_cross_check(&gs, field, other)?
        }
        None => Vec::new(),
    };
    match format {
        Format::Tsv => {
            for (label, b) in &rows {
                if single {
                    writeln!(out, "{b}").expect("write to buffer");
                } else {
                    writeln!(out, "{label}\t{b}").expect("write to buffer");
                }
            }
            for d in &disagreements {
                writeln!(out, "# fields differ on {}: {} vs {}", d.graph6, d.first, d.second)
                    .expect("write to buffer");
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(label, b)| json!({ "graph": label, "invariants": b }))
                .collect();
            let value = if cross.is_some() {
                json!({ "graphs": items, "field_disagreements": disagreements })
            } else if single {
                items.into_iter().next().expect("one row")
            } else {
                json!(items)
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json")).expect("write to buffer");
        }
        Format::Svg => return Err(Failure::Usage("invariants writes tsv or json".into())),
    }
    Ok(0)
}

fn recognize(input: &GraphInput, format: Format, out: &mut Vec<u8>) -> Outcome {
    for (label, g) in load_graphs(input)? {
        let shape = recognize_cw(&g)?;
        match format {
            Format::Tsv => {
                let text = shape.map_or_else(|| "not Cameron-Walker".to_string(), |s| s.to_string());
                writeln!(out, "{label}\t{text}").expect("write to buffer");
            }
            Format::Json => {
                let value = json!({
                    "graph": label,
                    "cameron_walker": shape.is_some(),
                    "shape": shape.as_ref().map(ToString::to_string),
                    "invariants": shape.as_ref().map(cw_invariants),
                });
                writeln!(out, "{}", serde_json::to_string(&value).expect("json")).expect("write to buffer");
            }
            Format::Svg => return Err(Failure::Usage("recognize writes tsv or json".into())),
        }
    }
    Ok(0)
}

fn write_graph(label: String, g: &Graph, shape: Option<&CwShape>, format: Format, out: &mut Vec<u8>) -> Outcome {
    let code = emit_graph6(g);
    match format {
        Format::Tsv => {
            let shape = shape.map_or_else(|| "-".to_string(), ToString::to_string);
            writeln!(out, "{code}\t{}\t{label}\t{shape}", g.n()).expect("write to buffer");
        }
        Format::Json => {
            let value = json!({
                "graph6": code,
                "n": g.n(),
                "construction": label,
                "shape": shape.map(ToString::to_string),
                "edges": g.edges().collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json")).expect("write to buffer");
        }
        Format::Svg => return Err(Failure::Usage("graphs are written as tsv or json".into())),
    }
    Ok(0)
}
