use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::mpsc;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::audit::{audit_inequalities, Violation};
use super::set::{LatticePointSet, Provenance};
use crate::cw::{cw_invariants, enumerate_cw_shapes, CwShape};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, emit_graph6, enumerate_connected_graphs, parse_graph6, Graph,
    MAX_GENERATOR_VERTICES,
};
use crate::oracle::{oracle_invariants, Field, InvariantBundle};

/// Where the graphs come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    /// The built-in generator of connected graphs.
    Builtin,
    /// One graph6 code per line.
    Graph6File(PathBuf),
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Builtin => f.write_str("builtin"),
            GraphSource::Graph6File(p) => write!(f, "graph6:{}", p.display()),
        }
    }
}

impl FromStr for GraphSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphSource> {
        if s == "builtin" {
            return Ok(GraphSource::Builtin);
        }
        match s.strip_prefix("graph6:") {
            Some(path) if !path.is_empty() => Ok(GraphSource::Graph6File(path.into())),
            _ => Err(Error::Parse(format!(
                "source `{s}`: expected `builtin` or `graph6:PATH`"
            ))),
        }
    }
}

/// Result of a graph enumeration.
#[derive(Clone, Debug)]
pub struct PairEnumeration {
    /// The `(depth, dim)` pairs.
    pub set: LatticePointSet,
    /// For each point, the least canonical graph6 code realising it.
    pub witnesses: BTreeMap<Vec<u32>, String>,
    /// Every bundle that fails a general inequality, with its graph.
    pub violations: Vec<(String, Violation)>,
    /// Connected graphs processed.
    pub graphs: usize,
    /// Of those, how many were answered from the cache.
    pub cached: usize,
}

/// `(depth, dim)` over all connected graphs on `n` vertices from `source`.
/// With a cache directory, every computed bundle is appended to a file keyed
/// by `n`, the source digest and the field, and a rerun skips the graphs
/// already there.
pub fn enumerate_graph_pair_set(
    n: usize,
    source: &GraphSource,
    field: Field,
    cache: Option<&Path>,
) -> Result<PairEnumeration> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "enumeration n",
            msg: format!("n = {n}; need at least 2 vertices"),
        });
    }
    let (graphs, digest) = load_source(n, source)?;
    let mut cache_file = match cache {
        Some(dir) => Some(CacheFile::open(dir, n, &digest, field)?),
        None => None,
    };
    let known: HashMap<String, InvariantBundle> = cache_file
        .as_mut()
        .map(|c| c.take_rows(n, field))
        .unwrap_or_default();

    let todo: Vec<&(String, Graph)> = graphs.iter().filter(|(c, _)| !known.contains_key(c)).collect();
    let computed: Vec<(String, InvariantBundle)> = match cache_file {
        Some(cache) => {
            let (tx, rx) = mpsc::channel::<String>();
            let writer = std::thread::spawn(move || cache.write_all(rx));
            let result = todo
                .par_iter()
                .map_with(tx, |tx, (code, g)| {
                    let b = oracle_invariants(g, field)?;
                    // A failed send means the writer died; it reports why.
                    let _ = tx.send(format!(
                        "{code}\t{}\t{}\t{}\t{}\n",
                        b.depth, b.reg, b.dim, b.degh
                    ));
                    Ok((code.clone(), b))
                })
                .collect::<Result<Vec<_>>>();
            writer
                .join()
                .map_err(|_| Error::Cache("cache writer panicked".into()))??;
            result?
        }
        None => todo
            .par_iter()
            .map(|(code, g)| Ok((code.clone(), oracle_invariants(g, field)?)))
            .collect::<Result<Vec<_>>>()?,
    };

    let cached = graphs.len() - computed.len();
    let mut all: HashMap<String, InvariantBundle> = known;
    all.extend(computed);
    let mut set = LatticePointSet::new(
        n,
        2,
        Provenance::Enumerated {
            kind: "graph-pairs".into(),
            source: source.to_string(),
            field: Some(field),
        },
    );
    let mut witnesses: BTreeMap<Vec<u32>, String> = BTreeMap::new();
    let mut violations = Vec::new();
    for (code, _) in &graphs {
        let b = all[code];
        let point = vec![b.depth as u32, b.dim as u32];
        set.insert(point.clone());
        let slot = witnesses.entry(point).or_insert_with(|| code.clone());
        if code < slot {
            *slot = code.clone();
        }
        violations.extend(audit_inequalities(&b, false).into_iter().map(|v| (code.clone(), v)));
    }
    violations.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(PairEnumeration {
        set,
        witnesses,
        violations,
        graphs: graphs.len(),
        cached,
    })
}

/// Canonical code and graph for every connected graph of the source, sorted
/// by code, plus a digest identifying the source.
fn load_source(n: usize, source: &GraphSource) -> Result<(Vec<(String, Graph)>, String)> {
    match source {
        GraphSource::Builtin => {
            if n > MAX_GENERATOR_VERTICES {
                return Err(Error::OutOfRange {
                    what: "generator vertex count",
                    msg: format!(
                        "n = {n}; the built-in generator handles up to {MAX_GENERATOR_VERTICES}"
                    ),
                });
            }
            let graphs: Vec<(String, Graph)> = enumerate_connected_graphs(n)?
                .into_iter()
                .map(|g| (emit_graph6(&g), g))
                .collect();
            let digest = hex_digest(format!("builtin connected graphs v1 n={n}").as_bytes());
            Ok((graphs, digest))
        }
        GraphSource::Graph6File(path) => {
            let bytes = fs::read(path).map_err(|e| {
                Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
            })?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| Error::Parse(format!("{}: not UTF-8", path.display())))?;
            let mut parsed = Vec::new();
            for (k, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = parse_graph6(line).map_err(|e| {
                    Error::Parse(format!("{} line {}: {e}", path.display(), k + 1))
                })?;
                if g.n() != n {
                    return Err(Error::Parse(format!(
                        "{} line {}: graph has {} vertices, expected {n}",
                        path.display(),
                        k + 1,
                        g.n()
                    )));
                }
                parsed.push(g);
            }
            let unique: BTreeMap<String, Graph> = parsed
                .into_par_iter()
                .filter(Graph::is_connected)
                .map(|g| {
                    let code = canonical_form(&g).into_code();
                    let g = parse_graph6(&code).expect("canonical code parses");
                    (code, g)
                })
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            Ok((unique.into_iter().collect(), hex_digest(&bytes)))
        }
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

struct CacheFile {
    path: PathBuf,
    file: File,
    rows: Vec<(String, [usize; 4])>,
}

impl CacheFile {
    fn header(n: usize, digest: &str, field: Field) -> String {
        format!("# cwinv-cache n={n} source={digest} field={field}\n")
    }

    fn path(dir: &Path, n: usize, digest: &str, field: Field) -> PathBuf {
        let field = field.to_string().replace(':', "-");
        dir.join(format!("pairs-n{n}-{field}-{}.tsv", &digest[..16]))
    }

    /// Opens or creates the cache file; a partial last row from an
    /// interrupted run is cut off.
    fn open(dir: &Path, n: usize, digest: &str, field: Field) -> Result<CacheFile> {
        let cache_err = |e: std::io::Error| Error::Cache(format!("{}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(cache_err)?;
        let path = Self::path(dir, n, digest, field);
        let header = Self::header(n, digest, field);
        let existing = match fs::read_to_string(&path) {
            Ok(text) => Some(text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let mut rows = Vec::new();
        let mut keep = 0;
        if let Some(text) = &existing {
            if !text.starts_with(&header) {
                let found = text.lines().next().unwrap_or("");
                return Err(Error::Cache(format!(
                    "{} was written for another source or field: header `{found}`, expected `{}`",
                    path.display(),
                    header.trim_end()
                )));
            }
            keep = header.len();
            for line in text[header.len()..].split_inclusive('\n') {
                let Some(row) = line.strip_suffix('\n').and_then(parse_row) else {
                    break;
                };
                rows.push(row);
                keep += line.len();
            }
        }
        let file = OpenOptions::new()
            .create(true)
            .write(true)
            .truncate(false)
            .open(&path)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        file.set_len(keep as u64)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        let mut cache = CacheFile { path, file, rows };
        if existing.is_none() {
            cache.file.write_all(header.as_bytes()).map_err(|e| cache.error(e))?;
        }
        Ok(cache)
    }

    fn error(&self, e: std::io::Error) -> Error {
        Error::Cache(format!("{}: {e}", self.path.display()))
    }

    fn take_rows(&mut self, n: usize, field: Field) -> HashMap<String, InvariantBundle> {
        std::mem::take(&mut self.rows)
            .into_iter()
            .map(|(code, [depth, reg, dim, degh])| {
                let b = InvariantBundle {
                    n,
                    depth,
                    reg,
                    dim,
                    degh,
                    field: Some(field),
                };
                (code, b)
            })
            .collect()
    }

    /// Single writer: appends rows as they arrive.
    fn write_all(self, rx: mpsc::Receiver<String>) -> Result<()> {
        use std::io::{Seek, SeekFrom};
        let mut file = &self.file;
        file.seek(SeekFrom::End(0)).map_err(|e| self.error(e))?;
        let mut out = BufWriter::new(file);
        for (k, line) in rx.into_iter().enumerate() {
            out.write_all(line.as_bytes()).map_err(|e| self.error(e))?;
            if k % 1024 == 1023 {
                out.flush().map_err(|e| self.error(e))?;
            }
        }
        out.flush().map_err(|e| self.error(e))
    }
}

fn parse_row(line: &str) -> Option<(String, [usize; 4])> {
    let mut parts = line.split('\t');
    let code = parts.next()?.to_string();
    let mut values = [0usize; 4];
    for v in &mut values {
        *v = parts.next()?.parse().ok()?;
    }
    if parts.next().is_some() || code.is_empty() {
        return None;
    }
    Some((code, values))
}

/// Pair and tuple sets over all Cameron-Walker graphs on `n` vertices.
#[derive(Clone, Debug)]
pub struct CwEnumeration {
    pub pairs: LatticePointSet,
    pub tuples: LatticePointSet,
    pub shapes: usize,
    /// Shapes whose bundle fails a general or Cameron-Walker inequality.
    pub violations: Vec<(CwShape, Violation)>,
}

/// Largest `n` for the Cameron-Walker set enumeration.
pub const MAX_CW_SET_N: usize = 14;

pub fn enumerate_cw_sets(n: usize) -> Result<CwEnumeration> {
    if !(5..=MAX_CW_SET_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "Cameron-Walker enumeration n",
            msg: format!(
                "n = {n}; need 5 <= n <= {MAX_CW_SET_N} (there are no Cameron-Walker graphs below 5 vertices)"
            ),
        });
    }
    let shapes = enumerate_cw_shapes(n)?;
    let bundles: Vec<InvariantBundle> = shapes.par_iter().map(cw_invariants).collect();
    let provenance = |kind: &str| Provenance::Enumerated {
        kind: kind.into(),
        source: "cw-shapes".into(),
        field: None,
    };
    let mut pairs = LatticePointSet::new(n, 2, provenance("cw-pairs"));
    let mut tuples = LatticePointSet::new(n, 4, provenance("cw-tuples"));
    let mut violations = Vec::new();
    for (shape, b) in shapes.iter().zip(&bundles) {
        pairs.insert(vec![b.depth as u32, b.dim as u32]);
        tuples.insert(vec![b.depth as u32, b.reg as u32, b.dim as u32, b.degh as u32]);
        violations.extend(
            audit_inequalities(b, true)
                .into_iter()
                .map(|v| (shape.clone(), v)),
        );
    }
    Ok(CwEnumeration {
        pairs,
        tuples,
        shapes: shapes.len(),
        violations,
    })
}
