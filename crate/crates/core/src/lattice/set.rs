use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::Field;

/// The closed-form sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "String")]
pub enum SetKind {
    /// `{(1, n-1)} ∪ {(a,b) : a <= b, 1 <= a <= n/2, 1 <= b <= n-2}`.
    CMinus,
    /// `{(a,b) : 1 <= a <= b <= n-1}`.
    CPlus,
    /// Depth-dim pairs of Cameron-Walker graphs.
    CwDd,
    /// The depth-2 part of `CwDd`.
    Cw2Dd,
    /// Depth-reg-dim-degh tuples of Cameron-Walker graphs.
    CwTuple4,
    /// Reg-degh pairs of Cameron-Walker graphs.
    Rd,
}

impl SetKind {
    pub const ALL: [SetKind; 6] = [
        SetKind::CMinus,
        SetKind::CPlus,
        SetKind::CwDd,
        SetKind::Cw2Dd,
        SetKind::CwTuple4,
        SetKind::Rd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetKind::CMinus => "c-minus",
            SetKind::CPlus => "c-plus",
            SetKind::CwDd => "cw-dd",
            SetKind::Cw2Dd => "cw2-dd",
            SetKind::CwTuple4 => "cw-tuple4",
            SetKind::Rd => "rd",
        }
    }

    pub fn arity(self) -> usize {
        if self == SetKind::CwTuple4 {
            4
        } else {
            2
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            SetKind::CMinus | SetKind::CPlus => 3,
            _ => 5,
        }
    }
}

impl From<SetKind> for String {
    fn from(k: SetKind) -> String {
        k.name().to_string()
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SetKind> {
        SetKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = SetKind::ALL.iter().map(|k| k.name()).collect();
                Error::Parse(format!("unknown set kind `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

/// Where a set came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm { kind: SetKind },
    /// `kind` is `graph-pairs`, `cw-pairs` or `cw-tuples`.
    Enumerated {
        kind: String,
        source: String,
        field: Option<Field>,
    },
}

impl Provenance {
    pub fn kind_name(&self) -> &str {
        match self {
            Provenance::ClosedForm { kind } => kind.name(),
            Provenance::Enumerated { kind, .. } => kind,
        }
    }

    pub fn field(&self) -> Option<Field> {
        match self {
            Provenance::ClosedForm { .. } => None,
            Provenance::Enumerated { field, .. } => *field,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePointSet {
    pub n: usize,
    pub arity: usize,
    pub points: BTreeSet<Vec<u32>>,
    pub provenance: Provenance,
}

impl LatticePointSet {
    pub fn new(n: usize, arity: usize, provenance: Provenance) -> Self {
        assert!(arity == 2 || arity == 4, "arity must be 2 or 4");
        LatticePointSet {
            n,
            arity,
            points: BTreeSet::new(),
            provenance,
        }
    }

    pub fn insert(&mut self, point: Vec<u32>) {
        assert_eq!(point.len(), self.arity);
        self.points.insert(point);
    }

    pub fn contains(&self, point: &[u32]) -> bool {
        self.points.contains(point)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Same points, ignoring provenance.
    pub fn same_points(&self, other: &LatticePointSet) -> bool {
        self.arity == other.arity && self.points == other.points
    }

    pub fn is_subset(&self, other: &LatticePointSet) -> bool {
        self.points.is_subset(&other.points)
    }

    /// Keeps the coordinates at `indices`, e.g. `[0, 2]` for (depth, dim).
    pub fn project(&self, indices: [usize; 2], kind: &str) -> LatticePointSet {
        let mut out = LatticePointSet::new(
            self.n,
            2,
            Provenance::Enumerated {
                kind: kind.to_string(),
                source: format!("projection of {}", self.provenance.kind_name()),
                field: self.provenance.field(),
            },
        );
        for p in &self.points {
            out.insert(vec![p[indices[0]], p[indices[1]]]);
        }
        out
    }

    /// Header `# kind n arity field`, then one tab-separated row per point
    /// in ascending lexicographic order.
    pub fn to_tsv(&self) -> String {
        let field = self
            .provenance
            .field()
            .map_or_else(|| "-".to_string(), |f| f.to_string());
        let mut out = format!(
            "# {} {} {} {}\n",
            self.provenance.kind_name(),
            self.n,
            self.arity,
            field
        );
        for p in &self.points {
            let row: Vec<String> = p.iter().map(ToString::to_string).collect();
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("set serializes") + "\n"
    }

    pub fn from_tsv(text: &str) -> Result<LatticePointSet> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty set file".into()))?;
        let fields: Vec<&str> = header
            .strip_prefix('#')
            .ok_or_else(|| Error::Parse(format!("set header must start with `#`: `{header}`")))?
            .split_whitespace()
            .collect();
        let [kind, n, arity, field] = fields[..] else {
            return Err(Error::Parse(format!("set header needs `# kind n arity field`: `{header}`")));
        };
        let n: usize = n.parse().map_err(|e| Error::Parse(format!("n in header: {e}")))?;
        let arity: usize = arity
            .parse()
            .map_err(|e| Error::Parse(format!("arity in header: {e}")))?;
        if arity != 2 && arity != 4 {
            return Err(Error::Parse(format!("arity {arity}; expected 2 or 4")));
        }
        let field = if field == "-" { None } else { Some(field.parse()?) };
        let provenance = match kind.parse::<SetKind>() {
            Ok(kind) if field.is_none() => Provenance::ClosedForm { kind },
            _ => Provenance::Enumerated {
                kind: kind.to_string(),
                source: "file".to_string(),
                field,
            },
        };
        let mut set = LatticePointSet::new(n, arity, provenance);
        for (k, line) in lines.enumerate() {
            let point: Vec<u32> = line
                .split('\t')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|e| Error::Parse(format!("row {}: `{x}`: {e}", k + 1)))
                })
                .collect::<Result<_>>()?;
            if point.len() != arity {
                return Err(Error::Parse(format!(
                    "row {} has {} coordinates, expected {arity}",
                    k + 1,
                    point.len()
                )));
            }
            set.insert(point);
        }
        Ok(set)
    }
}

/// Rows `+ point` for points only in `right` and `- point` for points only
/// in `left`, ordered by point.
pub fn diff_sets(left: &LatticePointSet, right: &LatticePointSet) -> Vec<(char, Vec<u32>)> {
    let mut rows: Vec<(char, Vec<u32>)> = left
        .points
        .difference(&right.points)
        .map(|p| ('-', p.clone()))
        .chain(right.points.difference(&left.points).map(|p| ('+', p.clone())))
        .collect();
    rows.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    rows
}

pub fn format_diff(rows: &[(char, Vec<u32>)]) -> String {
    rows.iter()
        .map(|(sign, p)| {
            let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
            format!("{sign}{}\n", coords.join("\t"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(points: &[(u32, u32)]) -> LatticePointSet {
        let mut s = LatticePointSet::new(
            6,
            2,
            Provenance::Enumerated {
                kind: "graph-pairs".into(),
                source: "test".into(),
                field: Some(Field::Gf2),
            },
        );
        for &(a, b) in points {
            s.insert(vec![a, b]);
        }
        s
    }

    #[test]
    fn tsv_round_trip() {
        let s = pairs(&[(2, 3), (1, 1), (1, 5)]);
        let text = s.to_tsv();
        assert_eq!(text, "# graph-pairs 6 2 gf2\n1\t1\n1\t5\n2\t3\n");
        let back = LatticePointSet::from_tsv(&text).unwrap();
        assert!(back.same_points(&s));
        assert!(LatticePointSet::from_tsv("# x 3\n").is_err());
        assert!(LatticePointSet::from_tsv("# x 3 2 -\n1\t2\t3\n").is_err());
    }

    #[test]
    fn json_carries_the_same_points() {
        let s = pairs(&[(1, 1), (2, 2)]);
        let v: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(v["points"], serde_json::json!([[1, 1], [2, 2]]));
        assert_eq!(v["provenance"]["field"], "gf2");
    }

    #[test]
    fn diff_rows() {
        let a = pairs(&[(1, 1), (1, 2)]);
        let b = pairs(&[(1, 2), (2, 2)]);
        let rows = diff_sets(&a, &b);
        assert_eq!(rows, vec![('-', vec![1, 1]), ('+', vec![2, 2])]);
        assert_eq!(format_diff(&rows), "-1\t1\n+2\t2\n");
        assert!(diff_sets(&a, &a).is_empty());
    }
}
