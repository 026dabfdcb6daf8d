//! Per-position-class feature homogeneity.
//!
//! [`summarize`] groups a lexicon by class key and records, for each of the
//! features E, M, L, I, D and K, whether the class agrees on a value, agrees
//! up to a number of exceptions, or is split. [`diff_against_reference`]
//! flags classes that contradict an exceptionless cell of a reference table.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::lexicon::{join, LexEntry, Lexicon, PositionClass};

/// Features in reference-table column order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Feature {
    #[serde(rename = "E")]
    Vorfeld,
    #[serde(rename = "M")]
    Comparable,
    #[serde(rename = "L")]
    Negatable,
    #[serde(rename = "I")]
    Gradable,
    #[serde(rename = "D")]
    Rhematic,
    #[serde(rename = "K")]
    Predicative,
}

impl Feature {
    pub const ALL: [Feature; 6] = [
        Feature::Vorfeld,
        Feature::Comparable,
        Feature::Negatable,
        Feature::Gradable,
        Feature::Rhematic,
        Feature::Predicative,
    ];

    pub fn letter(self) -> &'static str {
        match self {
            Feature::Vorfeld => "E",
            Feature::Comparable => "M",
            Feature::Negatable => "L",
            Feature::Gradable => "I",
            Feature::Rhematic => "D",
            Feature::Predicative => "K",
        }
    }

    pub fn value(self, entry: &LexEntry) -> bool {
        match self {
            Feature::Vorfeld => entry.vorfeld,
            Feature::Comparable => entry.comparable,
            Feature::Negatable => entry.negatable,
            Feature::Gradable => entry.gradable,
            Feature::Rhematic => entry.rhematic,
            Feature::Predicative => entry.predicative,
        }
    }

    fn column(self) -> usize {
        self as usize
    }
}

/// Verdict for one (class, feature) cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CellSummary {
    AllPlus,
    AllMinus,
    /// `value` holds for the strictly larger side; `exceptions` is the
    /// size of the other side.
    Majority {
        value: bool,
        exceptions: usize,
    },
    Heterogeneous,
    Empty,
}

impl CellSummary {
    pub fn from_counts(plus: usize, minus: usize) -> Self {
        match (plus, minus) {
            (0, 0) => CellSummary::Empty,
            (_, 0) => CellSummary::AllPlus,
            (0, _) => CellSummary::AllMinus,
            (p, m) if p > m => CellSummary::Majority {
                value: true,
                exceptions: m,
            },
            (p, m) if m > p => CellSummary::Majority {
                value: false,
                exceptions: p,
            },
            _ => CellSummary::Heterogeneous,
        }
    }

    /// The value every member must have, for exceptionless cells.
    pub fn required(self) -> Option<bool> {
        match self {
            CellSummary::AllPlus => Some(true),
            CellSummary::AllMinus => Some(false),
            _ => None,
        }
    }

    /// Whether a class with these counts contradicts this cell.
    fn contradicted_by(self, found: CellSummary) -> bool {
        match self.required() {
            Some(value) => found != CellSummary::Empty && found.required() != Some(value),
            None => false,
        }
    }
}

impl fmt::Display for CellSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellSummary::AllPlus => f.write_str("+"),
            CellSummary::AllMinus => f.write_str("-"),
            CellSummary::Majority { value, exceptions } => {
                write!(f, "{}{exceptions}", if *value { "+" } else { "-" })
            }
            CellSummary::Heterogeneous | CellSummary::Empty => Ok(()),
        }
    }
}

impl FromStr for CellSummary {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (value, rest) = match s.chars().next() {
            None => return Ok(CellSummary::Heterogeneous),
            Some('+') => (true, &s[1..]),
            Some('-') => (false, &s[1..]),
            Some(_) => return Err(format!("bad cell {s:?}")),
        };
        if rest.is_empty() {
            return Ok(if value {
                CellSummary::AllPlus
            } else {
                CellSummary::AllMinus
            });
        }
        match rest.parse::<usize>() {
            Ok(exceptions) if exceptions > 0 => Ok(CellSummary::Majority { value, exceptions }),
            _ => Err(format!("bad cell {s:?}")),
        }
    }
}

/// A class set used as a grouping key; several members form a dual key
/// such as 26/40. Keys order by their lowest member, a dual key right after
/// its lower member alone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey(Vec<PositionClass>);

impl ClassKey {
    pub fn of(entry: &LexEntry) -> Self {
        ClassKey(entry.classes.iter().copied().collect())
    }

    pub fn classes(&self) -> &[PositionClass] {
        &self.0
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(self.0.iter(), "/"))
    }
}

impl FromStr for ClassKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut classes = s
            .split('/')
            .map(|c| c.parse::<PositionClass>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        classes.sort();
        classes.dedup();
        Ok(ClassKey(classes))
    }
}

impl Serialize for ClassKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One row of the class generalization table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassSummary {
    pub class_key: ClassKey,
    pub count: usize,
    pub cells: [CellSummary; 6],
}

impl ClassSummary {
    pub fn from_entries(class_key: ClassKey, entries: &[&LexEntry]) -> Self {
        let cells = Feature::ALL.map(|feature| {
            let plus = entries.iter().filter(|e| feature.value(e)).count();
            CellSummary::from_counts(plus, entries.len() - plus)
        });
        ClassSummary {
            class_key,
            count: entries.len(),
            cells,
        }
    }

    pub fn cell(&self, feature: Feature) -> CellSummary {
        self.cells[feature.column()]
    }
}

impl Serialize for ClassSummary {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Cells<'a>(&'a [CellSummary; 6]);

        impl Serialize for Cells<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(6))?;
                for feature in Feature::ALL {
                    map.serialize_entry(feature.letter(), &self.0[feature.column()])?;
                }
                map.end()
            }
        }

        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("class", &self.class_key)?;
        map.serialize_entry("count", &self.count)?;
        map.serialize_entry("cells", &Cells(&self.cells))?;
        map.end()
    }
}

/// One summary per class key present, ordered by class.
pub fn summarize(lexicon: &Lexicon) -> Vec<ClassSummary> {
    summarize_with(lexicon, Execution::default())
}

pub fn summarize_with(lexicon: &Lexicon, mode: Execution) -> Vec<ClassSummary> {
    let mut groups: BTreeMap<ClassKey, Vec<&LexEntry>> = BTreeMap::new();
    for entry in lexicon.entries() {
        groups.entry(ClassKey::of(entry)).or_default().push(entry);
    }
    let groups: Vec<_> = groups.into_iter().collect();
    exec::map(mode, &groups, |(key, entries)| {
        ClassSummary::from_entries(key.clone(), entries)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Mismatch {
    #[serde(rename = "class")]
    pub class_key: ClassKey,
    pub feature: Feature,
    pub expected: CellSummary,
    pub found: CellSummary,
}

/// Every (class, feature) where the computed summary contradicts an
/// exceptionless reference cell. Tendency and blank reference cells, and
/// classes missing on either side, constrain nothing. Counts are ignored.
pub fn diff_against_reference(
    summaries: &[ClassSummary],
    reference: &[ClassSummary],
) -> Vec<Mismatch> {
    let reference: BTreeMap<&ClassKey, &ClassSummary> =
        reference.iter().map(|row| (&row.class_key, row)).collect();
    let mut out = Vec::new();
    for summary in summaries {
        let Some(row) = reference.get(&summary.class_key) else {
            continue;
        };
        for feature in Feature::ALL {
            let (expected, found) = (row.cell(feature), summary.cell(feature));
            if expected.contradicted_by(found) {
                out.push(Mismatch {
                    class_key: summary.class_key.clone(),
                    feature,
                    expected,
                    found,
                });
            }
        }
    }
    out
}

pub const REFERENCE_HEADER: &str = "class\tcount\tE\tM\tL\tI\tD\tK";

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ReferenceError {
    pub line: usize,
    pub message: String,
}

/// Reads a reference table: `#` comments, the header line, then one row
/// per class key with cells `+`, `-`, `+N`, `-N` or blank. A count may
/// carry a trailing `+` for open-ended classes.
pub fn parse_reference(text: &str) -> Result<Vec<ClassSummary>, ReferenceError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| !line.trim().is_empty() && !line.starts_with('#'));
    let fail = |line, message: String| ReferenceError { line, message };

    match lines.next() {
        Some((_, header)) if header.trim_end() == REFERENCE_HEADER => {}
        Some((n, _)) => return Err(fail(n, "expected the column header line".into())),
        None => return Ok(Vec::new()),
    }

    let mut rows = Vec::new();
    for (n, line) in lines {
        let cells: Vec<&str> = line.split('\t').map(str::trim).collect();
        if cells.len() != 8 {
            return Err(fail(n, format!("expected 8 fields, found {}", cells.len())));
        }
        let class_key = cells[0].parse::<ClassKey>().map_err(|e| fail(n, e))?;
        let count = cells[1]
            .trim_end_matches('+')
            .parse::<usize>()
            .map_err(|_| fail(n, format!("bad count {:?}", cells[1])))?;
        let mut parsed = [CellSummary::Heterogeneous; 6];
        for (slot, cell) in parsed.iter_mut().zip(&cells[2..]) {
            *slot = cell.parse().map_err(|e| fail(n, e))?;
        }
        rows.push(ClassSummary {
            class_key,
            count,
            cells: parsed,
        });
    }
    Ok(rows)
}
