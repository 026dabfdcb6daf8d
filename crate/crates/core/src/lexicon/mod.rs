//! Entry data model, lexicon store, file format and validation.

mod entry;
mod format;
mod validate;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub(crate) use entry::join;
pub use entry::{
    Case, Direction, LexEntry, MacroGroup, PositionClass, ScopeCategory, UnknownToken,
};
pub use format::{parse_lexicon, parse_lexicon_with, serialize_lexicon, HEADER};
pub use validate::{validate_entries, validate_entry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

/// Where a diagnostic points: a line of the lexicon file or, for entries
/// built in memory, the lemma.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Locus {
    Line(usize),
    Lemma(String),
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Line(n) => write!(f, "line {n}"),
            Locus::Lemma(lemma) => write!(f, "{lemma:?}"),
        }
    }
}

/// A finding about one lexicon row or entry. Errors keep the entry out of
/// the lexicon, warnings do not.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub locus: Locus,
    pub message: String,
}

impl Diagnostic {
    pub fn error(code: &'static str, locus: Locus, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            code,
            locus,
            message: message.into(),
        }
    }

    pub fn warning(code: &'static str, locus: Locus, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            code,
            locus,
            message: message.into(),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let severity = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(
            f,
            "{severity}[{}] {}: {}",
            self.code, self.locus, self.message
        )
    }
}

/// Multiset of adverb readings keyed by lemma. Homonyms are kept side by
/// side; an exact duplicate reading (same lemma, classes and group) is
/// refused.
#[derive(Clone, Debug, Default)]
pub struct Lexicon {
    entries: Vec<LexEntry>,
    index: HashMap<String, Vec<usize>>,
}

impl PartialEq for Lexicon {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for Lexicon {}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a lexicon from entries in order. Entries that fail
    /// [`validate_entry`] or duplicate an earlier reading are dropped with
    /// an error diagnostic.
    pub fn from_entries(entries: impl IntoIterator<Item = LexEntry>) -> (Self, Vec<Diagnostic>) {
        let mut lexicon = Lexicon::new();
        let mut diagnostics = Vec::new();
        for entry in entries {
            let found = validate_entry(&entry);
            let rejected = found.iter().any(Diagnostic::is_error);
            diagnostics.extend(found);
            if rejected {
                continue;
            }
            if let Err(entry) = lexicon.insert(entry) {
                diagnostics.push(duplicate(&entry, Locus::Lemma(entry.lemma.clone())));
            }
        }
        (lexicon, diagnostics)
    }

    /// Appends an entry, handing it back if the same reading is present.
    /// The caller is responsible for validation.
    #[allow(clippy::result_large_err)]
    pub fn insert(&mut self, entry: LexEntry) -> Result<(), LexEntry> {
        let slots = self.index.entry(entry.lemma.clone()).or_default();
        let clash = slots.iter().any(|&i| {
            let other = &self.entries[i];
            other.classes == entry.classes && other.group == entry.group
        });
        if clash {
            return Err(entry);
        }
        slots.push(self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    pub fn entries(&self) -> &[LexEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All readings of `lemma` in file order. Matching is exact and
    /// case-sensitive.
    pub fn lookup(&self, lemma: &str) -> Vec<&LexEntry> {
        self.index
            .get(lemma)
            .map(|slots| slots.iter().map(|&i| &self.entries[i]).collect())
            .unwrap_or_default()
    }

    /// Resolves a `lemma` or `lemma@class` selector to a single reading.
    pub fn resolve(&self, selector: &Selector) -> Result<&LexEntry, SelectError> {
        let readings = self.lookup(&selector.lemma);
        let matching: Vec<_> = match selector.class {
            Some(class) => readings
                .into_iter()
                .filter(|e| e.has_class(class))
                .collect(),
            None => readings,
        };
        match matching.as_slice() {
            [] => Err(SelectError::NotFound(selector.to_string())),
            [one] => Ok(one),
            _ => Err(SelectError::Ambiguous(selector.to_string(), matching.len())),
        }
    }
}

pub(crate) fn duplicate(entry: &LexEntry, locus: Locus) -> Diagnostic {
    Diagnostic::error(
        "duplicate-reading",
        locus,
        format!(
            "reading {} ({}) is already in the lexicon",
            entry.selector(),
            entry.group
        ),
    )
}

/// `lemma` or `lemma@class`, naming one reading of a possibly homonymous
/// lemma.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Selector {
    pub lemma: String,
    pub class: Option<PositionClass>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SelectError {
    #[error("malformed selector {0:?}")]
    Malformed(String),
    #[error("no reading matches {0:?}")]
    NotFound(String),
    #[error("{0:?} is ambiguous between {1} readings")]
    Ambiguous(String, usize),
}

impl FromStr for Selector {
    type Err = SelectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || SelectError::Malformed(s.to_owned());
        let (lemma, class) = match s.rsplit_once('@') {
            Some((lemma, class)) => (lemma, Some(class.parse().map_err(|_| malformed())?)),
            None => (s, None),
        };
        if lemma.trim().is_empty() {
            return Err(malformed());
        }
        Ok(Selector {
            lemma: lemma.to_owned(),
            class,
        })
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            Some(class) => write!(f, "{}@{}", self.lemma, class),
            None => f.write_str(&self.lemma),
        }
    }
}
