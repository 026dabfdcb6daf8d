//! Tab-separated lexicon file format.
//!
//! ```text
//! # comment
//! lemma	class	group	rhema	vorfeld	scope	dir	dist	grad	valence	pred	neg	comp
//! bloß (nur)	38	sit	-	+	s,man,sit,ap,npp,cp	pre	+	-	-	-	+	-
//! ```
//!
//! Booleans are `+`/`-`, classes are joined with `/`, scope and valence with
//! `,`. An empty valence and a missing direction are written `-`; an empty
//! or `-` scope cell means sentence scope. A parenthesized suffix of the
//! lemma cell is the entry comment.

#![allow(clippy::tabs_in_doc_comments)]

use std::collections::BTreeSet;
use std::str::FromStr;

use super::entry::join;
use super::{
    duplicate, validate_entry, Diagnostic, LexEntry, Lexicon, Locus, ScopeCategory, UnknownToken,
};
use crate::exec::{self, Execution};

pub const HEADER: &str =
    "lemma\tclass\tgroup\trhema\tvorfeld\tscope\tdir\tdist\tgrad\tvalence\tpred\tneg\tcomp";

const COLUMNS: usize = 13;

/// Parses lexicon text. Never fails: malformed rows are skipped with an
/// error diagnostic naming their line, and accepted rows keep file order.
pub fn parse_lexicon(text: &str) -> (Lexicon, Vec<Diagnostic>) {
    parse_lexicon_with(text, Execution::default())
}

pub fn parse_lexicon_with(text: &str, mode: Execution) -> (Lexicon, Vec<Diagnostic>) {
    let mut diagnostics = Vec::new();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| !line.trim().is_empty() && !line.starts_with('#'));

    match lines.next() {
        None => return (Lexicon::new(), diagnostics),
        Some((_, line)) if line.trim_end() == HEADER => {}
        Some((n, _)) => diagnostics.push(Diagnostic::error(
            "header",
            Locus::Line(n),
            "expected the column header line",
        )),
    }

    let rows: Vec<(usize, &str)> = lines.collect();
    let parsed = exec::map(mode, &rows, |&(n, line)| {
        let locus = Locus::Line(n);
        match parse_row(line) {
            Ok(entry) => {
                let found: Vec<Diagnostic> = validate_entry(&entry)
                    .into_iter()
                    .map(|d| Diagnostic {
                        locus: locus.clone(),
                        ..d
                    })
                    .collect();
                (
                    (!found.iter().any(Diagnostic::is_error)).then_some(entry),
                    found,
                )
            }
            Err((code, message)) => (None, vec![Diagnostic::error(code, locus, message)]),
        }
    });

    let mut lexicon = Lexicon::new();
    for ((n, _), (entry, found)) in rows.iter().zip(parsed) {
        diagnostics.extend(found);
        if let Some(entry) = entry {
            if let Err(entry) = lexicon.insert(entry) {
                diagnostics.push(duplicate(&entry, Locus::Line(*n)));
            }
        }
    }
    (lexicon, diagnostics)
}

type RowError = (&'static str, String);

fn parse_row(line: &str) -> Result<LexEntry, RowError> {
    let line = line.strip_suffix('\r').unwrap_or(line);
    let cells: Vec<&str> = line.split('\t').map(str::trim).collect();
    if cells.len() != COLUMNS {
        return Err((
            "column-count",
            format!(
                "expected {COLUMNS} tab-separated fields, found {}",
                cells.len()
            ),
        ));
    }

    let (lemma, comment) = parse_lemma(cells[0])?;
    let classes = cells[1]
        .split('/')
        .map(str::parse)
        .collect::<Result<BTreeSet<_>, _>>()
        .map_err(unknown)?;
    let scope = match cells[5] {
        "" | "-" => BTreeSet::from([ScopeCategory::S]),
        cell => parse_set(cell)?,
    };
    let valence = match cells[9] {
        "-" => BTreeSet::new(),
        cell => parse_set(cell)?,
    };

    Ok(LexEntry {
        lemma,
        comment,
        classes,
        group: cells[2].parse().map_err(unknown)?,
        rhematic: parse_bool(cells[3])?,
        vorfeld: parse_bool(cells[4])?,
        scope,
        direction: cells[6].parse().map_err(unknown)?,
        distance: parse_bool(cells[7])?,
        gradable: parse_bool(cells[8])?,
        valence,
        predicative: parse_bool(cells[10])?,
        negatable: parse_bool(cells[11])?,
        comparable: parse_bool(cells[12])?,
    })
}

fn unknown(err: UnknownToken) -> RowError {
    let code = if err.what == "position class" {
        "class-range"
    } else {
        "unknown-token"
    };
    (code, err.to_string())
}

fn parse_lemma(cell: &str) -> Result<(String, Option<String>), RowError> {
    let (lemma, comment) = match cell.split_once('(') {
        Some((lemma, rest)) => match rest.strip_suffix(')') {
            Some(comment) => (lemma.trim_end(), Some(comment.to_owned())),
            None => return Err(("lemma-syntax", format!("unclosed comment in {cell:?}"))),
        },
        None => (cell, None),
    };
    if lemma.is_empty() {
        return Err(("empty-lemma", "lemma is empty".to_owned()));
    }
    Ok((lemma.to_owned(), comment))
}

fn parse_bool(cell: &str) -> Result<bool, RowError> {
    match cell {
        "+" => Ok(true),
        "-" => Ok(false),
        _ => Err(("unknown-token", format!("expected + or -, found {cell:?}"))),
    }
}

fn parse_set<T: FromStr<Err = UnknownToken> + Ord>(cell: &str) -> Result<BTreeSet<T>, RowError> {
    cell.split(',')
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(unknown)
}

/// Writes the header and one row per entry, in lexicon order.
pub fn serialize_lexicon(lexicon: &Lexicon) -> String {
    let mut out = String::with_capacity(HEADER.len() + 1 + 64 * lexicon.len());
    out.push_str(HEADER);
    out.push('\n');
    for entry in lexicon.entries() {
        out.push_str(&format_row(entry));
        out.push('\n');
    }
    out
}

fn format_row(entry: &LexEntry) -> String {
    let bool_cell = |b: bool| if b { "+" } else { "-" };
    let lemma = match &entry.comment {
        Some(comment) => format!("{} ({comment})", entry.lemma),
        None => entry.lemma.clone(),
    };
    let valence = if entry.valence.is_empty() {
        "-".to_owned()
    } else {
        join(entry.valence.iter(), ",")
    };
    [
        lemma,
        entry.class_label(),
        entry.group.to_string(),
        bool_cell(entry.rhematic).to_owned(),
        bool_cell(entry.vorfeld).to_owned(),
        join(entry.scope.iter(), ","),
        entry.direction.to_string(),
        bool_cell(entry.distance).to_owned(),
        bool_cell(entry.gradable).to_owned(),
        valence,
        bool_cell(entry.predicative).to_owned(),
        bool_cell(entry.negatable).to_owned(),
        bool_cell(entry.comparable).to_owned(),
    ]
    .join("\t")
}
