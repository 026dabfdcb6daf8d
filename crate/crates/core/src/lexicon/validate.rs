use super::{Diagnostic, LexEntry, Locus, ScopeCategory};
use crate::exec::{self, Execution};

/// Checks one entry against the schema constraints.
///
/// Hard constraints produce errors: non-empty lemma, class and scope sets,
/// no PP-only class, distance placement only for attaching particles, and
/// no attachment direction for pure sentence-scope entries. A class lying
/// outside the approximate range of the entry's macro group
/// (pragm 1-18, sit 19-41, man 42-44) is only a warning.
pub fn validate_entry(entry: &LexEntry) -> Vec<Diagnostic> {
    let locus = || Locus::Lemma(entry.lemma.clone());
    let mut out = Vec::new();

    if entry.lemma.trim().is_empty() {
        out.push(Diagnostic::error("empty-lemma", locus(), "lemma is empty"));
    }
    if entry.classes.is_empty() {
        out.push(Diagnostic::error(
            "no-class",
            locus(),
            "entry has no position class",
        ));
    }
    if entry.scope.is_empty() {
        out.push(Diagnostic::error("no-scope", locus(), "scope set is empty"));
    }

    for &class in &entry.classes {
        if class.is_pp_only() {
            out.push(Diagnostic::error(
                "pp-only-class",
                locus(),
                format!("class {class} is realized only by prepositional phrases"),
            ));
        } else if !entry.group.class_range().contains(&class.value()) {
            let range = entry.group.class_range();
            out.push(Diagnostic::warning(
                "group-class-mismatch",
                locus(),
                format!(
                    "class {class} lies outside the usual {} range {}-{}",
                    entry.group,
                    range.start(),
                    range.end()
                ),
            ));
        }
    }

    if entry.distance && !entry.direction.attaches() {
        out.push(Diagnostic::error(
            "distance-without-direction",
            locus(),
            "distance placement requires an attachment direction",
        ));
    }

    let sentence_only = entry.scope.len() == 1 && entry.scope.contains(&ScopeCategory::S);
    if sentence_only && entry.direction.attaches() {
        out.push(Diagnostic::error(
            "direction-without-scope",
            locus(),
            format!("sentence-scope entry cannot attach ({})", entry.direction),
        ));
    }

    out
}

/// [`validate_entry`] over many entries, concatenated in input order.
pub fn validate_entries(entries: &[LexEntry], mode: Execution) -> Vec<Diagnostic> {
    exec::map(mode, entries, validate_entry)
        .into_iter()
        .flatten()
        .collect()
}
