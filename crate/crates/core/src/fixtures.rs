//! Bundled lexicon and reference data.

use crate::analytics::{parse_reference, ClassSummary};
use crate::lexicon::{parse_lexicon, Lexicon};

/// The twelve sample entries.
pub const TABLE1_TSV: &str = include_str!("../data/table1.tsv");

/// Homonyms and particles needed by the worked examples; see the file
/// comments for which features are evidenced.
pub const DERIVED_TSV: &str = include_str!("../data/derived.tsv");

/// Per-class feature generalizations over the full coded lexicon.
pub const TABLE2_TSV: &str = include_str!("../data/table2.tsv");

fn parse_clean(text: &str) -> Lexicon {
    let (lexicon, diagnostics) = parse_lexicon(text);
    assert!(diagnostics.is_empty(), "bundled lexicon: {diagnostics:?}");
    lexicon
}

pub fn table1() -> Lexicon {
    parse_clean(TABLE1_TSV)
}

/// Sample entries followed by the derived readings.
pub fn extended() -> Lexicon {
    let entries = table1()
        .entries()
        .iter()
        .chain(parse_clean(DERIVED_TSV).entries())
        .cloned()
        .collect::<Vec<_>>();
    let (lexicon, diagnostics) = Lexicon::from_entries(entries);
    assert!(diagnostics.is_empty(), "bundled lexicon: {diagnostics:?}");
    lexicon
}

pub fn table2_reference() -> Vec<ClassSummary> {
    parse_reference(TABLE2_TSV).expect("bundled reference table")
}
