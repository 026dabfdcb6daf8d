//! Homonym filtering by syntactic context.

use serde::Serialize;

use crate::lexicon::{Case, LexEntry};

/// An observation about the context a lemma occurs in. Each cue keeps only
/// the readings compatible with it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContextCue {
    /// Stands before the finite verb.
    InVorfeld,
    /// Used as a predicate ("Tina war so").
    PredicativePosition,
    /// Follows the negation particle.
    FollowsNegation,
    /// Carries the sentence focus.
    CarriesFocus,
    /// Governs a complement in this case.
    ComplementCase(Case),
    /// Modified by this degree particle.
    GraduatedBy(LexEntry),
}

impl ContextCue {
    pub fn admits(&self, reading: &LexEntry) -> bool {
        match self {
            ContextCue::InVorfeld => reading.vorfeld,
            ContextCue::PredicativePosition => reading.predicative,
            ContextCue::FollowsNegation => reading.negatable,
            ContextCue::CarriesFocus => reading.rhematic,
            ContextCue::ComplementCase(case) => reading.valence.contains(case),
            ContextCue::GraduatedBy(particle) => {
                reading.gradable && particle.scope.contains(&reading.group.scope_category())
            }
        }
    }
}

/// Readings that survive every cue, in input order. An empty result means
/// no reading fits the context.
pub fn filter_by_context<'a>(readings: &[&'a LexEntry], cues: &[ContextCue]) -> Vec<&'a LexEntry> {
    readings
        .iter()
        .copied()
        .filter(|reading| cues.iter().all(|cue| cue.admits(reading)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn classes(readings: &[&LexEntry]) -> Vec<String> {
        readings.iter().map(|r| r.class_label()).collect()
    }

    #[test]
    fn vorfeld_picks_manner_einfach() {
        let lex = fixtures::table1();
        let kept = filter_by_context(&lex.lookup("einfach"), &[ContextCue::InVorfeld]);
        assert_eq!(classes(&kept), ["43"]);
    }

    #[test]
    fn predicative_picks_so43() {
        let lex = fixtures::extended();
        let kept = filter_by_context(&lex.lookup("so"), &[ContextCue::PredicativePosition]);
        assert_eq!(classes(&kept), ["43"]);
    }

    #[test]
    fn negation_picks_gerade43() {
        let lex = fixtures::extended();
        let kept = filter_by_context(&lex.lookup("gerade"), &[ContextCue::FollowsNegation]);
        assert_eq!(classes(&kept), ["43"]);
    }

    #[test]
    fn genitive_keeps_abseits() {
        let lex = fixtures::table1();
        let cue = ContextCue::ComplementCase(Case::Genitive);
        assert_eq!(
            classes(&filter_by_context(&lex.lookup("abseits"), &[cue])),
            ["27"]
        );
        let cue = ContextCue::ComplementCase(Case::Dative);
        assert!(filter_by_context(&lex.lookup("abseits"), &[cue]).is_empty());
    }

    #[test]
    fn graduated_by_particle() {
        let lex = fixtures::table1();
        let sehr = lex.lookup("sehr")[0].clone();
        let kept = filter_by_context(&lex.lookup("einfach"), &[ContextCue::GraduatedBy(sehr)]);
        assert_eq!(classes(&kept), ["18", "43"]);
        let rund = lex.lookup("rund")[0].clone();
        assert!(
            filter_by_context(&lex.lookup("einfach"), &[ContextCue::GraduatedBy(rund)]).is_empty()
        );
    }

    #[test]
    fn focus_and_empty_cues() {
        let lex = fixtures::table1();
        let einfach = lex.lookup("einfach");
        assert_eq!(filter_by_context(&einfach, &[]), einfach);
        assert_eq!(
            classes(&filter_by_context(&einfach, &[ContextCue::CarriesFocus])),
            ["43"]
        );
    }
}
