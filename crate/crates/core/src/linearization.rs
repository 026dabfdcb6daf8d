//! Ordering of adverbials by position class, plus the Vorfeld, focus and
//! negation constraints on a given order.

use serde::Serialize;
use thiserror::Error;

use crate::lexicon::{LexEntry, MacroGroup, PositionClass};

/// Sorts adverbials by their lowest position class. The sort is stable, so
/// readings sharing a key keep their input order.
pub fn order_angaben<'a>(items: &[&'a LexEntry]) -> Vec<&'a LexEntry> {
    let mut sorted = items.to_vec();
    sorted.sort_by_key(|entry| entry.min_class());
    sorted
}

/// True if `first` may precede `second`: some pair of member classes is
/// non-decreasing.
pub fn may_precede(first: &LexEntry, second: &LexEntry) -> bool {
    match (first.min_class(), second.classes.iter().next_back()) {
        (Some(low), Some(&high)) => low <= high,
        _ => true,
    }
}

pub fn check_vorfeld(entry: &LexEntry) -> bool {
    entry.vorfeld
}

/// Whether the entry can in principle carry the sentence focus.
pub fn check_focus(entry: &LexEntry) -> bool {
    entry.rhematic
}

/// The negation particle "nicht".
pub fn builtin_negation() -> LexEntry {
    let mut entry = LexEntry::new("nicht", MacroGroup::Sit, [PositionClass::NEGATION]);
    entry.vorfeld = true;
    entry
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeqItem<'a> {
    pub entry: &'a LexEntry,
    pub focused: bool,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("only one item can carry the sentence focus (items {0} and {1} are focused)")]
    MultipleFoci(usize, usize),
}

/// A sequence of adverbials as they occur in a clause, with at most one
/// focused item. When `vorfeld` is set, the first item stands before the
/// finite verb and takes no part in the Mittelfeld ordering checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngabeSeq<'a> {
    items: Vec<SeqItem<'a>>,
    vorfeld: bool,
}

impl<'a> AngabeSeq<'a> {
    pub fn new(items: Vec<SeqItem<'a>>) -> Result<Self, SeqError> {
        let mut focused = items.iter().enumerate().filter(|(_, item)| item.focused);
        if let (Some((i, _)), Some((j, _))) = (focused.next(), focused.next()) {
            return Err(SeqError::MultipleFoci(i, j));
        }
        Ok(AngabeSeq {
            items,
            vorfeld: false,
        })
    }

    /// Sequence without focus marking.
    pub fn plain(entries: &[&'a LexEntry]) -> Self {
        AngabeSeq {
            items: entries
                .iter()
                .map(|&entry| SeqItem {
                    entry,
                    focused: false,
                })
                .collect(),
            vorfeld: false,
        }
    }

    /// Same sequence with exactly item `index` focused.
    pub fn focused(entries: &[&'a LexEntry], index: usize) -> Self {
        let mut seq = Self::plain(entries);
        if let Some(item) = seq.items.get_mut(index) {
            item.focused = true;
        }
        seq
    }

    pub fn with_vorfeld(mut self, vorfeld: bool) -> Self {
        self.vorfeld = vorfeld;
        self
    }

    pub fn items(&self) -> &[SeqItem<'a>] {
        &self.items
    }

    pub fn has_vorfeld(&self) -> bool {
        self.vorfeld
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    ClassOrder,
    NegationFollow,
    FocusOnNonrhematic,
    VorfeldIncapable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Positions {
    Single(usize),
    Pair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrderViolation {
    pub kind: ViolationKind,
    pub positions: Positions,
    pub detail: String,
}

/// Lists every constraint the sequence breaks.
///
/// Reported in this order: a Vorfeld item that cannot stand there; every
/// inverted pair `i < j` whose classes admit no non-decreasing choice;
/// every item after the first negation particle that is not negatable; a
/// focused item that cannot carry focus.
pub fn check_order(seq: &AngabeSeq<'_>) -> Vec<OrderViolation> {
    let items = &seq.items;
    let mut out = Vec::new();
    let start = usize::from(seq.vorfeld).min(items.len());

    if seq.vorfeld {
        if let Some(first) = items.first().filter(|item| !check_vorfeld(item.entry)) {
            out.push(OrderViolation {
                kind: ViolationKind::VorfeldIncapable,
                positions: Positions::Single(0),
                detail: format!("{} cannot precede the finite verb", first.entry.selector()),
            });
        }
    }

    for i in start..items.len() {
        for j in i + 1..items.len() {
            let (a, b) = (items[i].entry, items[j].entry);
            if !may_precede(a, b) {
                out.push(OrderViolation {
                    kind: ViolationKind::ClassOrder,
                    positions: Positions::Pair(i, j),
                    detail: format!("{} must follow {}", a.selector(), b.selector()),
                });
            }
        }
    }

    if let Some(neg) = (start..items.len()).find(|&i| items[i].entry.is_negation()) {
        for (j, item) in items.iter().enumerate().skip(neg + 1) {
            if !item.entry.negatable {
                out.push(OrderViolation {
                    kind: ViolationKind::NegationFollow,
                    positions: Positions::Pair(neg, j),
                    detail: format!(
                        "{} cannot follow {}",
                        item.entry.selector(),
                        items[neg].entry.selector()
                    ),
                });
            }
        }
    }

    for (i, item) in items.iter().enumerate() {
        if item.focused && !check_focus(item.entry) {
            out.push(OrderViolation {
                kind: ViolationKind::FocusOnNonrhematic,
                positions: Positions::Single(i),
                detail: format!("{} cannot carry the sentence focus", item.entry.selector()),
            });
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lexicon::Lexicon;

    fn pick<'a>(lexicon: &'a Lexicon, lemma: &str, class: u8) -> &'a LexEntry {
        lexicon
            .lookup(lemma)
            .into_iter()
            .find(|e| e.has_class(PositionClass::new(class).unwrap()))
            .unwrap()
    }

    fn kinds(violations: &[OrderViolation]) -> Vec<ViolationKind> {
        violations.iter().map(|v| v.kind).collect()
    }

    fn synthetic(class: u8) -> LexEntry {
        LexEntry::new(
            format!("c{class}"),
            MacroGroup::Sit,
            PositionClass::new(class),
        )
    }

    #[test]
    fn orders_by_class() {
        let lex = fixtures::table1();
        let (bereits, gestern) = (pick(&lex, "bereits", 39), pick(&lex, "gestern", 26));
        assert_eq!(order_angaben(&[bereits, gestern]), [gestern, bereits]);
        assert!(order_angaben(&[]).is_empty());
    }

    #[test]
    fn negation_sorts_between() {
        let lex = fixtures::extended();
        let nicht = builtin_negation();
        let gerade = pick(&lex, "gerade", 33);
        assert_eq!(order_angaben(&[&nicht, gerade]), [gerade, &nicht]);
    }

    #[test]
    fn temporal_subgroups_follow_numeric_order() {
        let (c33, c36, c37, c40) = (synthetic(33), synthetic(36), synthetic(37), synthetic(40));
        assert_eq!(order_angaben(&[&c36, &c33]), [&c33, &c36]);
        assert_eq!(order_angaben(&[&c37, &c36]), [&c36, &c37]);
        assert_eq!(order_angaben(&[&c40, &c37]), [&c37, &c40]);
        assert_eq!(
            order_angaben(&[&c40, &c37, &c36, &c33]),
            [&c33, &c36, &c37, &c40]
        );
    }

    #[test]
    fn dual_class_accepts_either_slot() {
        let mut dann = synthetic(26);
        dann.classes.insert(PositionClass::new(40).unwrap());
        let (c30, c45) = (synthetic(30), synthetic(43));
        assert!(check_order(&AngabeSeq::plain(&[&c30, &dann])).is_empty());
        assert!(check_order(&AngabeSeq::plain(&[&dann, &c30])).is_empty());
        assert_eq!(
            kinds(&check_order(&AngabeSeq::plain(&[&c45, &dann]))),
            [ViolationKind::ClassOrder]
        );
    }

    #[test]
    fn negation_examples() {
        let lex = fixtures::extended();
        let nicht = builtin_negation();
        let (g33, g43) = (pick(&lex, "gerade", 33), pick(&lex, "gerade", 43));

        let starred = check_order(&AngabeSeq::plain(&[&nicht, g33]));
        assert_eq!(
            kinds(&starred),
            [ViolationKind::ClassOrder, ViolationKind::NegationFollow]
        );
        assert_eq!(starred[1].positions, Positions::Pair(0, 1));

        assert!(check_order(&AngabeSeq::plain(&[g33, &nicht])).is_empty());
        assert!(check_order(&AngabeSeq::plain(&[&nicht, g43])).is_empty());
        assert_eq!(
            kinds(&check_order(&AngabeSeq::plain(&[g43, &nicht]))),
            [ViolationKind::ClassOrder]
        );
    }

    #[test]
    fn focus_gating() {
        let lex = fixtures::table1();
        let gestern = pick(&lex, "gestern", 26);
        let bereits = pick(&lex, "bereits", 39);
        assert!(check_order(&AngabeSeq::focused(&[gestern], 0)).is_empty());
        let found = check_order(&AngabeSeq::focused(&[bereits], 0));
        assert_eq!(kinds(&found), [ViolationKind::FocusOnNonrhematic]);
        assert!(check_focus(pick(&lex, "oft", 37)));
    }

    #[test]
    fn vorfeld_examples() {
        let lex = fixtures::table1();
        let nicht = builtin_negation();
        let (e18, e43) = (pick(&lex, "einfach", 18), pick(&lex, "einfach", 43));
        assert!(check_vorfeld(e43));
        assert!(!check_vorfeld(e18));
        assert!(!check_vorfeld(pick(&lex, "ja", 1)));

        let fronted = AngabeSeq::plain(&[e43, &nicht]).with_vorfeld(true);
        assert!(check_order(&fronted).is_empty());
        let fronted = AngabeSeq::plain(&[e18, &nicht]).with_vorfeld(true);
        assert_eq!(
            kinds(&check_order(&fronted)),
            [ViolationKind::VorfeldIncapable]
        );
        assert!(check_order(&AngabeSeq::plain(&[e18, &nicht])).is_empty());
    }

    #[test]
    fn single_focus() {
        let lex = fixtures::table1();
        let gestern = pick(&lex, "gestern", 26);
        let item = SeqItem {
            entry: gestern,
            focused: true,
        };
        assert_eq!(
            AngabeSeq::new(vec![item, item]),
            Err(SeqError::MultipleFoci(0, 1))
        );
        assert!(AngabeSeq::new(vec![item]).is_ok());
    }

    #[test]
    fn builtin_negation_shape() {
        let nicht = builtin_negation();
        assert_eq!(nicht.lemma, "nicht");
        assert_eq!(nicht.class_label(), "41");
        assert_eq!(nicht.group, MacroGroup::Sit);
        assert!(nicht.vorfeld);
        assert!(!nicht.rhematic && !nicht.negatable && !nicht.gradable);
        assert!(crate::validate_entry(&nicht).is_empty());
    }
}
