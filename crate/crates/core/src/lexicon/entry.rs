use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// A token in a lexicon cell that does not belong to the expected closed set.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("unknown {what} token {token:?}")]
pub struct UnknownToken {
    pub what: &'static str,
    pub token: String,
}

impl UnknownToken {
    fn new(what: &'static str, token: &str) -> Self {
        UnknownToken {
            what,
            token: token.to_owned(),
        }
    }
}

/// One of the 44 linear-order classes. Lower classes precede higher ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct PositionClass(u8);

impl PositionClass {
    pub const MIN: u8 = 1;
    pub const MAX: u8 = 44;

    /// Class of the negation particle "nicht".
    pub const NEGATION: PositionClass = PositionClass(41);

    /// Classes realized only by prepositional phrases, never by adverbs.
    pub const PP_ONLY: [u8; 3] = [10, 23, 32];

    pub fn new(value: u8) -> Option<Self> {
        (Self::MIN..=Self::MAX)
            .contains(&value)
            .then_some(PositionClass(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_pp_only(self) -> bool {
        Self::PP_ONLY.contains(&self.0)
    }
}

impl fmt::Display for PositionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for PositionClass {
    type Err = UnknownToken;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<u8>()
            .ok()
            .and_then(PositionClass::new)
            .ok_or_else(|| UnknownToken::new("position class", s))
    }
}

/// Generates a closed token enumeration with `FromStr`, `Display` and
/// `as_str`, keeping the lexicon spelling next to each variant.
macro_rules! token_enum {
    ($(#[$meta:meta])* $name:ident, $what:literal { $($variant:ident => $tok:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub enum $name {
            $(#[serde(rename = $tok)] $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $tok),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = UnknownToken;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($tok => Ok($name::$variant),)+
                    _ => Err(UnknownToken::new($what, s)),
                }
            }
        }
    };
}

token_enum! {
    /// Coarse tripartition of adverbials: speaker-oriented, situative,
    /// verb-related.
    MacroGroup, "macro group" {
        Pragm => "pragm",
        Sit => "sit",
        Man => "man",
    }
}

token_enum! {
    /// Categories a degree particle may take as its scope.
    ScopeCategory, "scope category" {
        S => "s",
        Ap => "ap",
        Npp => "npp",
        Cp => "cp",
        Neg => "neg",
        Conj => "conj",
        Man => "man",
        Sit => "sit",
        Pragm => "pragm",
    }
}

token_enum! {
    /// Side on which a degree particle stands relative to what it modifies.
    Direction, "direction" {
        Pre => "pre",
        Post => "post",
        Both => "both",
        None => "-",
    }
}

token_enum! {
    /// Case of an optional adverb complement.
    Case, "valence case" {
        Genitive => "gen",
        Dative => "dat",
        Accusative => "acc",
    }
}

impl MacroGroup {
    /// The scope category under which a particle can target this group.
    pub fn scope_category(self) -> ScopeCategory {
        match self {
            MacroGroup::Pragm => ScopeCategory::Pragm,
            MacroGroup::Sit => ScopeCategory::Sit,
            MacroGroup::Man => ScopeCategory::Man,
        }
    }

    /// Approximate position-class range associated with the group.
    pub fn class_range(self) -> std::ops::RangeInclusive<u8> {
        match self {
            MacroGroup::Pragm => 1..=18,
            MacroGroup::Sit => 19..=41,
            MacroGroup::Man => 42..=44,
        }
    }
}

impl Direction {
    /// True for entries that act as degree particles.
    pub fn attaches(self) -> bool {
        self != Direction::None
    }
}

/// One adverb reading.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LexEntry {
    pub lemma: String,
    /// Mnemonic note distinguishing homonyms, e.g. "nur" for "bloß".
    pub comment: Option<String>,
    pub classes: BTreeSet<PositionClass>,
    pub group: MacroGroup,
    pub rhematic: bool,
    pub vorfeld: bool,
    pub scope: BTreeSet<ScopeCategory>,
    pub direction: Direction,
    pub distance: bool,
    pub gradable: bool,
    pub valence: BTreeSet<Case>,
    pub predicative: bool,
    pub negatable: bool,
    pub comparable: bool,
}

impl LexEntry {
    /// A reading with sentence scope, no attachment and every boolean
    /// feature negative.
    pub fn new(
        lemma: impl Into<String>,
        group: MacroGroup,
        classes: impl IntoIterator<Item = PositionClass>,
    ) -> Self {
        LexEntry {
            lemma: lemma.into(),
            comment: None,
            classes: classes.into_iter().collect(),
            group,
            rhematic: false,
            vorfeld: false,
            scope: BTreeSet::from([ScopeCategory::S]),
            direction: Direction::None,
            distance: false,
            gradable: false,
            valence: BTreeSet::new(),
            predicative: false,
            negatable: false,
            comparable: false,
        }
    }

    /// Lowest member class; the sort key used when no neighbor context exists.
    pub fn min_class(&self) -> Option<PositionClass> {
        self.classes.iter().next().copied()
    }

    pub fn has_class(&self, class: PositionClass) -> bool {
        self.classes.contains(&class)
    }

    pub fn is_negation(&self) -> bool {
        self.has_class(PositionClass::NEGATION)
    }

    pub fn is_particle(&self) -> bool {
        self.direction.attaches()
    }

    /// Classes joined with "/" as in the lexicon file, e.g. "26/40".
    pub fn class_label(&self) -> String {
        join(self.classes.iter(), "/")
    }

    /// "lemma@class" selector naming this reading.
    pub fn selector(&self) -> String {
        format!("{}@{}", self.lemma, self.class_label())
    }
}

pub(crate) fn join<T: fmt::Display>(items: impl Iterator<Item = T>, sep: &str) -> String {
    items
        .map(|item| item.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
