//! JSON request payloads and their resolution against a lexicon.

use adverbia::lexicon::{Case, LexEntry, Lexicon, SelectError, Selector};
use adverbia::linearization::SeqItem;
use adverbia::{builtin_negation, AngabeSeq, ContextCue, Token, TokenKind};
use serde::Deserialize;

use crate::CliError;

/// Resolves a selector, falling back to the built-in negation particle for
/// "nicht" when the lexicon has no such reading.
pub fn resolve(lexicon: &Lexicon, selector: &str) -> Result<LexEntry, CliError> {
    let parsed: Selector = selector.parse().map_err(select_error)?;
    match lexicon.resolve(&parsed) {
        Ok(entry) => Ok(entry.clone()),
        Err(SelectError::NotFound(_)) if is_builtin_negation(&parsed) => Ok(builtin_negation()),
        Err(err) => Err(select_error(err)),
    }
}

fn is_builtin_negation(selector: &Selector) -> bool {
    let nicht = builtin_negation();
    selector.lemma == nicht.lemma && selector.class.is_none_or(|c| nicht.has_class(c))
}

fn select_error(err: SelectError) -> CliError {
    CliError::Payload(err.to_string())
}

pub fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Payload(e.to_string()))
}

#[derive(Deserialize)]
#[serde(untagged)]
pub enum CheckOrderRequest {
    Plain(Vec<String>),
    Full {
        items: Vec<CheckItem>,
        #[serde(default)]
        vorfeld: bool,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
pub enum CheckItem {
    Plain(String),
    Marked {
        angabe: String,
        #[serde(default)]
        focused: bool,
    },
}

/// Owned readings plus flags, from which an [`AngabeSeq`] is borrowed.
pub struct ResolvedSeq {
    entries: Vec<LexEntry>,
    focused: Vec<bool>,
    vorfeld: bool,
}

impl ResolvedSeq {
    pub fn new(lexicon: &Lexicon, request: CheckOrderRequest) -> Result<Self, CliError> {
        let (items, vorfeld) = match request {
            CheckOrderRequest::Plain(selectors) => {
                (selectors.into_iter().map(CheckItem::Plain).collect(), false)
            }
            CheckOrderRequest::Full { items, vorfeld } => (items, vorfeld),
        };
        let mut entries = Vec::with_capacity(items.len());
        let mut focused = Vec::with_capacity(items.len());
        for item in items {
            let (selector, focus) = match item {
                CheckItem::Plain(selector) => (selector, false),
                CheckItem::Marked { angabe, focused } => (angabe, focused),
            };
            entries.push(resolve(lexicon, &selector)?);
            focused.push(focus);
        }
        Ok(ResolvedSeq {
            entries,
            focused,
            vorfeld,
        })
    }

    pub fn seq(&self) -> Result<AngabeSeq<'_>, CliError> {
        let items = self
            .entries
            .iter()
            .zip(&self.focused)
            .map(|(entry, &focused)| SeqItem { entry, focused })
            .collect();
        let seq = AngabeSeq::new(items).map_err(|e| CliError::Payload(e.to_string()))?;
        Ok(seq.with_vorfeld(self.vorfeld))
    }
}

#[derive(Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindTag {
    Angabe,
    Np,
    Pp,
    Ap,
    Cp,
    Conj,
    Neg,
    Verb,
    Other,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TokenSpec {
    pub surface: String,
    pub kind: KindTag,
    #[serde(default)]
    pub lemma: Option<String>,
    #[serde(default)]
    pub class: Option<u8>,
    #[serde(default)]
    pub gradable: Option<bool>,
}

impl TokenSpec {
    pub fn resolve(self, lexicon: &Lexicon) -> Result<Token, CliError> {
        let kind = match self.kind {
            KindTag::Angabe => {
                let lemma = self.lemma.as_deref().unwrap_or(&self.surface);
                let selector = match self.class {
                    Some(class) => format!("{lemma}@{class}"),
                    None => lemma.to_owned(),
                };
                TokenKind::Angabe(resolve(lexicon, &selector)?)
            }
            KindTag::Np => TokenKind::Np,
            KindTag::Pp => TokenKind::Pp,
            KindTag::Ap => TokenKind::Ap,
            KindTag::Cp => TokenKind::Cp,
            KindTag::Conj => TokenKind::Conj,
            KindTag::Neg => TokenKind::Neg,
            KindTag::Verb => TokenKind::Verb,
            KindTag::Other => TokenKind::Other,
        };
        Ok(Token {
            surface: self.surface,
            kind,
            gradable_override: self.gradable,
        })
    }
}

/// Parses a `--cue` value: `in-vorfeld`, `predicative`, `follows-negation`,
/// `focus`, `case=gen|dat|acc` or `graduated-by=SELECTOR`.
pub fn parse_cue(lexicon: &Lexicon, text: &str) -> Result<ContextCue, CliError> {
    let bad = || CliError::Payload(format!("unknown cue {text:?}"));
    Ok(match text.split_once('=') {
        None => match text {
            "in-vorfeld" => ContextCue::InVorfeld,
            "predicative" => ContextCue::PredicativePosition,
            "follows-negation" => ContextCue::FollowsNegation,
            "focus" => ContextCue::CarriesFocus,
            _ => return Err(bad()),
        },
        Some(("case", case)) => {
            ContextCue::ComplementCase(case.parse::<Case>().map_err(|_| bad())?)
        }
        Some(("graduated-by", selector)) => ContextCue::GraduatedBy(resolve(lexicon, selector)?),
        Some(_) => return Err(bad()),
    })
}
