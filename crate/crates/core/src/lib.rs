//! Lexicon engine for German adverbials.
//!
//! Every adverb reading carries thirteen features: lemma, position class,
//! macro group, rhematic and Vorfeld capability, scope categories,
//! attachment direction, distance placement, gradability, valence,
//! predicative use, negatability and comparability. On top of that data
//! model the crate provides
//!
//! - [`lexicon`]: the entry model, the tab-separated lexicon format and
//!   entry validation,
//! - [`linearization`]: ordering adverbials by position class and checking
//!   Vorfeld, focus and negation constraints,
//! - [`scope`]: degree-particle scope resolution over token sequences,
//! - [`disambiguation`]: filtering homonymous readings with context cues,
//! - [`analytics`]: per-class feature homogeneity summaries and diffs
//!   against a reference table.
//!
//! Batch entry points (`parse_lexicon`, [`analytics::summarize`],
//! [`scope::attach_batch`]) run on rayon when the `parallel` feature is
//! enabled and fall back to sequential iteration otherwise.

pub mod analytics;
pub mod disambiguation;
pub mod exec;
pub mod fixtures;
pub mod lexicon;
pub mod linearization;
pub mod scope;

pub use analytics::{diff_against_reference, parse_reference, summarize, ClassSummary};
pub use disambiguation::{filter_by_context, ContextCue};
pub use exec::Execution;
pub use lexicon::{
    parse_lexicon, serialize_lexicon, validate_entry, Case, Diagnostic, Direction, LexEntry,
    Lexicon, MacroGroup, PositionClass, ScopeCategory, Selector, Severity,
};
pub use linearization::{builtin_negation, check_order, order_angaben, AngabeSeq, OrderViolation};
pub use scope::{attach, can_modify, Attachment, ScopeParse, Token, TokenKind};
