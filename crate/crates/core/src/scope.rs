//! Degree-particle scope resolution.
//!
//! A particle (an entry with an attachment direction) modifies a target when
//! two conditions hold: the target is gradable, and the target's category is
//! one of the particle's scope values. Sentence scope `s` never produces an
//! attachment; it only marks the particle as usable at sentence level.
//!
//! Candidate targets for a particle are ranked: the adjacent token on the
//! preferred side (`pre` looks right, `post` looks left, `both` tries right
//! then left), then, for particles allowing distance placement, non-adjacent
//! tokens to the left nearest first and finally to the right nearest first.
//! Each particle binds at most one target and each target is bound at most
//! once. [`attach`] returns the binding with the most attached particles;
//! among those, particles earlier in the clause get their better-ranked
//! candidate.

use serde::Serialize;

use crate::exec::{self, Execution};
use crate::lexicon::{Direction, LexEntry, ScopeCategory};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Angabe(LexEntry),
    Np,
    Pp,
    Ap,
    Cp,
    Conj,
    Neg,
    Verb,
    Other,
}

/// A clause element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
    pub gradable_override: Option<bool>,
}

impl Token {
    pub fn new(surface: impl Into<String>, kind: TokenKind) -> Self {
        Token {
            surface: surface.into(),
            kind,
            gradable_override: None,
        }
    }

    pub fn angabe(surface: impl Into<String>, entry: LexEntry) -> Self {
        Token::new(surface, TokenKind::Angabe(entry))
    }

    pub fn with_gradable(mut self, gradable: bool) -> Self {
        self.gradable_override = Some(gradable);
        self
    }

    pub fn entry(&self) -> Option<&LexEntry> {
        match &self.kind {
            TokenKind::Angabe(entry) => Some(entry),
            _ => None,
        }
    }

    /// The entry, if this token is an attaching degree particle.
    pub fn particle(&self) -> Option<&LexEntry> {
        self.entry().filter(|entry| entry.is_particle())
    }

    /// Category under which a particle can target this token. Verbs and
    /// other material are never targets.
    pub fn category(&self) -> Option<ScopeCategory> {
        match &self.kind {
            TokenKind::Angabe(entry) => Some(entry.group.scope_category()),
            TokenKind::Np | TokenKind::Pp => Some(ScopeCategory::Npp),
            TokenKind::Ap => Some(ScopeCategory::Ap),
            TokenKind::Cp => Some(ScopeCategory::Cp),
            TokenKind::Conj => Some(ScopeCategory::Conj),
            TokenKind::Neg => Some(ScopeCategory::Neg),
            TokenKind::Verb | TokenKind::Other => None,
        }
    }

    /// Adverbials carry their own gradability; phrase categories are
    /// gradable unless overridden.
    pub fn gradable(&self) -> bool {
        self.gradable_override.unwrap_or(match &self.kind {
            TokenKind::Angabe(entry) => entry.gradable,
            TokenKind::Verb | TokenKind::Other => false,
            _ => true,
        })
    }
}

/// Both rule conditions: the target is gradable and its category is in the
/// particle's scope set (never `s`).
pub fn can_modify(
    particle: &LexEntry,
    target_category: ScopeCategory,
    target_gradable: bool,
) -> bool {
    target_gradable
        && target_category != ScopeCategory::S
        && particle.scope.contains(&target_category)
}

/// Whether `particle` and `target` can form one constituent, which may then
/// stand alone before the finite verb.
pub fn vorfeld_constituent(particle: &LexEntry, target: &Token) -> bool {
    particle.is_particle() && eligible(particle, target)
}

fn eligible(particle: &LexEntry, target: &Token) -> bool {
    target.particle().is_none()
        && target
            .category()
            .is_some_and(|category| can_modify(particle, category, target.gradable()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Particle precedes its target.
    Pre,
    /// Particle follows its target.
    Post,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Attachment {
    pub particle_index: usize,
    pub target_index: usize,
    pub direction_used: Side,
    pub distant: bool,
}

impl Attachment {
    fn new(particle_index: usize, target_index: usize) -> Self {
        Attachment {
            particle_index,
            target_index,
            direction_used: if particle_index < target_index {
                Side::Pre
            } else {
                Side::Post
            },
            distant: particle_index.abs_diff(target_index) > 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ScopeParse {
    /// Sorted by particle position.
    pub attachments: Vec<Attachment>,
    /// Positions that are neither a bound particle nor a bound target.
    pub free: Vec<usize>,
}

/// Ranked target positions for the particle at `index`.
pub fn candidates(tokens: &[Token], index: usize) -> Vec<usize> {
    let Some(particle) = tokens.get(index).and_then(Token::particle) else {
        return Vec::new();
    };
    let left = index.checked_sub(1);
    let right = Some(index + 1).filter(|&r| r < tokens.len());
    let adjacent: Vec<usize> = match particle.direction {
        Direction::Pre => right.into_iter().collect(),
        Direction::Post => left.into_iter().collect(),
        Direction::Both => right.into_iter().chain(left).collect(),
        Direction::None => Vec::new(),
    };
    let mut ranked = adjacent;
    if particle.distance {
        ranked.extend((0..index.saturating_sub(1)).rev());
        ranked.extend(index + 2..tokens.len());
    }
    ranked.retain(|&t| eligible(particle, &tokens[t]));
    ranked
}

/// Resolves particle scope over a clause.
pub fn attach(tokens: &[Token]) -> ScopeParse {
    let particles: Vec<usize> = (0..tokens.len())
        .filter(|&i| tokens[i].particle().is_some())
        .collect();
    let ranked: Vec<Vec<usize>> = particles.iter().map(|&p| candidates(tokens, p)).collect();

    let mut taken = vec![false; tokens.len()];
    let best = max_matching(&ranked, &taken);
    let mut bound = 0;
    let mut attachments = Vec::new();

    for (k, options) in ranked.iter().enumerate() {
        let rest = &ranked[k + 1..];
        for &target in options {
            if taken[target] {
                continue;
            }
            taken[target] = true;
            if bound + 1 + max_matching(rest, &taken) == best {
                bound += 1;
                attachments.push(Attachment::new(particles[k], target));
                break;
            }
            taken[target] = false;
        }
    }

    let mut involved = vec![false; tokens.len()];
    for a in &attachments {
        involved[a.particle_index] = true;
        involved[a.target_index] = true;
    }
    let free = (0..tokens.len()).filter(|&i| !involved[i]).collect();
    ScopeParse { attachments, free }
}

/// [`attach`] over independent clauses.
pub fn attach_batch(clauses: &[Vec<Token>]) -> Vec<ScopeParse> {
    attach_batch_with(clauses, Execution::default())
}

pub fn attach_batch_with(clauses: &[Vec<Token>], mode: Execution) -> Vec<ScopeParse> {
    exec::map(mode, clauses, |tokens| attach(tokens))
}

/// Size of a maximum particle-target matching over the targets not yet
/// `taken` (augmenting paths).
fn max_matching(ranked: &[Vec<usize>], taken: &[bool]) -> usize {
    fn augment(
        p: usize,
        ranked: &[Vec<usize>],
        taken: &[bool],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &t in &ranked[p] {
            if taken[t] || seen[t] {
                continue;
            }
            seen[t] = true;
            if owner[t].is_none_or(|q| augment(q, ranked, taken, owner, seen)) {
                owner[t] = Some(p);
                return true;
            }
        }
        false
    }

    let mut owner = vec![None; taken.len()];
    (0..ranked.len())
        .filter(|&p| {
            let mut seen = vec![false; taken.len()];
            augment(p, ranked, taken, &mut owner, &mut seen)
        })
        .count()
}
