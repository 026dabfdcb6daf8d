//! Brute-force oracles and shared strategies for the integration tests.
//!
//! The oracles re-derive their answers from the entry features directly and
//! do not call into the ordering or scope code they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use adverbia::lexicon::{
    Case, Direction, LexEntry, Lexicon, MacroGroup, PositionClass, ScopeCategory,
};
use adverbia::scope::{Token, TokenKind};
use adverbia::{builtin_negation, fixtures};
use proptest::prelude::*;

pub fn class(v: u8) -> PositionClass {
    PositionClass::new(v).unwrap()
}

/// Extended fixture readings, the negation particle and one dual-class
/// reading.
pub fn entry_pool() -> Vec<LexEntry> {
    let mut pool = fixtures::extended().entries().to_vec();
    pool.push(builtin_negation());
    let mut dann = LexEntry::new("dann", MacroGroup::Sit, [class(26), class(40)]);
    dann.vorfeld = true;
    pool.push(dann);
    pool
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Among all permutations whose lowest classes never decrease, the one that
/// keeps equal keys in input order, i.e. the lexicographically smallest.
pub fn order_oracle(items: &[&LexEntry]) -> Vec<usize> {
    let key = |e: &LexEntry| e.classes.iter().map(|c| c.value()).min().unwrap();
    permutations(items.len())
        .into_iter()
        .find(|perm| {
            perm.windows(2)
                .all(|w| key(items[w[0]]) <= key(items[w[1]]))
        })
        .expect("some permutation is sorted")
}

fn oracle_category(token: &Token) -> Option<ScopeCategory> {
    Some(match &token.kind {
        TokenKind::Angabe(entry) => match entry.group {
            MacroGroup::Pragm => ScopeCategory::Pragm,
            MacroGroup::Sit => ScopeCategory::Sit,
            MacroGroup::Man => ScopeCategory::Man,
        },
        TokenKind::Np | TokenKind::Pp => ScopeCategory::Npp,
        TokenKind::Ap => ScopeCategory::Ap,
        TokenKind::Cp => ScopeCategory::Cp,
        TokenKind::Conj => ScopeCategory::Conj,
        TokenKind::Neg => ScopeCategory::Neg,
        TokenKind::Verb | TokenKind::Other => return None,
    })
}

fn oracle_particle(token: &Token) -> Option<&LexEntry> {
    match &token.kind {
        TokenKind::Angabe(entry) if entry.direction != Direction::None => Some(entry),
        _ => None,
    }
}

fn oracle_gradable(token: &Token) -> bool {
    match (token.gradable_override, &token.kind) {
        (Some(g), _) => g,
        (None, TokenKind::Angabe(entry)) => entry.gradable,
        (None, TokenKind::Verb | TokenKind::Other) => false,
        (None, _) => true,
    }
}

/// Preference rank of binding particle `p` to target `t`, or `None` if the
/// binding is illegal. Lower is better.
pub fn binding_rank(tokens: &[Token], p: usize, t: usize) -> Option<usize> {
    let particle = oracle_particle(&tokens[p])?;
    let target = &tokens[t];
    if p == t || oracle_particle(target).is_some() {
        return None;
    }
    let category = oracle_category(target)?;
    if !oracle_gradable(target)
        || category == ScopeCategory::S
        || !particle.scope.contains(&category)
    {
        return None;
    }
    let right_ok = matches!(particle.direction, Direction::Pre | Direction::Both);
    let left_ok = matches!(particle.direction, Direction::Post | Direction::Both);
    let n = tokens.len();
    if t == p + 1 && right_ok {
        Some(0)
    } else if t + 1 == p && left_ok {
        Some(1)
    } else if particle.distance && t + 1 < p {
        Some(n + (p - t))
    } else if particle.distance && t > p + 1 {
        Some(3 * n + (t - p))
    } else {
        None
    }
}

/// Exhaustive search over every assignment of particles to legal targets
/// (or none). Keeps conflict-free assignments with the most bound
/// particles, then the lexicographically smallest rank vector in particle
/// order. Returns `(particle, target)` pairs.
pub fn attach_oracle(tokens: &[Token]) -> Vec<(usize, usize)> {
    let particles: Vec<usize> = (0..tokens.len())
        .filter(|&i| oracle_particle(&tokens[i]).is_some())
        .collect();
    let options: Vec<Vec<(usize, Option<usize>)>> = particles
        .iter()
        .map(|&p| {
            let mut opts: Vec<_> = (0..tokens.len())
                .filter_map(|t| binding_rank(tokens, p, t).map(|r| (r, Some(t))))
                .collect();
            opts.push((usize::MAX, None));
            opts
        })
        .collect();

    let mut best: Option<(usize, Vec<usize>, Vec<Option<usize>>)> = None;
    let mut choice = vec![0; particles.len()];
    loop {
        let picked: Vec<(usize, Option<usize>)> = choice
            .iter()
            .enumerate()
            .map(|(k, &c)| options[k][c])
            .collect();
        let targets: Vec<usize> = picked.iter().filter_map(|(_, t)| *t).collect();
        let distinct: BTreeSet<_> = targets.iter().collect();
        if distinct.len() == targets.len() {
            let bound = targets.len();
            let ranks: Vec<usize> = picked.iter().map(|(r, _)| *r).collect();
            let better = match &best {
                None => true,
                Some((b, r, _)) => bound > *b || (bound == *b && ranks < *r),
            };
            if better {
                best = Some((bound, ranks, picked.iter().map(|(_, t)| *t).collect()));
            }
        }
        // Odometer step.
        let mut k = 0;
        loop {
            if k == choice.len() {
                let (_, _, assignment) = best.expect("the empty assignment is always legal");
                return particles
                    .iter()
                    .zip(assignment)
                    .filter_map(|(&p, t)| t.map(|t| (p, t)))
                    .collect();
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Token alphabet for scope tests: fixture adverbials plus phrase tokens.
pub fn token_alphabet() -> Vec<Token> {
    let lexicon = fixtures::extended();
    let mut tokens: Vec<Token> = lexicon
        .entries()
        .iter()
        .map(|e| Token::angabe(e.lemma.clone(), e.clone()))
        .collect();
    tokens.extend([
        Token::new("die Männer", TokenKind::Np),
        Token::new("Vahé", TokenKind::Np).with_gradable(false),
        Token::new("im Garten", TokenKind::Pp),
        Token::new("zehn", TokenKind::Cp),
        Token::new("schön", TokenKind::Ap),
        Token::new("nicht", TokenKind::Neg),
        Token::new("wenn", TokenKind::Conj),
        Token::new("sang", TokenKind::Verb),
        Token::new("ach", TokenKind::Other),
    ]);
    tokens
}

pub fn lookup_one(lexicon: &Lexicon, lemma: &str, class_value: u8) -> LexEntry {
    lexicon
        .lookup(lemma)
        .into_iter()
        .find(|e| e.has_class(class(class_value)))
        .unwrap_or_else(|| panic!("{lemma}@{class_value} missing"))
        .clone()
}

/// Structurally valid entries: no PP-only class, distance only with a
/// direction, and a direction only with a non-sentence scope.
pub fn valid_entry() -> impl Strategy<Value = LexEntry> {
    let adverb_class = (1u8..=44)
        .prop_filter("PP-only", |v| !PositionClass::PP_ONLY.contains(v))
        .prop_map(class);
    (
        "[a-zäöüß]{1,10}",
        proptest::option::of("[a-zA-Zäöü ,.]{0,12}"),
        proptest::collection::btree_set(adverb_class, 1..3),
        proptest::sample::select(MacroGroup::ALL.to_vec()),
        proptest::collection::btree_set(
            proptest::sample::select(ScopeCategory::ALL.to_vec()),
            1..4,
        ),
        proptest::sample::select(Direction::ALL.to_vec()),
        proptest::collection::btree_set(proptest::sample::select(Case::ALL.to_vec()), 0..3),
        proptest::array::uniform8(any::<bool>()),
    )
        .prop_map(
            |(lemma, comment, classes, group, scope, direction, valence, flags)| {
                let mut entry = LexEntry::new(lemma, group, classes);
                entry.comment = comment;
                entry.scope = scope;
                let sentence_only = entry.scope == BTreeSet::from([ScopeCategory::S]);
                entry.direction = if sentence_only {
                    Direction::None
                } else {
                    direction
                };
                entry.valence = valence;
                let [rhematic, vorfeld, distance, gradable, predicative, negatable, comparable, _] =
                    flags;
                entry.rhematic = rhematic;
                entry.vorfeld = vorfeld;
                entry.distance = distance && entry.direction != Direction::None;
                entry.gradable = gradable;
                entry.predicative = predicative;
                entry.negatable = negatable;
                entry.comparable = comparable;
                entry
            },
        )
}
