//! Rewriting and the bounded equality search. Every positive answer is a
//! script over named rules.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::quotients::separating_invariant;
use crate::word::{write_letters, BraidWord, Generator};
use crate::Error;

mod blocks;
mod literal;
mod rules;
mod tracer;

pub use rules::{defining_rules, family_instances, reduced_rules, standard_rules, RewriteRule, RuleSet, REV};
#[allow(unused_imports)]
pub(crate) use tracer::{RuleRef, Tracer};

/// One rewrite step: apply `rule` with its lhs starting at 1-based `pos`.
/// For rules with an empty lhs, `pos` is where the rhs is inserted
/// (`len + 1` appends).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub pos: usize,
    pub rule: String,
}

/// An explicit chain of rule applications from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationScript {
    pub start: BraidWord,
    pub steps: Vec<Step>,
    pub end: BraidWord,
}

impl DerivationScript {
    pub fn trivial(w: &BraidWord) -> Self {
        DerivationScript { start: w.clone(), steps: Vec::new(), end: w.clone() }
    }

    /// Parses the line format: start word, `@<pos> <rule>` lines, then
    /// `=> <end word>`. Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut start = None;
        let mut steps = Vec::new();
        let mut end = None;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Script { line: line_no, msg: String::from(msg) };
            if end.is_some() {
                return Err(err("content after `=>` line"));
            }
            if let Some(rest) = line.strip_prefix("=>") {
                if start.is_none() {
                    return Err(err("missing start word"));
                }
                end = Some(BraidWord::parse(rest).map_err(|e| err(&e.to_string()))?);
            } else if let Some(rest) = line.strip_prefix('@') {
                if start.is_none() {
                    return Err(err("step before start word"));
                }
                let (pos, rule) = rest.split_once(char::is_whitespace).ok_or_else(|| err("expected `@<pos> <rule>`"))?;
                let pos: usize = pos.parse().map_err(|_| err("bad position"))?;
                if pos == 0 {
                    return Err(err("positions are 1-based"));
                }
                steps.push(Step { pos, rule: String::from(rule.trim()) });
            } else if start.is_none() {
                start = Some(BraidWord::parse(line).map_err(|e| err(&e.to_string()))?);
            } else {
                return Err(err("unexpected line"));
            }
        }
        let start = start.ok_or(Error::Script { line: 0, msg: String::from("empty script") })?;
        let end = end.ok_or(Error::Script { line: 0, msg: String::from("missing `=>` line") })?;
        if start.degree() != end.degree() {
            return Err(Error::DegreeMismatch(start.degree(), end.degree()));
        }
        Ok(DerivationScript { start, steps, end })
    }
}

impl fmt::Display for DerivationScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.start)?;
        for s in &self.steps {
            writeln!(f, "@{} {}", s.pos, s.rule)?;
        }
        writeln!(f, "=> {}", self.end)
    }
}

/// Applies `rule` to `w` with the lhs at 1-based `pos`.
pub fn apply_rule(w: &BraidWord, pos: usize, rule: &RewriteRule) -> Result<BraidWord, Error> {
    let letters = apply_letters(w.letters(), pos, &rule.lhs, &rule.rhs)
        .ok_or_else(|| Error::NoMatch { rule: rule.name.clone(), pos })?;
    BraidWord::new(w.degree(), letters)
}

pub(crate) fn apply_letters(
    word: &[Generator],
    pos: usize,
    lhs: &[Generator],
    rhs: &[Generator],
) -> Option<Vec<Generator>> {
    let at = pos.checked_sub(1)?;
    if at + lhs.len() > word.len() || word[at..at + lhs.len()] != *lhs {
        return None;
    }
    let mut out = Vec::with_capacity(word.len() + rhs.len() - lhs.len().min(word.len()));
    out.extend_from_slice(&word[..at]);
    out.extend_from_slice(rhs);
    out.extend_from_slice(&word[at + lhs.len()..]);
    Some(out)
}

/// Why a script was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    /// 0-based index of the failing step; `None` when every step applied but
    /// the final word differs from the expected end.
    pub step: Option<usize>,
    pub message: String,
    /// The subword found at the step position (or the final word).
    pub subword: Vec<Generator>,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(k) => write!(f, "step {}: {} (found `", k + 1, self.message)?,
            None => write!(f, "end: {} (found `", self.message)?,
        }
        write_letters(f, &self.subword)?;
        f.write_str("`)")
    }
}

/// Replays `script` under `rules` with no implicit normalization.
pub fn verify_derivation(script: &DerivationScript, rules: &RuleSet) -> Result<(), VerifyFailure> {
    if script.start.degree() != script.end.degree() {
        return Err(VerifyFailure {
            step: None,
            message: format!("degree mismatch {} vs {}", script.start.degree(), script.end.degree()),
            subword: Vec::new(),
        });
    }
    let mut cur: Vec<Generator> = script.start.letters().to_vec();
    for (k, step) in script.steps.iter().enumerate() {
        let rule = rules.get(&step.rule).ok_or_else(|| VerifyFailure {
            step: Some(k),
            message: format!("unknown rule `{}`", step.rule),
            subword: Vec::new(),
        })?;
        match apply_letters(&cur, step.pos, &rule.lhs, &rule.rhs) {
            Some(next) => cur = next,
            None => {
                let at = step.pos.saturating_sub(1).min(cur.len());
                let hi = (at + rule.lhs.len()).min(cur.len());
                let mut msg = String::from("lhs `");
                let _ = write_letters(&mut msg, &rule.lhs);
                msg.push_str("` does not match at position ");
                msg.push_str(&step.pos.to_string());
                return Err(VerifyFailure { step: Some(k), message: msg, subword: cur[at..hi].to_vec() });
            }
        }
    }
    if cur != script.end.letters() {
        return Err(VerifyFailure {
            step: None,
            message: String::from("final word differs from expected end"),
            subword: cur,
        });
    }
    Ok(())
}

/// Limits for the bounded searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of search edges on a path (both halves together).
    pub max_depth: usize,
    /// States whose word length exceeds this are not expanded.
    pub max_word_length: usize,
    /// Maximum number of distinct states visited.
    pub max_states: usize,
}

impl SearchBudget {
    pub fn new(max_depth: usize, max_word_length: usize, max_states: usize) -> Self {
        SearchBudget { max_depth: max_depth.max(1), max_word_length: max_word_length.max(1), max_states: max_states.max(1) }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_depth: 12, max_word_length: 64, max_states: 200_000 }
    }
}

/// Details attached to an inconclusive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhausted {
    pub states: usize,
    pub depth: usize,
    pub reason: String,
}

/// Result of a bounded equality search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal(DerivationScript),
    /// Names the invariant that takes different values on the two words.
    Distinct(String),
    Unknown(Exhausted),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Equal(_) => "equal",
            Verdict::Distinct(_) => "distinct",
            Verdict::Unknown(_) => "unknown",
        }
    }
}

/// Outcome of one of the internal engines.
pub(crate) enum SearchOutcome {
    Found(Vec<Step>),
    Exhausted(Exhausted),
}

/// Semi-decision procedure for equality in the group presented by `rules`.
///
/// Words separated by one of the quotient invariants are `Distinct`.
/// Otherwise a bidirectional breadth-first search over rewrite states looks
/// for a common state; on success the returned script replays under
/// `rules` with `verify_derivation`.
pub fn bounded_equal(w1: &BraidWord, w2: &BraidWord, rules: &RuleSet, budget: SearchBudget) -> Result<Verdict, Error> {
    if w1.degree() != w2.degree() {
        return Err(Error::DegreeMismatch(w1.degree(), w2.degree()));
    }
    if w1.degree() != rules.degree() {
        return Err(Error::DegreeMismatch(w1.degree(), rules.degree()));
    }
    if w1 == w2 {
        return Ok(Verdict::Equal(DerivationScript::trivial(w1)));
    }
    if let Some(name) = separating_invariant(w1, w2) {
        return Ok(Verdict::Distinct(String::from(name)));
    }
    let outcome = match blocks::search(w1, w2, rules, budget) {
        Some(outcome) => outcome,
        None => literal::search(w1, w2, rules, budget, false),
    };
    Ok(match outcome {
        SearchOutcome::Found(steps) => {
            Verdict::Equal(DerivationScript { start: w1.clone(), steps, end: w2.clone() })
        }
        SearchOutcome::Exhausted(e) => Verdict::Unknown(e),
    })
}

/// Plain bidirectional search over free-reduced words, applying rules at
/// every position. With `insertions`, empty-lhs rules are also tried, which
/// lets the search insert relators; this is only practical for short words.
pub fn bounded_equal_literal(
    w1: &BraidWord,
    w2: &BraidWord,
    rules: &RuleSet,
    budget: SearchBudget,
    insertions: bool,
) -> Result<Verdict, Error> {
    if w1.degree() != w2.degree() || w1.degree() != rules.degree() {
        return Err(Error::DegreeMismatch(w1.degree(), w2.degree()));
    }
    if w1 == w2 {
        return Ok(Verdict::Equal(DerivationScript::trivial(w1)));
    }
    if let Some(name) = separating_invariant(w1, w2) {
        return Ok(Verdict::Distinct(String::from(name)));
    }
    Ok(match literal::search(w1, w2, rules, budget, insertions) {
        SearchOutcome::Found(steps) => {
            Verdict::Equal(DerivationScript { start: w1.clone(), steps, end: w2.clone() })
        }
        SearchOutcome::Exhausted(e) => Verdict::Unknown(e),
    })
}
