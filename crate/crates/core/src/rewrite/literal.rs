//! Bidirectional search over literal words.
//!
//! States are words reduced by the free cancellations the rule set offers.
//! Moves are single rule applications and inverted-rule macros.

use alloc::vec::Vec;

use super::rules::RuleSet;
use super::tracer::{reverse_steps, to_script_steps, traced_free_reduce, RuleRef, Tracer};
use super::{SearchBudget, SearchOutcome};
use crate::search::bidirectional;
use crate::word::{BraidWord, Generator};

/// Moves worth trying: every rule, plus the inverted form of each rule that
/// has no plain counterpart and can be expanded.
pub(crate) fn candidate_moves(rules: &RuleSet, insertions: bool) -> Vec<(RuleRef, Vec<Generator>, Vec<Generator>)> {
    let mut out = Vec::new();
    for idx in 0..rules.len() {
        for inverted in [false, true] {
            let rr = RuleRef { idx, inverted };
            if inverted && (rr.simplify(rules) != rr || !rr.supported(rules)) {
                continue;
            }
            let (lhs, rhs) = (rr.lhs(rules), rr.rhs(rules));
            if lhs.is_empty() && !insertions {
                continue;
            }
            // pure cancellations are already applied by normalization
            if rhs.is_empty() && lhs.len() == 2 && lhs[0] == lhs[1].inverse() && !lhs[0].is_block() {
                continue;
            }
            out.push((rr, lhs, rhs));
        }
    }
    out
}

pub(super) fn search(
    w1: &BraidWord,
    w2: &BraidWord,
    rules: &RuleSet,
    budget: SearchBudget,
    insertions: bool,
) -> SearchOutcome {
    let moves = candidate_moves(rules, insertions);
    let (a, _) = traced_free_reduce(rules, w1.letters());
    let (b, _) = traced_free_reduce(rules, w2.letters());
    let max_len = budget.max_word_length;
    let result = bidirectional(a, b, budget.max_depth, budget.max_states, |word: &Vec<Generator>, out| {
        for (m, (_, lhs, rhs)) in moves.iter().enumerate() {
            if word.len() + rhs.len() > max_len + lhs.len() {
                continue;
            }
            for p in 0..=word.len().saturating_sub(lhs.len()) {
                if p + lhs.len() > word.len() || word[p..p + lhs.len()] != lhs[..] {
                    continue;
                }
                let mut next = Vec::with_capacity(word.len() + rhs.len());
                next.extend_from_slice(&word[..p]);
                next.extend_from_slice(rhs);
                next.extend_from_slice(&word[p + lhs.len()..]);
                let (next, _) = traced_free_reduce(rules, &next);
                out.push(((m, p), next));
            }
        }
    });
    match result {
        Ok(meet) => {
            let replay = |start: &BraidWord, path: &[((usize, usize), Vec<Generator>)]| {
                let mut t = Tracer::new(rules, start.letters().to_vec());
                t.free_reduce();
                for ((m, p), expect) in path {
                    t.apply(moves[*m].0, *p).expect("search move replays");
                    t.free_reduce();
                    debug_assert_eq!(&t.word, expect);
                }
                t.steps
            };
            let mut steps = replay(w1, &meet.from_a);
            steps.extend(reverse_steps(rules, &replay(w2, &meet.from_b)));
            SearchOutcome::Found(to_script_steps(rules, &steps))
        }
        Err(e) => SearchOutcome::Exhausted(e),
    }
}
