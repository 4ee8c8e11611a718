//! Replays abstract moves as elementary rule applications.

use alloc::format;
use alloc::vec::Vec;

use super::rules::RuleSet;
use super::{apply_letters, Step};
use crate::word::Generator;
use crate::Error;

/// A rule, or its mirror image `lhs⁻¹ → rhs⁻¹` when `inverted`.
///
/// Inverted rules are not members of the set; the tracer expands them into
/// insertions, one forward application, and cancellations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct RuleRef {
    pub idx: usize,
    pub inverted: bool,
}

pub(crate) fn invert_letters(side: &[Generator]) -> Vec<Generator> {
    side.iter().rev().map(|g| g.inverse()).collect()
}

impl RuleRef {
    pub fn plain(idx: usize) -> Self {
        RuleRef { idx, inverted: false }
    }

    pub fn lhs(self, rules: &RuleSet) -> Vec<Generator> {
        let r = &rules.rules()[self.idx];
        if self.inverted { invert_letters(&r.lhs) } else { r.lhs.clone() }
    }

    pub fn rhs(self, rules: &RuleSet) -> Vec<Generator> {
        let r = &rules.rules()[self.idx];
        if self.inverted { invert_letters(&r.rhs) } else { r.rhs.clone() }
    }

    /// The move undoing this one at the same position.
    pub fn reverse(self, rules: &RuleSet) -> Self {
        RuleRef { idx: rules.reverse_of(self.idx), inverted: self.inverted }
    }

    /// Resolves an inverted reference to a plain rule with the same sides
    /// when the set has one.
    pub fn simplify(self, rules: &RuleSet) -> Self {
        if self.inverted {
            if let Some(i) = rules.find(&self.lhs(rules), &self.rhs(rules)) {
                return RuleRef::plain(i);
            }
        }
        self
    }

    /// Whether the tracer can expand this reference under `rules`.
    pub fn supported(self, rules: &RuleSet) -> bool {
        if !self.inverted {
            return true;
        }
        let r = &rules.rules()[self.idx];
        r.rhs.iter().all(|&g| insertion_rule(rules, g.inverse()).is_some())
            && r.lhs.iter().all(|&g| cancellation_rule(rules, g).is_some())
    }
}

/// Rule inserting `g g⁻¹`.
fn insertion_rule(rules: &RuleSet, g: Generator) -> Option<usize> {
    rules.find(&[], &[g, g.inverse()])
}

/// Rule deleting `g g⁻¹`.
fn cancellation_rule(rules: &RuleSet, g: Generator) -> Option<usize> {
    rules.find(&[g, g.inverse()], &[])
}

/// Free reduction restricted to pairs that `rules` can cancel. Returns the
/// reduced word and the elementary steps (0-based positions) that produce it.
pub(crate) fn traced_free_reduce(rules: &RuleSet, word: &[Generator]) -> (Vec<Generator>, Vec<(usize, usize)>) {
    let mut stack: Vec<Generator> = Vec::with_capacity(word.len());
    let mut steps = Vec::new();
    for &g in word {
        if let Some(&top) = stack.last() {
            if top == g.inverse() {
                if let Some(r) = cancellation_rule(rules, top) {
                    steps.push((r, stack.len() - 1));
                    stack.pop();
                    continue;
                }
            }
        }
        stack.push(g);
    }
    (stack, steps)
}

/// A word being rewritten together with the elementary steps applied so far.
pub(crate) struct Tracer<'a> {
    pub rules: &'a RuleSet,
    pub word: Vec<Generator>,
    /// Rule index and 0-based position of each elementary step.
    pub steps: Vec<(usize, usize)>,
}

impl<'a> Tracer<'a> {
    pub fn new(rules: &'a RuleSet, word: Vec<Generator>) -> Self {
        Tracer { rules, word, steps: Vec::new() }
    }

    pub fn elementary(&mut self, idx: usize, pos0: usize) -> Result<(), Error> {
        let r = &self.rules.rules()[idx];
        match apply_letters(&self.word, pos0 + 1, &r.lhs, &r.rhs) {
            Some(next) => {
                self.word = next;
                self.steps.push((idx, pos0));
                Ok(())
            }
            None => Err(Error::NoMatch { rule: r.name.clone(), pos: pos0 + 1 }),
        }
    }

    /// Applies `rr` at 0-based `pos0`, expanding an inverted rule `L → R`
    /// as `L⁻¹ ⇒ R⁻¹ R L⁻¹ ⇒ R⁻¹ L L⁻¹ ⇒ R⁻¹`.
    pub fn apply(&mut self, rr: RuleRef, pos0: usize) -> Result<(), Error> {
        let rr = rr.simplify(self.rules);
        if !rr.inverted {
            return self.elementary(rr.idx, pos0);
        }
        let rules = self.rules;
        let rule = &rules.rules()[rr.idx];
        let lhs_inv = invert_letters(&rule.lhs);
        if self.word.get(pos0..pos0 + lhs_inv.len()) != Some(&lhs_inv[..]) {
            return Err(Error::NoMatch { rule: format!("{}^-1", rule.name), pos: pos0 + 1 });
        }
        let k = rule.rhs.len();
        // R⁻¹ R, outermost pair first
        for (j, &g) in rule.rhs.iter().rev().enumerate() {
            let ins = insertion_rule(rules, g.inverse())
                .ok_or_else(|| Error::UnknownRule(format!("insertion of {}", g.inverse())))?;
            self.elementary(ins, pos0 + j)?;
        }
        self.elementary(rules.reverse_of(rr.idx), pos0 + k)?;
        // L L⁻¹ sits at pos0 + k; cancel from the middle outwards
        let l = rule.lhs.len();
        for j in (0..l).rev() {
            let g = rule.lhs[j];
            let del = cancellation_rule(rules, g).ok_or_else(|| Error::UnknownRule(format!("cancellation of {g}")))?;
            self.elementary(del, pos0 + k + j)?;
        }
        Ok(())
    }

    /// Cancels adjacent inverse pairs; positions are recorded against the
    /// live word, which is the reduction stack followed by unread letters.
    pub fn free_reduce(&mut self) {
        let (word, steps) = traced_free_reduce(self.rules, &self.word);
        for (r, p) in steps {
            self.elementary(r, p).expect("free reduction step replays");
        }
        debug_assert_eq!(self.word, word);
    }
}

/// Undoes a list of elementary steps: reversed order, reversed rules.
pub(crate) fn reverse_steps(rules: &RuleSet, steps: &[(usize, usize)]) -> Vec<(usize, usize)> {
    steps.iter().rev().map(|&(r, p)| (rules.reverse_of(r), p)).collect()
}

pub(crate) fn to_script_steps(rules: &RuleSet, steps: &[(usize, usize)]) -> Vec<Step> {
    steps.iter().map(|&(r, p)| Step { pos: p + 1, rule: rules.rules()[r].name.clone() }).collect()
}
