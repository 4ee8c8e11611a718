//! The reduced presentation on `σ1`, `γ1` and `v1 … v(n-1)`.
//!
//! Higher generators are rewritten by conjugation with virtual letters:
//! `σi = (v(i-1)…v1)(vi…v2) σ1 (v2…vi)(v1…v(i-1))` and
//! `γi = (v(i-1)…v1) γ1 (v1…v(i-1))`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rewrite::{
    bounded_equal, defining_rules, reduced_rules, standard_rules, verify_derivation, DerivationScript, RuleSet,
    SearchBudget, Verdict, VerifyFailure, REV,
};
use crate::word::{BraidWord, Generator, Kind};
use crate::Error;

/// Largest degree accepted by `verify_presentation_equivalence`.
pub const MAX_PRESENTATION_DEGREE: usize = 4;

fn descending(hi: usize, lo: usize, out: &mut Vec<Generator>) {
    for k in (lo..=hi).rev() {
        out.push(Generator::v(k as u8));
    }
}

fn ascending(lo: usize, hi: usize, out: &mut Vec<Generator>) {
    for k in lo..=hi {
        out.push(Generator::v(k as u8));
    }
}

/// Appends the reduced form of one letter.
pub fn reduce_generator(g: Generator, out: &mut Vec<Generator>) {
    let i = g.index as usize;
    match g.kind {
        Kind::Sigma | Kind::SigmaInv if i > 1 => {
            let core = if g.kind == Kind::Sigma { Generator::sigma(1) } else { Generator::sigma_inv(1) };
            descending(i - 1, 1, out);
            descending(i, 2, out);
            out.push(core);
            ascending(2, i, out);
            ascending(1, i - 1, out);
        }
        Kind::Gamma if i > 1 => {
            descending(i - 1, 1, out);
            out.push(Generator::gamma(1));
            ascending(1, i - 1, out);
        }
        _ => out.push(g),
    }
}

/// Literal substitution of every `σi` (i ≥ 2) and `γi` (i ≥ 2).
pub fn reduce_generators(w: &BraidWord) -> BraidWord {
    let mut out = Vec::with_capacity(w.len());
    for &g in w.letters() {
        reduce_generator(g, &mut out);
    }
    BraidWord::from_parts(w.degree(), out)
}

/// True if `w` only uses `σ1^±1`, `γ1` and virtual letters.
pub fn is_reduced(w: &BraidWord) -> bool {
    w.letters().iter().all(|g| g.kind == Kind::V || g.index == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Direction {
    /// Standard relations, substituted, proven under the reduced rules.
    StandardToReduced,
    /// Reduced relations proven under the standard rules.
    ReducedToStandard,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::StandardToReduced => "standard=>reduced",
            Direction::ReducedToStandard => "reduced=>standard",
        })
    }
}

/// One relation to prove: `lhs = rhs` under `rules`.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub name: String,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

impl RelationCheck {
    pub fn run(&self, rules: &RuleSet, budget: SearchBudget) -> Verdict {
        // both sides share the rule set degree by construction
        bounded_equal(&self.lhs, &self.rhs, rules, budget).unwrap_or_else(|e| Verdict::Distinct(format!("{e}")))
    }
}

#[derive(Debug, Clone)]
pub struct PresentationReport {
    pub direction: Direction,
    /// Sorted by relation name.
    pub per_relation: Vec<(String, Verdict)>,
    pub all_proven: bool,
}

impl PresentationReport {
    pub fn from_results(direction: Direction, mut per_relation: Vec<(String, Verdict)>) -> Self {
        per_relation.sort_by(|a, b| a.0.cmp(&b.0));
        let all_proven = per_relation.iter().all(|(_, v)| v.is_equal());
        PresentationReport { direction, per_relation, all_proven }
    }
}

fn relations_of(set: &RuleSet) -> impl Iterator<Item = &crate::rewrite::RewriteRule> {
    set.rules().iter().filter(|r| !r.name.ends_with(REV) && !r.name.starts_with("free@"))
}

fn check_degree(n: usize) -> Result<(), Error> {
    if !(2..=MAX_PRESENTATION_DEGREE).contains(&n) {
        return Err(Error::BadDegree(n));
    }
    Ok(())
}

/// The relations to prove in one direction, with the rule set to prove
/// them under.
pub fn relation_checks(n: usize, direction: Direction) -> Result<(Vec<RelationCheck>, RuleSet), Error> {
    check_degree(n)?;
    let (source, target) = match direction {
        Direction::StandardToReduced => (defining_rules(n), reduced_rules(n)),
        Direction::ReducedToStandard => (reduced_rules(n), standard_rules(n)),
    };
    let checks = relations_of(&source)
        .map(|r| {
            let lhs = BraidWord::from_parts(n, r.lhs.clone());
            let rhs = BraidWord::from_parts(n, r.rhs.clone());
            let (lhs, rhs) = match direction {
                Direction::StandardToReduced => (reduce_generators(&lhs), reduce_generators(&rhs)),
                Direction::ReducedToStandard => (lhs, rhs),
            };
            RelationCheck { name: r.name.clone(), lhs, rhs }
        })
        .collect();
    Ok((checks, target))
}

/// Proves every standard relation from the reduced ones and the converse.
pub fn verify_presentation_equivalence(
    n: usize,
    budget: SearchBudget,
) -> Result<(PresentationReport, PresentationReport), Error> {
    let run = |direction| -> Result<PresentationReport, Error> {
        let (checks, rules) = relation_checks(n, direction)?;
        let results = checks.iter().map(|c| (c.name.clone(), c.run(&rules, budget))).collect();
        Ok(PresentationReport::from_results(direction, results))
    };
    Ok((run(Direction::StandardToReduced)?, run(Direction::ReducedToStandard)?))
}

const LEMMA_FILES: &[(&str, &str)] = &[
    ("inverse-b-2", include_str!("../lemmas/inverse-b-2.txt")),
    ("inverse-b-3", include_str!("../lemmas/inverse-b-3.txt")),
    ("height-bv-below", include_str!("../lemmas/height-bv-below.txt")),
    ("height-bv-above", include_str!("../lemmas/height-bv-above.txt")),
    ("height-bb-1-2", include_str!("../lemmas/height-bb-1-2.txt")),
    ("height-bb-2-3", include_str!("../lemmas/height-bb-2-3.txt")),
    ("sigma-gamma-2", include_str!("../lemmas/sigma-gamma-2.txt")),
    ("sigma-gamma-3", include_str!("../lemmas/sigma-gamma-3.txt")),
    ("height-sb-below", include_str!("../lemmas/height-sb-below.txt")),
    ("height-sb-above", include_str!("../lemmas/height-sb-above.txt")),
    ("bv-1", include_str!("../lemmas/bv-1.txt")),
    ("bv-2", include_str!("../lemmas/bv-2.txt")),
    ("twist-III-1", include_str!("../lemmas/twist-III-1.txt")),
    ("twist-III-2", include_str!("../lemmas/twist-III-2.txt")),
];

/// Base rule set a lemma script is replayed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaRules {
    Reduced,
    Standard,
    Defining,
}

impl LemmaRules {
    pub fn build(self, n: usize) -> RuleSet {
        match self {
            LemmaRules::Reduced => reduced_rules(n),
            LemmaRules::Standard => standard_rules(n),
            LemmaRules::Defining => defining_rules(n),
        }
    }
}

/// A shipped derivation chain.
///
/// Header directives are comment lines: `#@ rules: reduced|standard|defining`
/// picks the base rule set and `#@ derive: <name>` registers `start → end`
/// as a rule available to every later lemma.
#[derive(Debug, Clone)]
pub struct Lemma {
    pub name: String,
    pub rules: LemmaRules,
    pub derives: Option<String>,
    pub script: DerivationScript,
}

impl Lemma {
    pub fn parse(name: &str, text: &str) -> Result<Self, Error> {
        let mut rules = LemmaRules::Reduced;
        let mut derives = None;
        for (k, line) in text.lines().enumerate() {
            let Some(rest) = line.trim().strip_prefix("#@") else { continue };
            let err = |msg: String| Error::Script { line: k + 1, msg };
            let (key, value) = rest.split_once(':').ok_or_else(|| err(String::from("expected `#@ key: value`")))?;
            let value = value.trim();
            match key.trim() {
                "rules" => {
                    rules = match value {
                        "reduced" => LemmaRules::Reduced,
                        "standard" => LemmaRules::Standard,
                        "defining" => LemmaRules::Defining,
                        other => return Err(err(format!("unknown rule set `{other}`"))),
                    }
                }
                "derive" => derives = Some(String::from(value)),
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        Ok(Lemma { name: String::from(name), rules, derives, script: DerivationScript::parse(text)? })
    }
}

/// Every shipped lemma whose words fit degree `n`, lifted to degree `n`, in
/// replay order.
pub fn builtin_lemma_scripts(n: usize) -> Result<Vec<Lemma>, Error> {
    let mut out = Vec::new();
    for (name, text) in LEMMA_FILES {
        let mut lemma = Lemma::parse(name, text)?;
        if lemma.script.start.degree() > n {
            continue;
        }
        lemma.script.start = lemma.script.start.with_degree(n)?;
        lemma.script.end = lemma.script.end.with_degree(n)?;
        out.push(lemma);
    }
    Ok(out)
}

/// Replays lemmas in order, materializing derived rules as they are proven.
/// A derived rule is only registered if its own replay succeeds.
pub fn replay_lemmas(lemmas: &[Lemma]) -> Vec<(String, Result<(), VerifyFailure>)> {
    let mut derived: Vec<(String, Vec<Generator>, Vec<Generator>)> = Vec::new();
    let mut out = Vec::new();
    for lemma in lemmas {
        let rules = lemma_rule_set(lemma.script.start.degree(), lemma.rules, &derived);
        let result = verify_derivation(&lemma.script, &rules);
        if let (Ok(()), Some(name)) = (&result, &lemma.derives) {
            derived.push((name.clone(), lemma.script.start.letters().to_vec(), lemma.script.end.letters().to_vec()));
        }
        out.push((lemma.name.clone(), result));
    }
    out
}

/// Base rules plus derived rules, each tagged with the family before `@`.
pub fn lemma_rule_set(n: usize, base: LemmaRules, derived: &[(String, Vec<Generator>, Vec<Generator>)]) -> RuleSet {
    let mut rules = base.build(n);
    for (name, lhs, rhs) in derived {
        let origin = name.split('@').next().unwrap_or(name);
        rules.add_pair(name, lhs.clone(), rhs.clone(), origin, true);
    }
    rules
}
