//! Markov moves on braid words and a bounded search for Markov equivalence.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::closure_gauss_data;
use crate::rewrite::{Exhausted, SearchBudget};
use crate::search::bidirectional;
use crate::word::{BraidWord, Generator, Kind, MAX_DEGREE};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StabKind {
    Positive,
    Negative,
    Virtual,
}

impl StabKind {
    /// The letter appended when stabilizing to `degree` strands.
    fn letter(self, degree: usize) -> Generator {
        let i = (degree - 1) as u8;
        match self {
            StabKind::Positive => Generator::sigma(i),
            StabKind::Negative => Generator::sigma_inv(i),
            StabKind::Virtual => Generator::v(i),
        }
    }
}

/// One Markov move. Exchange splits are the 1-based position of the inner
/// `σ⁻¹` (or `v`) letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MarkovMove {
    /// `w ↦ g w g⁻¹`, literally.
    ConjugateBy(Generator),
    /// `g w g⁻¹ ↦ w`.
    Deconjugate(Generator),
    /// First letter moved to the end.
    CyclicShift,
    /// Last letter moved to the front.
    InverseCyclicShift,
    Stabilize(StabKind),
    Destabilize(StabKind),
    /// `ι(b₁) σ_N⁻¹ ι(b₂) σ_N ↦ ι(b₁) v_N ι(b₂) v_N` on the last strand.
    RightExchange(usize),
    InverseRightExchange(usize),
    /// The same on the first strand with `σ₁` and `v₁`.
    LeftExchange(usize),
    InverseLeftExchange(usize),
}

impl MarkovMove {
    pub fn inverse(self) -> MarkovMove {
        use MarkovMove::*;
        match self {
            ConjugateBy(g) => Deconjugate(g),
            Deconjugate(g) => ConjugateBy(g),
            CyclicShift => InverseCyclicShift,
            InverseCyclicShift => CyclicShift,
            Stabilize(k) => Destabilize(k),
            Destabilize(k) => Stabilize(k),
            RightExchange(p) => InverseRightExchange(p),
            InverseRightExchange(p) => RightExchange(p),
            LeftExchange(p) => InverseLeftExchange(p),
            InverseLeftExchange(p) => LeftExchange(p),
        }
    }
}

impl fmt::Display for MarkovMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use MarkovMove::*;
        let kind = |k: &StabKind| match k {
            StabKind::Positive => "positive",
            StabKind::Negative => "negative",
            StabKind::Virtual => "virtual",
        };
        match self {
            ConjugateBy(g) => write!(f, "conjugate {g}"),
            Deconjugate(g) => write!(f, "deconjugate {g}"),
            CyclicShift => f.write_str("cyclic-shift"),
            InverseCyclicShift => f.write_str("cyclic-shift^-1"),
            Stabilize(k) => write!(f, "stabilize {}", kind(k)),
            Destabilize(k) => write!(f, "destabilize {}", kind(k)),
            RightExchange(p) => write!(f, "right-exchange @{p}"),
            InverseRightExchange(p) => write!(f, "right-exchange^-1 @{p}"),
            LeftExchange(p) => write!(f, "left-exchange @{p}"),
            InverseLeftExchange(p) => write!(f, "left-exchange^-1 @{p}"),
        }
    }
}

fn mismatch(m: MarkovMove, w: &BraidWord) -> Error {
    Error::ShapeMismatch(format!("{m} on {w}"))
}

fn touches_last(g: Generator, degree: usize) -> bool {
    g.max_position() >= degree
}

fn touches_first(g: Generator) -> bool {
    g.index == 1
}

/// Checks the exchange shape: letter `split` is `inner`, the last letter is
/// `outer`, and every other letter avoids the distinguished strand.
fn exchange_shape(
    w: &BraidWord,
    split: usize,
    inner: Generator,
    outer: Generator,
    avoids: impl Fn(Generator) -> bool,
) -> bool {
    let l = w.letters();
    split >= 1
        && split < l.len()
        && l[split - 1] == inner
        && l[l.len() - 1] == outer
        && l.iter().enumerate().all(|(k, &g)| k == split - 1 || k == l.len() - 1 || avoids(g))
}

pub fn apply_markov(w: &BraidWord, m: MarkovMove) -> Result<BraidWord, Error> {
    use MarkovMove::*;
    let n = w.degree();
    let l = w.letters();
    match m {
        ConjugateBy(g) => {
            if !g.fits(n) {
                return Err(mismatch(m, w));
            }
            let mut out = Vec::with_capacity(l.len() + 2);
            out.push(g);
            out.extend_from_slice(l);
            out.push(g.inverse());
            BraidWord::new(n, out)
        }
        Deconjugate(g) => {
            if l.len() < 2 || l[0] != g || l[l.len() - 1] != g.inverse() {
                return Err(mismatch(m, w));
            }
            BraidWord::new(n, l[1..l.len() - 1].to_vec())
        }
        CyclicShift | InverseCyclicShift => {
            if l.is_empty() {
                return Err(mismatch(m, w));
            }
            let mut out = l.to_vec();
            if m == CyclicShift {
                out.rotate_left(1);
            } else {
                out.rotate_right(1);
            }
            BraidWord::new(n, out)
        }
        Stabilize(k) => {
            if n + 1 > MAX_DEGREE {
                return Err(Error::BadDegree(n + 1));
            }
            let mut out = l.to_vec();
            out.push(k.letter(n + 1));
            BraidWord::new(n + 1, out)
        }
        Destabilize(k) => {
            let ok = n >= 2
                && l.last() == Some(&k.letter(n))
                && l[..l.len() - 1].iter().all(|&g| !touches_last(g, n));
            if !ok {
                return Err(mismatch(m, w));
            }
            BraidWord::new(n - 1, l[..l.len() - 1].to_vec())
        }
        RightExchange(p) | InverseRightExchange(p) | LeftExchange(p) | InverseLeftExchange(p) => {
            if n < 2 {
                return Err(mismatch(m, w));
            }
            let right = matches!(m, RightExchange(_) | InverseRightExchange(_));
            let i = if right { (n - 1) as u8 } else { 1 };
            let (real_in, real_out, virt) = (Generator::sigma_inv(i), Generator::sigma(i), Generator::v(i));
            let forward = matches!(m, RightExchange(_) | LeftExchange(_));
            let (inner, outer, new_inner, new_outer) =
                if forward { (real_in, real_out, virt, virt) } else { (virt, virt, real_in, real_out) };
            let ok = if right {
                exchange_shape(w, p, inner, outer, |g| !touches_last(g, n))
            } else {
                exchange_shape(w, p, inner, outer, |g| !touches_first(g))
            };
            if !ok {
                return Err(mismatch(m, w));
            }
            let mut out = l.to_vec();
            out[p - 1] = new_inner;
            let last = out.len() - 1;
            out[last] = new_outer;
            BraidWord::new(n, out)
        }
    }
}

/// Every move applicable to `w`, stabilizations only up to `max_degree`.
pub fn applicable_moves(w: &BraidWord, max_degree: usize) -> Vec<MarkovMove> {
    use MarkovMove::*;
    let n = w.degree();
    let l = w.letters();
    let mut out = Vec::new();
    for i in 1..n {
        let i = i as u8;
        out.extend([ConjugateBy(Generator::sigma(i)), ConjugateBy(Generator::sigma_inv(i)), ConjugateBy(Generator::v(i))]);
    }
    for i in 1..=n {
        out.push(ConjugateBy(Generator::gamma(i as u8)));
    }
    if let (Some(&first), Some(&last)) = (l.first(), l.last()) {
        if l.len() >= 2 && first == last.inverse() {
            out.push(Deconjugate(first));
        }
        out.extend([CyclicShift, InverseCyclicShift]);
    }
    if n < max_degree.min(MAX_DEGREE) {
        out.extend([Stabilize(StabKind::Positive), Stabilize(StabKind::Negative), Stabilize(StabKind::Virtual)]);
    }
    for k in [StabKind::Positive, StabKind::Negative, StabKind::Virtual] {
        if apply_markov(w, Destabilize(k)).is_ok() {
            out.push(Destabilize(k));
        }
    }
    for p in 1..w.len() {
        for m in [RightExchange(p), InverseRightExchange(p), LeftExchange(p), InverseLeftExchange(p)] {
            if apply_markov(w, m).is_ok() {
                out.push(m);
            }
        }
    }
    out
}

/// One step of a Markov trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkovStep {
    Move(MarkovMove),
    /// Replace the word by one with the same free reduction.
    Tm0(BraidWord),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovTrace {
    pub start: BraidWord,
    pub steps: Vec<MarkovStep>,
    pub end: BraidWord,
}

impl fmt::Display for MarkovTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.start)?;
        for s in &self.steps {
            match s {
                MarkovStep::Move(m) => writeln!(f, "{m}")?,
                MarkovStep::Tm0(w) => writeln!(f, "tm0 {w}")?,
            }
        }
        writeln!(f, "=> {}", self.end)
    }
}

/// Replays a trace; returns the index of the first failing step.
pub fn verify_markov_trace(trace: &MarkovTrace) -> Result<(), usize> {
    let mut cur = trace.start.clone();
    for (k, s) in trace.steps.iter().enumerate() {
        cur = match s {
            MarkovStep::Move(m) => apply_markov(&cur, *m).map_err(|_| k)?,
            MarkovStep::Tm0(w) => {
                if w.degree() != cur.degree() || w.free_reduce() != cur.free_reduce() {
                    return Err(k);
                }
                w.clone()
            }
        };
    }
    if cur == trace.end {
        Ok(())
    } else {
        Err(trace.steps.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkovVerdict {
    Equal(MarkovTrace),
    /// Names the closure invariant that differs.
    Distinct(String),
    Unknown(Exhausted),
}

/// Bounded search for a Markov trace from `w1` to `w2`. States are
/// free-reduced words of degree at most `max_degree`.
pub fn markov_equal_bounded(w1: &BraidWord, w2: &BraidWord, budget: SearchBudget, max_degree: usize) -> MarkovVerdict {
    let (m1, m2) = (closure_gauss_data(w1).mu, closure_gauss_data(w2).mu);
    if m1 != m2 {
        return MarkovVerdict::Distinct(String::from("mu"));
    }
    let cap = max_degree.max(w1.degree()).max(w2.degree());
    let max_len = budget.max_word_length;
    let result = bidirectional(w1.free_reduce(), w2.free_reduce(), budget.max_depth, budget.max_states, |w: &BraidWord, out| {
        for m in applicable_moves(w, cap) {
            if let Ok(next) = apply_markov(w, m) {
                let next = next.free_reduce();
                if next.len() <= max_len {
                    out.push(((m, w.clone()), next));
                }
            }
        }
    });
    let meet = match result {
        Ok(meet) => meet,
        Err(e) => return MarkovVerdict::Unknown(e),
    };
    let mut steps = Vec::new();
    let mut cur = w1.clone();
    let push_tm0 = |steps: &mut Vec<MarkovStep>, cur: &mut BraidWord, to: BraidWord| {
        if *cur != to {
            steps.push(MarkovStep::Tm0(to.clone()));
            *cur = to;
        }
    };
    push_tm0(&mut steps, &mut cur, w1.free_reduce());
    for ((m, _), next) in &meet.from_a {
        steps.push(MarkovStep::Move(*m));
        cur = apply_markov(&cur, *m).expect("search move replays");
        push_tm0(&mut steps, &mut cur, next.clone());
    }
    for ((m, before), _) in meet.from_b.iter().rev() {
        let raw = apply_markov(before, *m).expect("search move replays");
        push_tm0(&mut steps, &mut cur, raw);
        steps.push(MarkovStep::Move(m.inverse()));
        cur = apply_markov(&cur, m.inverse()).expect("inverse move replays");
        push_tm0(&mut steps, &mut cur, before.clone());
    }
    push_tm0(&mut steps, &mut cur, w2.clone());
    MarkovVerdict::Equal(MarkovTrace { start: w1.clone(), steps, end: w2.clone() })
}

/// `(v₁)(v₂v₁)…(v_{n-1}…v₁) γ₁…γₙ`.
pub fn nabla(n: usize) -> Result<BraidWord, Error> {
    let mut out = Vec::new();
    for i in 1..n {
        out.extend((1..=i).rev().map(|k| Generator::v(k as u8)));
    }
    out.extend((1..=n).map(|j| Generator::gamma(j as u8)));
    BraidWord::new(n, out)
}

/// Reflects indices: `σᵢ ↦ σ_{n-i}`, `vᵢ ↦ v_{n-i}`, `γᵢ ↦ γ_{n-i+1}`.
pub fn flip(w: &BraidWord) -> BraidWord {
    let n = w.degree();
    let letters = w
        .letters()
        .iter()
        .map(|g| {
            let i = g.index as usize;
            let j = if g.kind == Kind::Gamma { n + 1 - i } else { n - i };
            Generator::new(g.kind, j as u8)
        })
        .collect();
    BraidWord::from_parts(n, letters)
}
