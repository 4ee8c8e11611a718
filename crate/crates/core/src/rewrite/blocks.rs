//! Bidirectional search modulo the virtual-and-bar subgroup.
//!
//! The `v` and `γ` letters of a rule set generate a group of signed
//! permutations. A word is abstracted to its real crossings, each tagged with
//! its sign and with the orbit of `(block image above it, index)` under the
//! rules having exactly one real crossing on each side, together with the
//! block image of the whole word. Rules with several real crossings move
//! between abstract states. Every abstract step is replayed literally, so the
//! resulting script only uses elementary rule applications.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;
use alloc::vec::Vec;

use super::rules::RuleSet;
use super::tracer::{reverse_steps, to_script_steps, RuleRef, Tracer};
use super::{SearchBudget, SearchOutcome};
use crate::quotients::{block_image_of, SignedPermutation as Sp};
use crate::search::bidirectional;
use crate::word::{BraidWord, Generator, Kind};

/// Above this degree the group tables get too large.
pub(crate) const MAX_BLOCK_DEGREE: usize = 6;
const MAX_GROUP: usize = 46_080;
const PATH_STATES: usize = 400_000;

type Id = u32;
type Node = u32;
type Path = Vec<(RuleRef, usize)>;

/// The subgroup generated by the block alphabet, each element with its
/// shortlex-least word.
struct BlockGroup {
    degree: usize,
    elems: Vec<Sp>,
    ids: BTreeMap<Sp, Id>,
    words: Vec<Vec<Generator>>,
}

impl BlockGroup {
    fn generate(degree: usize, alphabet: &[Generator]) -> Option<Self> {
        let e = Sp::identity(degree);
        let mut ids = BTreeMap::new();
        ids.insert(e.clone(), 0);
        let mut elems = alloc::vec![e];
        let mut words = alloc::vec![Vec::new()];
        let mut head = 0;
        while head < elems.len() {
            for &x in alphabet {
                let mut g = elems[head].clone();
                g.push(x);
                if !ids.contains_key(&g) {
                    if elems.len() >= MAX_GROUP {
                        return None;
                    }
                    ids.insert(g.clone(), elems.len() as Id);
                    let mut w = words[head].clone();
                    w.push(x);
                    elems.push(g);
                    words.push(w);
                }
            }
            head += 1;
        }
        Some(BlockGroup { degree, elems, ids, words })
    }

    fn id(&self, g: &Sp) -> Id {
        self.ids[g]
    }

    fn image(&self, letters: &[Generator]) -> Sp {
        block_image_of(self.degree, letters)
    }

    fn right_table(&self, by: &Sp) -> Vec<Id> {
        self.elems.iter().map(|g| self.id(&g.then(by))).collect()
    }
}

/// A rule with one real crossing on each side, oriented so the crossing is
/// positive; `neg` is the same move on a negative crossing.
struct Single {
    rule: usize,
    pos: RuleRef,
    neg: RuleRef,
    from: u8,
    to: u8,
    /// Right factor applied to the crossing's context.
    table: Vec<Id>,
    rev: usize,
}

#[derive(Clone, Copy)]
struct Crossing {
    idx: u8,
    neg: bool,
}

/// A move with several real crossings, as the contexts (relative to the
/// start of the lhs) of the crossings on each side.
struct Multi {
    rr: RuleRef,
    lhs: Vec<(Sp, Crossing)>,
    rhs: Vec<(Sp, Crossing)>,
    /// Filled on first use: right factors `C_0⁻¹`, then `C_j` for lhs
    /// crossings j ≥ 1, then the rhs contexts.
    tables: Option<Rc<Vec<Vec<Id>>>>,
}

fn crossings(letters: &[Generator], degree: usize) -> Vec<(Sp, Crossing)> {
    let mut q = Sp::identity(degree);
    let mut out = Vec::new();
    for &g in letters {
        if g.is_block() {
            q.push(g);
        } else {
            out.push((q.clone(), Crossing { idx: g.index, neg: g.kind == Kind::SigmaInv }));
        }
    }
    out
}

/// One real crossing: the canonical orbit node and the sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Tau {
    node: Node,
    neg: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct State {
    letters: Vec<Tau>,
    total: Id,
}

/// Applies multi move `multi` with its lhs starting at crossing `at`, the
/// block image above the lhs being `x`.
#[derive(Debug, Clone, Copy)]
struct AbsMove {
    at: usize,
    multi: usize,
    x: Id,
}

fn push_reduced(stack: &mut Vec<Tau>, t: Tau) {
    match stack.last() {
        Some(top) if top.node == t.node && top.neg != t.neg => {
            stack.pop();
        }
        _ => stack.push(t),
    }
}

struct Engine<'r> {
    rules: &'r RuleSet,
    group: BlockGroup,
    /// Number of σ indices.
    width: usize,
    singles: Vec<Single>,
    singles_from: Vec<Vec<usize>>,
    multis: Vec<Multi>,
    block_moves: Vec<(RuleRef, Vec<Generator>, Vec<Generator>)>,
    orbit_of: Vec<u32>,
    members: Vec<Vec<Node>>,
    /// Tree edge into each node: parent node and the single move taken.
    parent: Vec<Option<(Node, u32)>>,
    append_paths: BTreeMap<(Id, Generator), Rc<Path>>,
}

impl<'r> Engine<'r> {
    fn new(rules: &'r RuleSet, words: &[&[Generator]]) -> Option<Self> {
        let n = rules.degree();
        if n == 0 || n > MAX_BLOCK_DEGREE {
            return None;
        }
        let alphabet = rules.block_alphabet();
        let letters_of_words = words.iter().flat_map(|w| w.iter());
        for g in letters_of_words {
            let ok = if g.is_block() {
                alphabet.contains(g)
            } else {
                rules.find(&[*g, g.inverse()], &[]).is_some()
            };
            if !ok {
                return None;
            }
        }
        let group = BlockGroup::generate(n, &alphabet)?;
        let mut block_moves = Vec::new();
        let mut singles = Vec::new();
        let mut single_of_rule = BTreeMap::new();
        let mut multis = Vec::new();
        let real = |side: &[Generator]| side.iter().filter(|g| !g.is_block()).count();
        for (idx, r) in rules.rules().iter().enumerate() {
            let variants = || {
                [false, true].into_iter().map(move |inverted| RuleRef { idx, inverted }).filter(|&rr| {
                    !rr.inverted || (rr.simplify(rules) == rr && rr.supported(rules))
                })
            };
            match (real(&r.lhs), real(&r.rhs)) {
                (0, 0) => {
                    for rr in variants() {
                        let lhs = rr.lhs(rules);
                        if !lhs.is_empty() {
                            block_moves.push((rr, lhs, rr.rhs(rules)));
                        }
                    }
                }
                (1, 1) => {
                    let plain = RuleRef::plain(idx);
                    let inv = RuleRef { idx, inverted: true }.simplify(rules);
                    if !inv.supported(rules) {
                        return None;
                    }
                    let l = crossings(&r.lhs, n);
                    let rc = crossings(&r.rhs, n);
                    if l[0].1.neg != rc[0].1.neg {
                        return None;
                    }
                    let (pos, neg) = if l[0].1.neg { (inv, plain) } else { (plain, inv) };
                    let (pl, pr) = (crossings(&pos.lhs(rules), n), crossings(&pos.rhs(rules), n));
                    let shift = pl[0].0.inverse().then(&pr[0].0);
                    single_of_rule.insert(idx, singles.len());
                    singles.push(Single {
                        rule: idx,
                        pos,
                        neg,
                        from: pl[0].1.idx,
                        to: pr[0].1.idx,
                        table: group.right_table(&shift),
                        rev: usize::MAX,
                    });
                }
                (2, 0) if r.lhs[0] == r.lhs[1].inverse() && r.lhs.len() == 2 => {}
                (0, 2) if r.lhs.is_empty() && r.rhs.len() == 2 && r.rhs[0] == r.rhs[1].inverse() => {}
                (a, b) if a >= 1 && b >= 1 => {
                    for rr in variants() {
                        multis.push(Multi {
                            rr,
                            lhs: crossings(&rr.lhs(rules), n),
                            rhs: crossings(&rr.rhs(rules), n),
                            tables: None,
                        });
                    }
                }
                _ => return None,
            }
        }
        for k in 0..singles.len() {
            singles[k].rev = single_of_rule[&rules.reverse_of(singles[k].rule)];
        }
        let width = n - 1;
        let mut singles_from = alloc::vec![Vec::new(); width + 1];
        for (k, s) in singles.iter().enumerate() {
            singles_from[s.from as usize].push(k);
        }
        let mut engine = Engine {
            rules,
            group,
            width,
            singles,
            singles_from,
            multis,
            block_moves,
            orbit_of: Vec::new(),
            members: Vec::new(),
            parent: Vec::new(),
            append_paths: BTreeMap::new(),
        };
        engine.build_orbits();
        Some(engine)
    }

    fn node(&self, q: Id, idx: u8) -> Node {
        q * self.width as u32 + (idx as u32 - 1)
    }

    fn split_node(&self, nd: Node) -> (Id, u8) {
        (nd / self.width as u32, (nd % self.width as u32) as u8 + 1)
    }

    fn canon(&self, nd: Node) -> Node {
        self.members[self.orbit_of[nd as usize] as usize][0]
    }

    fn build_orbits(&mut self) {
        let total = self.group.elems.len() * self.width;
        self.orbit_of = alloc::vec![u32::MAX; total];
        self.parent = alloc::vec![None; total];
        for start in 0..total as Node {
            if self.orbit_of[start as usize] != u32::MAX {
                continue;
            }
            let o = self.members.len() as u32;
            let mut list = alloc::vec![start];
            self.orbit_of[start as usize] = o;
            let mut head = 0;
            while head < list.len() {
                let nd = list[head];
                head += 1;
                let (q, i) = self.split_node(nd);
                for &s in &self.singles_from[i as usize] {
                    let sm = &self.singles[s];
                    let next = self.node(sm.table[q as usize], sm.to);
                    if self.orbit_of[next as usize] == u32::MAX {
                        self.orbit_of[next as usize] = o;
                        self.parent[next as usize] = Some((nd, s as u32));
                        list.push(next);
                    }
                }
            }
            self.members.push(list);
        }
    }

    fn abstract_word(&self, letters: &[Generator]) -> State {
        let mut q = Sp::identity(self.group.degree);
        let mut out = Vec::new();
        for &g in letters {
            if g.is_block() {
                q.push(g);
            } else {
                let nd = self.canon(self.node(self.group.id(&q), g.index));
                push_reduced(&mut out, Tau { node: nd, neg: g.kind == Kind::SigmaInv });
            }
        }
        State { letters: out, total: self.group.id(&q) }
    }

    fn multi_tables(&mut self, m: usize) -> Rc<Vec<Vec<Id>>> {
        if let Some(t) = &self.multis[m].tables {
            return t.clone();
        }
        let mm = &self.multis[m];
        let mut tables = alloc::vec![self.group.right_table(&mm.lhs[0].0.inverse())];
        for (c, _) in mm.lhs.iter().skip(1).chain(&mm.rhs) {
            tables.push(self.group.right_table(c));
        }
        let t = Rc::new(tables);
        self.multis[m].tables = Some(t.clone());
        t
    }

    fn expand(&mut self, s: &State, max_len: usize, out: &mut Vec<(AbsMove, State)>) {
        let len = s.letters.len();
        let mut seen = BTreeSet::new();
        for mi in 0..self.multis.len() {
            let (m, mr) = (self.multis[mi].lhs.len(), self.multis[mi].rhs.len());
            if len - m.min(len) + mr > max_len {
                continue;
            }
            let mut tables = None;
            for at in 0..=len.saturating_sub(m) {
                if at + m > len {
                    break;
                }
                let mm = &self.multis[mi];
                if (0..m).any(|j| s.letters[at + j].neg != mm.lhs[j].1.neg) {
                    continue;
                }
                let tabs = match &tables {
                    Some(t) => Rc::clone(t),
                    None => {
                        let t = self.multi_tables(mi);
                        tables = Some(t.clone());
                        t
                    }
                };
                let mm = &self.multis[mi];
                let first = s.letters[at].node;
                let orbit = &self.members[self.orbit_of[first as usize] as usize];
                for &nd in orbit {
                    let (q, i) = self.split_node(nd);
                    if i != mm.lhs[0].1.idx {
                        continue;
                    }
                    let x = tabs[0][q as usize];
                    let matches = (1..m).all(|j| {
                        let c = tabs[j][x as usize];
                        self.canon(self.node(c, mm.lhs[j].1.idx)) == s.letters[at + j].node
                    });
                    if !matches {
                        continue;
                    }
                    let mut letters = Vec::with_capacity(len - m + mr);
                    for &t in &s.letters[..at] {
                        push_reduced(&mut letters, t);
                    }
                    for (j, (_, c)) in mm.rhs.iter().enumerate() {
                        let q2 = tabs[m + j][x as usize];
                        push_reduced(&mut letters, Tau { node: self.canon(self.node(q2, c.idx)), neg: c.neg });
                    }
                    for &t in &s.letters[at + m..] {
                        push_reduced(&mut letters, t);
                    }
                    let next = State { letters, total: s.total };
                    if seen.insert(next.clone()) {
                        out.push((AbsMove { at, multi: mi, x }, next));
                    }
                }
            }
        }
    }

    // ---- literal replay ----

    fn real_positions(word: &[Generator]) -> Vec<usize> {
        word.iter().enumerate().filter(|(_, g)| !g.is_block()).map(|(i, _)| i).collect()
    }

    fn block_range(word: &[Generator], b: usize) -> (usize, usize) {
        let pos = Self::real_positions(word);
        let start = if b == 0 { 0 } else { pos[b - 1] + 1 };
        let end = if b == pos.len() { word.len() } else { pos[b] };
        (start, end)
    }

    fn letter_node(&self, word: &[Generator], k: usize) -> Node {
        let p = Self::real_positions(word)[k];
        let q = self.group.id(&self.group.image(&word[..p]));
        self.node(q, word[p].index)
    }

    fn append_path(&mut self, g: Id, x: Generator) -> Option<Rc<Path>> {
        if let Some(p) = self.append_paths.get(&(g, x)) {
            return Some(p.clone());
        }
        let mut start = self.group.words[g as usize].clone();
        start.push(x);
        let mut gx = self.group.elems[g as usize].clone();
        gx.push(x);
        let target = self.group.words[self.group.id(&gx) as usize].clone();
        let cap = start.len();
        let moves = &self.block_moves;
        let found = bidirectional(start, target, usize::MAX, PATH_STATES, |w: &Vec<Generator>, out| {
            for (mi, (_, lhs, rhs)) in moves.iter().enumerate() {
                if w.len() - lhs.len().min(w.len()) + rhs.len() > cap {
                    continue;
                }
                for p in 0..=w.len().saturating_sub(lhs.len()) {
                    if w.len() >= p + lhs.len() && w[p..p + lhs.len()] == lhs[..] {
                        let mut next = Vec::with_capacity(w.len() + rhs.len());
                        next.extend_from_slice(&w[..p]);
                        next.extend_from_slice(rhs);
                        next.extend_from_slice(&w[p + lhs.len()..]);
                        out.push(((mi, p), next));
                    }
                }
            }
        })
        .ok()?;
        let mut path: Path = found.from_a.iter().map(|((mi, p), _)| (moves[*mi].0, *p)).collect();
        for ((mi, p), _) in found.from_b.iter().rev() {
            path.push((moves[*mi].0.reverse(self.rules), *p));
        }
        let path = Rc::new(path);
        self.append_paths.insert((g, x), path.clone());
        Some(path)
    }

    /// Moves turning the block word `u` into the canonical word of its image.
    fn block_path(&mut self, u: &[Generator]) -> Option<Path> {
        let mut g: Id = 0;
        let mut out = Vec::new();
        for &x in u {
            out.extend(self.append_path(g, x)?.iter().copied());
            let mut next = self.group.elems[g as usize].clone();
            next.push(x);
            g = self.group.id(&next);
        }
        Some(out)
    }

    fn transform_block(&mut self, t: &mut Tracer, b: usize, target: &[Generator]) -> Option<()> {
        let (start, end) = Self::block_range(&t.word, b);
        let u = t.word[start..end].to_vec();
        if u == target {
            return Some(());
        }
        let there = self.block_path(&u)?;
        let back = self.block_path(target)?;
        for &(rr, p) in &there {
            t.apply(rr, start + p).ok()?;
        }
        for &(rr, p) in back.iter().rev() {
            t.apply(rr.reverse(self.rules), start + p).ok()?;
        }
        debug_assert_eq!(&t.word[start..start + target.len()], target);
        Some(())
    }

    /// Rewrites block `b` so that it ends with `suffix`.
    fn reshape_before(&mut self, t: &mut Tracer, b: usize, suffix: &[Generator]) -> Option<()> {
        let (start, end) = Self::block_range(&t.word, b);
        let g = self.group.image(&t.word[start..end]).then(&self.group.image(suffix).inverse());
        let mut target = self.group.words[self.group.id(&g) as usize].clone();
        target.extend_from_slice(suffix);
        self.transform_block(t, b, &target)
    }

    /// Rewrites block `b` so that it starts with `prefix`.
    fn reshape_after(&mut self, t: &mut Tracer, b: usize, prefix: &[Generator]) -> Option<()> {
        let (start, end) = Self::block_range(&t.word, b);
        let g = self.group.image(prefix).inverse().then(&self.group.image(&t.word[start..end]));
        let mut target = prefix.to_vec();
        target.extend_from_slice(&self.group.words[self.group.id(&g) as usize]);
        self.transform_block(t, b, &target)
    }

    fn apply_single(&mut self, t: &mut Tracer, k: usize, s: usize) -> Option<()> {
        let p = Self::real_positions(&t.word)[k];
        let neg = t.word[p].kind == Kind::SigmaInv;
        let rr = if neg { self.singles[s].neg } else { self.singles[s].pos };
        let lhs = rr.lhs(self.rules);
        let r = lhs.iter().position(|g| !g.is_block())?;
        self.reshape_before(t, k, &lhs[..r])?;
        self.reshape_after(t, k + 1, &lhs[r + 1..])?;
        let p = Self::real_positions(&t.word)[k];
        t.apply(rr, p - r).ok()
    }

    /// Moves crossing `k` to the orbit node `target` through the orbit tree.
    fn move_letter(&mut self, t: &mut Tracer, k: usize, target: Node) -> Option<()> {
        let mut cur = self.letter_node(&t.word, k);
        if cur == target {
            return Some(());
        }
        let mut up = Vec::new();
        while let Some((p, s)) = self.parent[cur as usize] {
            up.push(self.singles[s as usize].rev);
            cur = p;
        }
        let mut down = Vec::new();
        let mut nd = target;
        while let Some((p, s)) = self.parent[nd as usize] {
            down.push(s as usize);
            nd = p;
        }
        if cur != nd {
            return None;
        }
        down.reverse();
        for s in up.into_iter().chain(down) {
            self.apply_single(t, k, s)?;
        }
        debug_assert_eq!(self.letter_node(&t.word, k), target);
        Some(())
    }

    /// Brings the literal word to the canonical representative of its state.
    fn canonicalize(&mut self, t: &mut Tracer) -> Option<()> {
        loop {
            let m = Self::real_positions(&t.word).len();
            for k in 0..m {
                let nd = self.letter_node(&t.word, k);
                self.move_letter(t, k, self.canon(nd))?;
            }
            for b in 0..=m {
                let (start, end) = Self::block_range(&t.word, b);
                let g = self.group.image(&t.word[start..end]);
                let c = self.group.words[self.group.id(&g) as usize].clone();
                self.transform_block(t, b, &c)?;
            }
            let pos = Self::real_positions(&t.word);
            let pair = pos.windows(2).find(|w| w[0] + 1 == w[1] && t.word[w[0]] == t.word[w[1]].inverse());
            match pair {
                Some(w) => {
                    let g = t.word[w[0]];
                    let r = self.rules.find(&[g, g.inverse()], &[])?;
                    t.elementary(r, w[0]).ok()?;
                }
                None => return Some(()),
            }
        }
    }

    fn realize(&mut self, t: &mut Tracer, mv: AbsMove) -> Option<()> {
        let rr = self.multis[mv.multi].rr;
        let targets: Vec<Node> = self.multis[mv.multi]
            .lhs
            .iter()
            .map(|(c, cr)| {
                let q = self.group.id(&self.group.elems[mv.x as usize].then(c));
                self.node(q, cr.idx)
            })
            .collect();
        for (j, &nd) in targets.iter().enumerate() {
            self.move_letter(t, mv.at + j, nd)?;
        }
        let lhs = rr.lhs(self.rules);
        let mut parts: Vec<Vec<Generator>> = alloc::vec![Vec::new()];
        for &g in &lhs {
            if g.is_block() {
                parts.last_mut().unwrap().push(g);
            } else {
                parts.push(Vec::new());
            }
        }
        let m = targets.len();
        self.reshape_before(t, mv.at, &parts[0])?;
        for (j, part) in parts.iter().enumerate().take(m).skip(1) {
            self.transform_block(t, mv.at + j, part)?;
        }
        self.reshape_after(t, mv.at + m, &parts[m])?;
        let p = Self::real_positions(&t.word)[mv.at] - parts[0].len();
        debug_assert_eq!(&t.word[p..p + lhs.len()], &lhs[..]);
        t.apply(rr, p).ok()
    }

    fn replay(&mut self, start: &[Generator], path: &[(AbsMove, State)]) -> Option<Vec<(usize, usize)>> {
        let rules = self.rules;
        let mut t = Tracer::new(rules, start.to_vec());
        self.canonicalize(&mut t)?;
        for (mv, expect) in path {
            self.realize(&mut t, *mv)?;
            self.canonicalize(&mut t)?;
            if self.abstract_word(&t.word) != *expect {
                return None;
            }
        }
        Some(t.steps)
    }
}

/// Runs the search, or returns `None` when the rule set or the words fall
/// outside what the abstraction supports.
pub(super) fn search(w1: &BraidWord, w2: &BraidWord, rules: &RuleSet, budget: SearchBudget) -> Option<SearchOutcome> {
    let mut engine = Engine::new(rules, &[w1.letters(), w2.letters()])?;
    let a = engine.abstract_word(w1.letters());
    let b = engine.abstract_word(w2.letters());
    let max_len = budget.max_word_length;
    let result = bidirectional(a, b, budget.max_depth, budget.max_states, |s: &State, out| {
        engine.expand(s, max_len, out)
    });
    match result {
        Err(e) => Some(SearchOutcome::Exhausted(e)),
        Ok(meet) => {
            let mut steps = engine.replay(w1.letters(), &meet.from_a)?;
            let back = engine.replay(w2.letters(), &meet.from_b)?;
            steps.extend(reverse_steps(rules, &back));
            Some(SearchOutcome::Found(to_script_steps(rules, &steps)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::rules::{defining_rules, reduced_rules, standard_rules};
    use crate::rewrite::{verify_derivation, DerivationScript};

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn prove(a: &str, b: &str, rules: &RuleSet) -> DerivationScript {
        let (a, b) = (w(a), w(b));
        match search(&a, &b, rules, SearchBudget::new(8, 40, 50_000)).expect("engine applies") {
            SearchOutcome::Found(steps) => {
                let s = DerivationScript { start: a, steps, end: b };
                assert_eq!(verify_derivation(&s, rules), Ok(()));
                s
            }
            SearchOutcome::Exhausted(e) => panic!("{e:?}"),
        }
    }

    #[test]
    fn group_sizes() {
        for n in 1..=4usize {
            let rules = standard_rules(n);
            let g = BlockGroup::generate(n, &rules.block_alphabet()).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(g.elems.len(), fact << n);
            for (k, word) in g.words.iter().enumerate() {
                assert_eq!(word.len(), g.elems[k].standard_length());
            }
        }
        let rules = reduced_rules(4);
        let g = BlockGroup::generate(4, &rules.block_alphabet()).unwrap();
        assert_eq!(g.elems.len(), 384);
    }

    #[test]
    fn block_only_equalities() {
        prove("n=3; v1 t1 v1", "n=3; t2", &standard_rules(3));
        prove("n=3; v1 v2 v1 t1 t3", "n=3; t3 t1 v2 v1 v2", &defining_rules(3));
    }

    #[test]
    fn conjugated_crossings() {
        prove("n=3; v1 s2 v1", "n=3; v2 s1 v2", &defining_rules(3));
        prove("n=3; v1 S2 v1 t3", "n=3; v2 S1 v2 t3", &defining_rules(3));
        prove("n=3; s1 s2 s1 v1", "n=3; s2 s1 s2 v1", &defining_rules(3));
        prove("n=3; S1 S2 S1", "n=3; S2 S1 S2", &defining_rules(3));
    }

    #[test]
    fn reduced_substitutions() {
        // σ_2 = v_1 v_2 σ_1 v_2 v_1 in the reduced presentation
        prove("n=3; v1 v2 s1 v2 v1 t1", "n=3; t1 v1 v2 s1 v2 v1", &reduced_rules(3));
    }

    #[test]
    fn declines_unsupported_words() {
        let rules = reduced_rules(3);
        assert!(search(&w("n=3; s2"), &w("n=3; s2"), &rules, SearchBudget::default()).is_none());
        assert!(search(&w("n=7; s1"), &w("n=7; s1"), &standard_rules(7), SearchBudget::default()).is_none());
    }
}
