//! Gauss data of twisted link diagrams and closures of braid words.
//!
//! Crossing slots 1 and 2 are incoming, 3 and 4 outgoing, and a strand
//! entering at slot 1 leaves at slot 4, one entering at slot 2 leaves at
//! slot 3. A bar is entered at slot 1 and left at slot 2. Virtual crossings
//! leave no trace.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::word::{BraidWord, Kind};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SiteId(pub String);

impl SiteId {
    pub fn new(s: impl Into<String>) -> Self {
        SiteId(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint {
    pub site: SiteId,
    pub slot: u8,
}

impl Endpoint {
    pub fn new(site: impl Into<String>, slot: u8) -> Self {
        Endpoint { site: SiteId(site.into()), slot }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.site, self.slot)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub id: SiteId,
    /// +1 or -1.
    pub sign: i8,
}

/// Real crossings with signs, bars, arcs between site endpoints, components
/// without sites, and the total component count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussData {
    pub crossings: Vec<Crossing>,
    pub bars: Vec<SiteId>,
    /// Directed arcs `(from, to)`: from an outgoing slot to an incoming one.
    pub arcs: Vec<(Endpoint, Endpoint)>,
    pub free_loops: usize,
    pub mu: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiteKind {
    Crossing(i8),
    Bar,
}

impl SiteKind {
    fn is_incoming(self, slot: u8) -> bool {
        match self {
            SiteKind::Crossing(_) => slot == 1 || slot == 2,
            SiteKind::Bar => slot == 1,
        }
    }

    fn is_outgoing(self, slot: u8) -> bool {
        match self {
            SiteKind::Crossing(_) => slot == 3 || slot == 4,
            SiteKind::Bar => slot == 2,
        }
    }

    fn slots(self) -> core::ops::RangeInclusive<u8> {
        match self {
            SiteKind::Crossing(_) => 1..=4,
            SiteKind::Bar => 1..=2,
        }
    }

    /// Outgoing slot reached from an incoming one.
    fn through(self, slot: u8) -> u8 {
        match (self, slot) {
            (SiteKind::Crossing(_), 1) => 4,
            (SiteKind::Crossing(_), 2) => 3,
            (SiteKind::Bar, 1) => 2,
            _ => unreachable!("not an incoming slot"),
        }
    }
}

impl GaussData {
    pub fn empty() -> Self {
        GaussData { crossings: Vec::new(), bars: Vec::new(), arcs: Vec::new(), free_loops: 0, mu: 0 }
    }

    pub fn sites(&self) -> BTreeMap<SiteId, SiteKind> {
        let mut out = BTreeMap::new();
        for c in &self.crossings {
            out.insert(c.id.clone(), SiteKind::Crossing(c.sign));
        }
        for b in &self.bars {
            out.insert(b.clone(), SiteKind::Bar);
        }
        out
    }

    /// Sets `mu` to the computed component count.
    pub fn with_computed_mu(mut self) -> Result<Self, Error> {
        self.mu = component_count(&self)?;
        Ok(self)
    }
}

/// Where the strand currently at a position came from.
#[derive(Clone)]
enum Tail {
    Source(Endpoint),
    /// Has met no site since top position `s`.
    Top(usize),
}

/// Gauss data of the closure of `w`.
pub fn closure_gauss_data(w: &BraidWord) -> GaussData {
    let n = w.degree();
    let mut tails: Vec<Tail> = (0..n).map(Tail::Top).collect();
    let mut first_in: Vec<Option<Endpoint>> = alloc::vec![None; n];
    let mut gd = GaussData::empty();
    let arrive = |tails: &mut Vec<Tail>, first_in: &mut Vec<Option<Endpoint>>, gd: &mut GaussData, pos: usize, to: Endpoint| {
        match &tails[pos] {
            Tail::Source(e) => gd.arcs.push((e.clone(), to)),
            Tail::Top(s) => first_in[*s] = Some(to),
        }
    };
    let (mut nc, mut nb) = (0, 0);
    for &g in w.letters() {
        let i = g.index as usize - 1;
        match g.kind {
            Kind::Sigma | Kind::SigmaInv => {
                nc += 1;
                let id = format!("c{nc}");
                gd.crossings.push(Crossing { id: SiteId(id.clone()), sign: if g.kind == Kind::Sigma { 1 } else { -1 } });
                arrive(&mut tails, &mut first_in, &mut gd, i, Endpoint::new(id.clone(), 1));
                arrive(&mut tails, &mut first_in, &mut gd, i + 1, Endpoint::new(id.clone(), 2));
                tails[i] = Tail::Source(Endpoint::new(id.clone(), 3));
                tails[i + 1] = Tail::Source(Endpoint::new(id, 4));
            }
            Kind::Gamma => {
                nb += 1;
                let id = format!("g{nb}");
                gd.bars.push(SiteId(id.clone()));
                arrive(&mut tails, &mut first_in, &mut gd, i, Endpoint::new(id.clone(), 1));
                tails[i] = Tail::Source(Endpoint::new(id, 2));
            }
            Kind::V => tails.swap(i, i + 1),
        }
    }
    // bottom position p continues at top position p
    let mut pure_end: Vec<Option<usize>> = alloc::vec![None; n];
    for (q, t) in tails.iter().enumerate() {
        if let Tail::Top(s) = t {
            pure_end[*s] = Some(q);
        }
    }
    for (p, t) in tails.iter().enumerate() {
        if let Tail::Source(e) = t {
            let mut cur = p;
            loop {
                if let Some(to) = &first_in[cur] {
                    gd.arcs.push((e.clone(), to.clone()));
                    break;
                }
                cur = pure_end[cur].expect("site-free strand ends at the bottom");
            }
        }
    }
    // cycles made only of site-free strands
    let mut seen = alloc::vec![false; n];
    for s in 0..n {
        if seen[s] || first_in[s].is_some() {
            continue;
        }
        let mut cur = s;
        let mut closed = false;
        while !seen[cur] {
            seen[cur] = true;
            match pure_end[cur] {
                Some(q) if first_in[q].is_none() => cur = q,
                _ => break,
            }
            if cur == s {
                closed = true;
            }
        }
        if closed {
            gd.free_loops += 1;
        }
    }
    gd.mu = component_count(&gd).expect("closure data is well formed");
    gd
}

struct Index {
    sites: BTreeMap<SiteId, SiteKind>,
    /// Outgoing endpoint to the incoming endpoint it feeds.
    next: BTreeMap<(SiteId, u8), (SiteId, u8)>,
}

fn index(gd: &GaussData) -> Result<Index, Error> {
    let sites = gd.sites();
    let mut next = BTreeMap::new();
    for (a, b) in &gd.arcs {
        next.insert((a.site.clone(), a.slot), (b.site.clone(), b.slot));
    }
    let idx = Index { sites, next };
    for (id, kind) in &idx.sites {
        for slot in kind.slots().filter(|&s| kind.is_outgoing(s)) {
            if !idx.next.contains_key(&(id.clone(), slot)) {
                return Err(Error::InvalidGaussData(format!("dangling endpoint {id}({slot})")));
            }
        }
    }
    Ok(idx)
}

/// Number of cycles of the successor map on incoming endpoints, plus free
/// loops.
pub fn component_count(gd: &GaussData) -> Result<usize, Error> {
    let idx = index(gd)?;
    let mut seen: BTreeSet<(SiteId, u8)> = BTreeSet::new();
    let mut cycles = 0;
    for (id, kind) in &idx.sites {
        for slot in kind.slots().filter(|&s| kind.is_incoming(s)) {
            let start = (id.clone(), slot);
            if seen.contains(&start) {
                continue;
            }
            let mut cur = start.clone();
            loop {
                if !seen.insert(cur.clone()) {
                    if cur != start {
                        return Err(Error::InvalidGaussData(format!("endpoint {}({}) entered twice", cur.0, cur.1)));
                    }
                    break;
                }
                let k = idx.sites.get(&cur.0).ok_or_else(|| Error::InvalidGaussData(format!("unknown site {}", cur.0)))?;
                if !k.is_incoming(cur.1) {
                    return Err(Error::InvalidGaussData(format!("arc enters outgoing slot {}({})", cur.0, cur.1)));
                }
                let out = (cur.0.clone(), k.through(cur.1));
                cur = idx.next[&out].clone();
            }
            cycles += 1;
        }
    }
    Ok(cycles + gd.free_loops)
}

/// Every violated invariant of a Gauss data value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate(gd: &GaussData) -> ValidationReport {
    let mut v = Vec::new();
    let mut sites = BTreeMap::new();
    for c in &gd.crossings {
        if c.sign != 1 && c.sign != -1 {
            v.push(format!("crossing {} has sign {}", c.id, c.sign));
        }
        if sites.insert(c.id.clone(), SiteKind::Crossing(c.sign)).is_some() {
            v.push(format!("site id {} used twice", c.id));
        }
    }
    for b in &gd.bars {
        if sites.insert(b.clone(), SiteKind::Bar).is_some() {
            v.push(format!("site id {b} used twice"));
        }
    }
    let mut as_source: BTreeMap<&Endpoint, usize> = BTreeMap::new();
    let mut as_target: BTreeMap<&Endpoint, usize> = BTreeMap::new();
    for (a, b) in &gd.arcs {
        for (e, outgoing) in [(a, true), (b, false)] {
            match sites.get(&e.site) {
                None => v.push(format!("arc endpoint {e} names an unknown site")),
                Some(k) if !k.slots().contains(&e.slot) => v.push(format!("endpoint {e} has no such slot")),
                Some(k) if outgoing && !k.is_outgoing(e.slot) => v.push(format!("arc leaves incoming endpoint {e}")),
                Some(k) if !outgoing && !k.is_incoming(e.slot) => v.push(format!("arc enters outgoing endpoint {e}")),
                _ => {}
            }
        }
        *as_source.entry(a).or_default() += 1;
        *as_target.entry(b).or_default() += 1;
    }
    for (id, kind) in &sites {
        for slot in kind.slots() {
            let e = Endpoint { site: id.clone(), slot };
            let (map, role) = if kind.is_outgoing(slot) { (&as_source, "source") } else { (&as_target, "target") };
            match map.get(&e).copied().unwrap_or(0) {
                1 => {}
                0 => v.push(format!("endpoint {e} is dangling")),
                k => v.push(format!("endpoint {e} used {k} times as arc {role}")),
            }
        }
    }
    if v.is_empty() {
        match component_count(gd) {
            Ok(mu) if mu != gd.mu => v.push(format!("recorded mu {} but {} components", gd.mu, mu)),
            Ok(_) => {}
            Err(e) => v.push(format!("{e}")),
        }
    }
    ValidationReport { violations: v }
}

/// A bijection of sites preserving kinds, signs and arcs, if one exists.
pub fn gauss_isomorphic(g1: &GaussData, g2: &GaussData) -> Option<BTreeMap<SiteId, SiteId>> {
    if g1.mu != g2.mu || g1.free_loops != g2.free_loops || g1.arcs.len() != g2.arcs.len() {
        return None;
    }
    let (a, b) = (index(g1).ok()?, index(g2).ok()?);
    if a.sites.len() != b.sites.len() {
        return None;
    }
    let count = |ix: &Index, k: SiteKind| ix.sites.values().filter(|&&x| x == k).count();
    for k in [SiteKind::Crossing(1), SiteKind::Crossing(-1), SiteKind::Bar] {
        if count(&a, k) != count(&b, k) {
            return None;
        }
    }
    let prev = |ix: &Index| -> BTreeMap<(SiteId, u8), (SiteId, u8)> {
        ix.next.iter().map(|(k, v)| (v.clone(), k.clone())).collect()
    };
    let (pa, pb) = (prev(&a), prev(&b));
    let order: Vec<SiteId> = a.sites.keys().cloned().collect();
    let mut map: BTreeMap<SiteId, SiteId> = BTreeMap::new();
    let mut used: BTreeSet<SiteId> = BTreeSet::new();
    if extend(&a, &b, &pa, &pb, &order, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &Index,
    b: &Index,
    pa: &BTreeMap<(SiteId, u8), (SiteId, u8)>,
    pb: &BTreeMap<(SiteId, u8), (SiteId, u8)>,
    order: &[SiteId],
    map: &mut BTreeMap<SiteId, SiteId>,
    used: &mut BTreeSet<SiteId>,
) -> bool {
    let root = match order.iter().find(|s| !map.contains_key(*s)) {
        Some(r) => r.clone(),
        None => return true,
    };
    let kind = a.sites[&root];
    let candidates: Vec<SiteId> =
        b.sites.iter().filter(|(id, k)| **k == kind && !used.contains(*id)).map(|(id, _)| id.clone()).collect();
    for c in candidates {
        let mut added = Vec::new();
        if propagate(a, b, pa, pb, root.clone(), c, map, used, &mut added) && extend(a, b, pa, pb, order, map, used) {
            return true;
        }
        for s in added {
            if let Some(t) = map.remove(&s) {
                used.remove(&t);
            }
        }
    }
    false
}

/// Maps `x ↦ y` and everything forced by arcs. Records new pairs in `added`.
#[allow(clippy::too_many_arguments)]
fn propagate(
    a: &Index,
    b: &Index,
    pa: &BTreeMap<(SiteId, u8), (SiteId, u8)>,
    pb: &BTreeMap<(SiteId, u8), (SiteId, u8)>,
    x: SiteId,
    y: SiteId,
    map: &mut BTreeMap<SiteId, SiteId>,
    used: &mut BTreeSet<SiteId>,
    added: &mut Vec<SiteId>,
) -> bool {
    let mut queue = alloc::vec![(x, y)];
    while let Some((x, y)) = queue.pop() {
        match map.get(&x) {
            Some(m) if *m == y => continue,
            Some(_) => return false,
            None => {}
        }
        if used.contains(&y) || a.sites[&x] != b.sites[&y] {
            return false;
        }
        map.insert(x.clone(), y.clone());
        used.insert(y.clone());
        added.push(x.clone());
        let kind = a.sites[&x];
        for slot in kind.slots() {
            let (ea, eb) = if kind.is_outgoing(slot) {
                (a.next.get(&(x.clone(), slot)), b.next.get(&(y.clone(), slot)))
            } else {
                (pa.get(&(x.clone(), slot)), pb.get(&(y.clone(), slot)))
            };
            match (ea, eb) {
                (Some((sa, ka)), Some((sb, kb))) if ka == kb => queue.push((sa.clone(), sb.clone())),
                _ => return false,
            }
        }
    }
    true
}
