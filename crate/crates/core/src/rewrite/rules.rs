//! Rewrite rules instantiated from group presentations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::word::Generator;

/// One oriented relation instance `lhs → rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub lhs: Vec<Generator>,
    pub rhs: Vec<Generator>,
    /// Relation family the instance comes from, e.g. `rel-sss`.
    pub origin: String,
    /// Consequence of the defining relations rather than one of them.
    pub derived: bool,
}

impl RewriteRule {
    /// Smallest degree on which both sides are valid.
    pub fn min_degree(&self) -> usize {
        self.lhs.iter().chain(&self.rhs).map(|g| g.max_position()).max().unwrap_or(1)
    }

    pub fn real_count(side: &[Generator]) -> usize {
        side.iter().filter(|g| g.kind.is_real()).count()
    }
}

/// A finite, symmetric set of rule instances on a fixed degree.
///
/// Every rule `x` comes with its reverse `x:rev`. Iteration follows
/// construction order, which is fixed for each presentation.
#[derive(Debug, Clone)]
pub struct RuleSet {
    degree: usize,
    rules: Vec<RewriteRule>,
    by_name: BTreeMap<String, usize>,
    by_sides: BTreeMap<(Vec<Generator>, Vec<Generator>), usize>,
}

/// Suffix marking the reverse orientation of a rule.
pub const REV: &str = ":rev";

impl RuleSet {
    pub fn empty(degree: usize) -> Self {
        RuleSet { degree, rules: Vec::new(), by_name: BTreeMap::new(), by_sides: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&RewriteRule> {
        self.by_name.get(name).map(|&i| &self.rules[i])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    /// Index of a rule with exactly these sides.
    pub fn find(&self, lhs: &[Generator], rhs: &[Generator]) -> Option<usize> {
        self.by_sides.get(&(lhs.to_vec(), rhs.to_vec())).copied()
    }

    /// Index of the reverse orientation of rule `i`.
    pub fn reverse_of(&self, i: usize) -> usize {
        let r = &self.rules[i];
        let name = match r.name.strip_suffix(REV) {
            Some(base) => String::from(base),
            None => format!("{}{}", r.name, REV),
        };
        self.by_name[&name]
    }

    /// Adds `name: lhs → rhs` and its reverse. Returns false (and adds
    /// nothing) if the name is taken, the sides coincide, or a letter does
    /// not fit the degree.
    pub fn add_pair(
        &mut self,
        name: &str,
        lhs: Vec<Generator>,
        rhs: Vec<Generator>,
        origin: &str,
        derived: bool,
    ) -> bool {
        let fits = lhs.iter().chain(&rhs).all(|g| g.fits(self.degree));
        let rev = format!("{name}{REV}");
        if lhs == rhs || !fits || self.by_name.contains_key(name) || self.by_name.contains_key(&rev) {
            return false;
        }
        self.insert(RewriteRule {
            name: String::from(name),
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            origin: String::from(origin),
            derived,
        });
        self.insert(RewriteRule { name: rev, lhs: rhs, rhs: lhs, origin: String::from(origin), derived });
        true
    }

    fn insert(&mut self, rule: RewriteRule) {
        let i = self.rules.len();
        self.by_name.insert(rule.name.clone(), i);
        self.by_sides.entry((rule.lhs.clone(), rule.rhs.clone())).or_insert(i);
        self.rules.push(rule);
    }

    /// Adds every rule of `other` whose name is not yet present.
    pub fn extend_from(&mut self, other: &RuleSet) {
        for r in other.rules.iter().filter(|r| !r.name.ends_with(REV)) {
            self.add_pair(&r.name, r.lhs.clone(), r.rhs.clone(), &r.origin, r.derived);
        }
    }

    /// Copy without the rules whose origin is one of `families`.
    pub fn without(&self, families: &[&str]) -> RuleSet {
        let mut out = RuleSet::empty(self.degree);
        for r in self.rules.iter().filter(|r| !r.name.ends_with(REV) && !families.contains(&r.origin.as_str())) {
            out.add_pair(&r.name, r.lhs.clone(), r.rhs.clone(), &r.origin, r.derived);
        }
        out
    }

    /// Rules whose lhs and rhs consist of `v` and `γ` letters only.
    pub(crate) fn block_alphabet(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> = self
            .rules
            .iter()
            .flat_map(|r| r.lhs.iter().chain(&r.rhs))
            .filter(|g| g.is_block())
            .copied()
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

use Generator as G;

fn s(i: usize) -> G {
    G::sigma(i as u8)
}
fn si(i: usize) -> G {
    G::sigma_inv(i as u8)
}
fn v(i: usize) -> G {
    G::v(i as u8)
}
fn t(i: usize) -> G {
    G::gamma(i as u8)
}

fn add_free_cancellation(set: &mut RuleSet, indices: impl Iterator<Item = usize>) {
    for i in indices {
        set.add_pair(&format!("free@s{i}"), alloc::vec![s(i), si(i)], Vec::new(), "free", false);
        set.add_pair(&format!("free@S{i}"), alloc::vec![si(i), s(i)], Vec::new(), "free", false);
    }
}

/// The defining relations of the standard presentation plus free
/// cancellation of `σ_i σ_i⁻¹`, without the equivalent alternative forms.
///
/// Instance counts per family at degree `n ≥ 3` (each contributes two
/// oriented rules): `(n-2)(n-3)/2` far σσ commutations, `n-2` braid
/// relations, `n-1` v-involutions, `(n-2)(n-3)/2` far vv commutations,
/// `n-2` vvv relations, `(n-2)(n-3)` far σv commutations, `n-2` mixed vσv
/// relations, `n` bar involutions, `n(n-1)/2` bar commutations,
/// `(n-1)(n-2)` bar/v and `(n-1)(n-2)` bar/σ commutations, `n-1` bar
/// slides, `n-1` twisted relations, and `2(n-1)` free cancellations.
pub fn defining_rules(n: usize) -> RuleSet {
    let mut set = RuleSet::empty(n);
    let m = n.saturating_sub(1); // number of σ / v indices
    for i in 1..=m {
        for j in i + 2..=m {
            set.add_pair(&format!("rel-height-ss@i={i},j={j}"), alloc::vec![s(i), s(j)], alloc::vec![s(j), s(i)], "rel-height-ss", false);
        }
    }
    for i in 1..=n.saturating_sub(2) {
        set.add_pair(
            &format!("rel-sss@i={i}"),
            alloc::vec![s(i), s(i + 1), s(i)],
            alloc::vec![s(i + 1), s(i), s(i + 1)],
            "rel-sss",
            false,
        );
    }
    for i in 1..=m {
        set.add_pair(&format!("rel-inverse-v@i={i}"), alloc::vec![v(i), v(i)], Vec::new(), "rel-inverse-v", false);
    }
    for i in 1..=m {
        for j in i + 2..=m {
            set.add_pair(&format!("rel-height-vv@i={i},j={j}"), alloc::vec![v(i), v(j)], alloc::vec![v(j), v(i)], "rel-height-vv", false);
        }
    }
    for i in 1..=n.saturating_sub(2) {
        set.add_pair(
            &format!("rel-vvv@i={i}"),
            alloc::vec![v(i), v(i + 1), v(i)],
            alloc::vec![v(i + 1), v(i), v(i + 1)],
            "rel-vvv",
            false,
        );
    }
    for i in 1..=m {
        for j in 1..=m {
            if i.abs_diff(j) > 1 {
                set.add_pair(&format!("rel-height-sv@i={i},j={j}"), alloc::vec![s(i), v(j)], alloc::vec![v(j), s(i)], "rel-height-sv", false);
            }
        }
    }
    for i in 1..=n.saturating_sub(2) {
        set.add_pair(
            &format!("rel-vsv@i={i}"),
            alloc::vec![v(i), s(i + 1), v(i)],
            alloc::vec![v(i + 1), s(i), v(i + 1)],
            "rel-vsv",
            false,
        );
    }
    for i in 1..=n {
        set.add_pair(&format!("rel-inverse-b@i={i}"), alloc::vec![t(i), t(i)], Vec::new(), "rel-inverse-b", false);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            set.add_pair(&format!("rel-height-bb@i={i},j={j}"), alloc::vec![t(i), t(j)], alloc::vec![t(j), t(i)], "rel-height-bb", false);
        }
    }
    for i in 1..=m {
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            set.add_pair(&format!("rel-height-bv@i={i},j={j}"), alloc::vec![t(j), v(i)], alloc::vec![v(i), t(j)], "rel-height-bv", false);
        }
    }
    for i in 1..=m {
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            set.add_pair(&format!("rel-height-sb@i={i},j={j}"), alloc::vec![s(i), t(j)], alloc::vec![t(j), s(i)], "rel-height-sb", false);
        }
    }
    for i in 1..=m {
        set.add_pair(&format!("rel-bv@i={i}"), alloc::vec![t(i + 1), v(i)], alloc::vec![v(i), t(i)], "rel-bv", false);
    }
    for i in 1..=m {
        set.add_pair(
            &format!("rel-twist-III@i={i}"),
            alloc::vec![v(i), s(i), v(i)],
            alloc::vec![t(i + 1), t(i), s(i), t(i), t(i + 1)],
            "rel-twist-III",
            false,
        );
    }
    add_free_cancellation(&mut set, 1..=m);
    set
}

/// Alternative forms equivalent to defining relations, flagged `derived`.
fn add_alternative_forms(set: &mut RuleSet) {
    let n = set.degree();
    let m = n.saturating_sub(1);
    for i in 1..=n.saturating_sub(2) {
        set.add_pair(
            &format!("relC-vsv@i={i}"),
            alloc::vec![s(i + 1)],
            alloc::vec![v(i), v(i + 1), s(i), v(i + 1), v(i)],
            "relC-vsv",
            true,
        );
    }
    for i in 1..=m {
        set.add_pair(&format!("relC-vb@i={i}"), alloc::vec![t(i + 1)], alloc::vec![v(i), t(i), v(i)], "relC-vb", true);
        set.add_pair(&format!("rel-vb@i={i}"), alloc::vec![t(i), v(i)], alloc::vec![v(i), t(i + 1)], "rel-vb", true);
        set.add_pair(
            &format!("rel-twist-III-negative@i={i}"),
            alloc::vec![v(i), si(i), v(i)],
            alloc::vec![t(i + 1), t(i), si(i), t(i), t(i + 1)],
            "rel-twist-III-negative",
            true,
        );
    }
}

/// Defining relations, free cancellation, and the alternative forms of the
/// mixed, bar-slide and twisted relations (flagged `derived`).
pub fn standard_rules(n: usize) -> RuleSet {
    let mut set = defining_rules(n);
    add_alternative_forms(&mut set);
    set
}

/// The reduced presentation on `σ_1, γ_1, v_1, …, v_{n-1}`, plus free
/// cancellation of `σ_1 σ_1⁻¹`.
pub fn reduced_rules(n: usize) -> RuleSet {
    let mut set = RuleSet::empty(n);
    let m = n.saturating_sub(1);
    for i in 1..=m {
        set.add_pair(&format!("relB-inverse-v@i={i}"), alloc::vec![v(i), v(i)], Vec::new(), "relB-inverse-v", false);
    }
    for i in 1..=m {
        for j in i + 2..=m {
            set.add_pair(&format!("relB-height-vv@i={i},j={j}"), alloc::vec![v(i), v(j)], alloc::vec![v(j), v(i)], "relB-height-vv", false);
        }
    }
    for i in 1..=n.saturating_sub(2) {
        set.add_pair(
            &format!("relB-vvv@i={i}"),
            alloc::vec![v(i), v(i + 1), v(i)],
            alloc::vec![v(i + 1), v(i), v(i + 1)],
            "relB-vvv",
            false,
        );
    }
    if n >= 4 {
        let conj = [v(2), v(3), v(1), v(2), s(1), v(2), v(1), v(3), v(2)];
        let mut lhs = alloc::vec![s(1)];
        lhs.extend_from_slice(&conj);
        let mut rhs = conj.to_vec();
        rhs.push(s(1));
        set.add_pair("relB-height-ss", lhs, rhs, "relB-height-ss", false);
    }
    if n >= 3 {
        let a = [v(1), s(1), v(1)];
        let b = [v(2), s(1), v(2)];
        set.add_pair(
            "relB-sss",
            [a, b, a].concat(),
            [b, a, b].concat(),
            "relB-sss",
            false,
        );
    }
    for j in 3..=m {
        set.add_pair(&format!("relB-height-sv@j={j}"), alloc::vec![s(1), v(j)], alloc::vec![v(j), s(1)], "relB-height-sv", false);
    }
    if n >= 1 {
        set.add_pair("relB-inverse-b", alloc::vec![t(1), t(1)], Vec::new(), "relB-inverse-b", false);
    }
    for j in 2..=m {
        set.add_pair(&format!("relB-height-bv@j={j}"), alloc::vec![t(1), v(j)], alloc::vec![v(j), t(1)], "relB-height-bv", false);
    }
    if n >= 2 {
        set.add_pair(
            "relB-height-bb",
            alloc::vec![t(1), v(1), t(1), v(1)],
            alloc::vec![v(1), t(1), v(1), t(1)],
            "relB-height-bb",
            false,
        );
        set.add_pair(
            "relB-bv",
            alloc::vec![t(1), v(1), t(1), s(1), t(1), v(1), t(1)],
            alloc::vec![s(1)],
            "relB-bv",
            false,
        );
    }
    if n >= 3 {
        set.add_pair(
            "relB-height-sb",
            alloc::vec![t(1), v(1), v(2), s(1), v(2), v(1)],
            alloc::vec![v(1), v(2), s(1), v(2), v(1), t(1)],
            "relB-height-sb",
            false,
        );
    }
    add_free_cancellation(&mut set, 1..=m.min(1));
    set
}

/// Names of the oriented rules in `set` whose name starts with `family@`
/// (or equals `family`), forward orientation only.
pub fn family_instances<'a>(set: &'a RuleSet, family: &str) -> Vec<&'a RewriteRule> {
    set.rules()
        .iter()
        .filter(|r| !r.name.ends_with(REV) && r.origin == family)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Kind;

    fn has(set: &RuleSet, lhs: &[G], rhs: &[G]) -> bool {
        set.find(lhs, rhs).is_some() && set.find(rhs, lhs).is_some()
    }

    #[test]
    fn standard_n1_is_bars_only() {
        let set = standard_rules(1);
        assert_eq!(set.len(), 2);
        assert!(has(&set, &[t(1), t(1)], &[]));
    }

    #[test]
    fn standard_n2_contents() {
        let set = standard_rules(2);
        assert!(has(&set, &[v(1), v(1)], &[]));
        assert!(has(&set, &[t(1), t(1)], &[]));
        assert!(has(&set, &[t(2), t(2)], &[]));
        assert!(has(&set, &[t(1), t(2)], &[t(2), t(1)]));
        assert!(has(&set, &[t(2), v(1)], &[v(1), t(1)]));
        assert!(has(&set, &[v(1), s(1), v(1)], &[t(2), t(1), s(1), t(1), t(2)]));
        assert!(set.rules().iter().all(|r| !r.origin.starts_with("rel-height-ss")
            && !r.origin.starts_with("rel-height-sv")
            && !r.origin.starts_with("rel-height-vv")
            && !r.origin.starts_with("rel-height-sb")
            && !r.origin.starts_with("rel-height-bv")));
    }

    #[test]
    fn standard_n3_has_braid_relation() {
        let set = standard_rules(3);
        assert!(has(&set, &[s(1), s(2), s(1)], &[s(2), s(1), s(2)]));
        assert!(set.get("rel-sss@i=1").is_some());
    }

    #[test]
    fn defining_rule_counts() {
        for n in 3..=7usize {
            let pairs = (n - 2) * (n - 3) / 2
                + (n - 2)
                + (n - 1)
                + (n - 2) * (n - 3) / 2
                + (n - 2)
                + (n - 2) * (n - 3)
                + (n - 2)
                + n
                + n * (n - 1) / 2
                + 2 * (n - 1) * (n - 2)
                + 2 * (n - 1)
                + 2 * (n - 1);
            assert_eq!(defining_rules(n).len(), 2 * pairs, "n={n}");
            let alt = (n - 2) + 3 * (n - 1);
            assert_eq!(standard_rules(n).len(), 2 * (pairs + alt), "n={n}");
        }
    }

    #[test]
    fn every_rule_has_its_reverse() {
        for set in [standard_rules(4), reduced_rules(4)] {
            for (i, r) in set.rules().iter().enumerate() {
                let j = set.reverse_of(i);
                assert_eq!(set.rules()[j].lhs, r.rhs);
                assert_eq!(set.rules()[j].rhs, r.lhs);
                assert_ne!(r.lhs, r.rhs);
                assert!(r.min_degree() <= set.degree());
            }
        }
    }

    #[test]
    fn reduced_contents() {
        let r2 = reduced_rules(2);
        assert!(has(&r2, &[t(1), v(1), t(1), v(1)], &[v(1), t(1), v(1), t(1)]));
        assert!(has(&r2, &[t(1), v(1), t(1), s(1), t(1), v(1), t(1)], &[s(1)]));
        assert!(r2.rules().iter().all(|r| r.lhs.iter().chain(&r.rhs).all(|g| g.kind != Kind::V || g.index < 2)));
        assert!(r2.get("relB-height-ss").is_none());
        let r4 = reduced_rules(4);
        assert!(has(&r4, &[s(1), v(3)], &[v(3), s(1)]));
        assert!(r4.get("relB-height-ss").is_some());
        assert!(reduced_rules(3).get("relB-height-ss").is_none());
    }
}
