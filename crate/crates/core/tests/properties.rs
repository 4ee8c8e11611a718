//! Property tests. Oracles here are written independently of the library.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::sample::Index;
use tvb_core::alexander::braid_from_gauss_data;
use tvb_core::diagram::{closure_gauss_data, component_count, gauss_isomorphic, validate, Crossing};
use tvb_core::markov::{apply_markov, applicable_moves, flip, nabla, MarkovMove};
use tvb_core::quotients::{abelian_invariant, block_image_of, signed_perm_image};
use tvb_core::reduced::{is_reduced, reduce_generators};
use tvb_core::rewrite::{apply_rule, bounded_equal, reduced_rules, standard_rules, verify_derivation};
use tvb_core::{BraidWord, Endpoint, GaussData, Generator, Kind, SearchBudget, SiteId, Verdict};

fn letter(n: usize) -> impl Strategy<Value = Generator> {
    (0u8..4, any::<u8>()).prop_map(move |(k, r)| {
        let kind = if n == 1 { Kind::Gamma } else { [Kind::Sigma, Kind::SigmaInv, Kind::V, Kind::Gamma][k as usize] };
        let range = if kind == Kind::Gamma { n } else { n - 1 } as u8;
        Generator::new(kind, 1 + r % range)
    })
}

fn word_of(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(n), 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_n).prop_flat_map(move |n| word_of(n, max_len))
}

fn pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (1..=max_n).prop_flat_map(move |n| (word_of(n, max_len), word_of(n, max_len)))
}

fn triple(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord)> {
    (1..=max_n).prop_flat_map(move |n| (word_of(n, max_len), word_of(n, max_len), word_of(n, max_len)))
}

fn cat(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.compose(b).unwrap()
}

/// Final position and bar parity of every strand, traced letter by letter.
fn trace_strands(w: &BraidWord) -> Vec<(usize, u8)> {
    let n = w.degree();
    let mut at: Vec<usize> = (0..n).collect();
    let mut parity = vec![0u8; n];
    for g in w.letters() {
        let i = g.index as usize - 1;
        if g.kind == Kind::Gamma {
            parity[at[i]] ^= 1;
        } else {
            at.swap(i, i + 1);
        }
    }
    (0..n).map(|s| (at.iter().position(|&x| x == s).unwrap(), parity[s])).collect()
}

/// Cancels adjacent inverse pairs in the order chosen by `picks`.
fn reduce_in_order(w: &BraidWord, picks: &[Index]) -> Vec<Generator> {
    let mut l = w.letters().to_vec();
    let mut k = 0;
    loop {
        let spots: Vec<usize> = (1..l.len()).filter(|&i| l[i] == l[i - 1].inverse()).collect();
        if spots.is_empty() {
            return l;
        }
        let i = match picks.get(k) {
            Some(ix) => spots[ix.index(spots.len())],
            None => spots[0],
        };
        k += 1;
        l.drain(i - 1..=i);
    }
}

/// Renames every site and reverses every list.
fn relabel(gd: &GaussData, tag: &str) -> GaussData {
    let r = |s: &SiteId| SiteId::new(format!("{tag}{}", s.as_str()));
    let e = |p: &Endpoint| Endpoint { site: r(&p.site), slot: p.slot };
    GaussData {
        crossings: gd.crossings.iter().rev().map(|c| Crossing { id: r(&c.id), sign: c.sign }).collect(),
        bars: gd.bars.iter().rev().map(r).collect(),
        arcs: gd.arcs.iter().rev().map(|(a, b)| (e(a), e(b))).collect(),
        free_loops: gd.free_loops,
        mu: gd.mu,
    }
}

fn arc_set(gd: &GaussData, map: &BTreeMap<SiteId, SiteId>) -> BTreeSet<(SiteId, u8, SiteId, u8)> {
    gd.arcs.iter().map(|(a, b)| (map[&a.site].clone(), a.slot, map[&b.site].clone(), b.slot)).collect()
}

fn is_isomorphism(g1: &GaussData, g2: &GaussData, map: &BTreeMap<SiteId, SiteId>) -> bool {
    let sign2: BTreeMap<&SiteId, i8> = g2.crossings.iter().map(|c| (&c.id, c.sign)).collect();
    let bars2: BTreeSet<&SiteId> = g2.bars.iter().collect();
    let id: BTreeMap<SiteId, SiteId> = g2.bars.iter().chain(g2.crossings.iter().map(|c| &c.id)).map(|s| (s.clone(), s.clone())).collect();
    let images: BTreeSet<&SiteId> = map.values().collect();
    images.len() == map.len()
        && g1.crossings.iter().all(|c| map.get(&c.id).and_then(|t| sign2.get(t)) == Some(&c.sign))
        && g1.bars.iter().all(|b| map.get(b).is_some_and(|t| bars2.contains(t)))
        && map.len() == id.len()
        && g1.free_loops == g2.free_loops
        && arc_set(g1, map) == arc_set(g2, &id)
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head.clone());
            out.push(p);
        }
    }
    out
}

/// Tries every kind-preserving bijection of sites.
fn exhaustive_isomorphic(g1: &GaussData, g2: &GaussData) -> bool {
    if g1.crossings.len() != g2.crossings.len() || g1.bars.len() != g2.bars.len() {
        return false;
    }
    let c2: Vec<SiteId> = g2.crossings.iter().map(|c| c.id.clone()).collect();
    for pc in permutations(&c2) {
        for pb in permutations(&g2.bars) {
            let map: BTreeMap<SiteId, SiteId> = g1
                .crossings
                .iter()
                .map(|c| c.id.clone())
                .zip(pc.iter().cloned())
                .chain(g1.bars.iter().cloned().zip(pb.iter().cloned()))
                .collect();
            if is_isomorphism(g1, g2, &map) {
                return true;
            }
        }
    }
    false
}

/// Every `(pos, rule index)` at which a rule of `rules` applies to `w`.
fn matches(w: &BraidWord, rules: &tvb_core::RuleSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (k, r) in rules.rules().iter().enumerate() {
        for pos in 1..=w.len() + 1 {
            if apply_rule(w, pos, r).is_ok() {
                out.push((pos, k));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_format_round_trip(w in word(6, 30)) {
        let text = w.to_string();
        prop_assert_eq!(BraidWord::parse(&text).unwrap(), w.clone());
        let spaced = text.replace(' ', "   ").replace(';', " ;\t");
        prop_assert_eq!(BraidWord::parse(&spaced).unwrap(), w);
    }

    #[test]
    fn compose_is_associative_with_unit((a, b, c) in triple(6, 12)) {
        prop_assert_eq!(cat(&cat(&a, &b), &c), cat(&a, &cat(&b, &c)));
        let e = BraidWord::identity(a.degree());
        prop_assert_eq!(cat(&e, &a), a.clone());
        prop_assert_eq!(cat(&a, &e), a);
    }

    #[test]
    fn invert_is_an_involution_and_cancels(w in word(6, 30)) {
        prop_assert_eq!(w.invert().invert(), w.clone());
        prop_assert!(cat(&w, &w.invert()).free_reduce().is_empty());
        prop_assert!(cat(&w.invert(), &w).free_reduce().is_empty());
    }

    #[test]
    fn free_reduce_is_confluent(w in word(4, 30), picks in prop::collection::vec(any::<Index>(), 16)) {
        prop_assert_eq!(reduce_in_order(&w, &picks), w.free_reduce().letters().to_vec());
        prop_assert_eq!(w.free_reduce().free_reduce(), w.free_reduce());
    }

    #[test]
    fn embed_commutes_with_free_reduce(w in word(4, 20), s in 0usize..3, t in 0usize..3) {
        prop_assert_eq!(w.embed(s, t).unwrap().free_reduce(), w.free_reduce().embed(s, t).unwrap());
    }

    #[test]
    fn signed_perm_matches_strand_trace((a, b) in pair(6, 20)) {
        let (ta, tb) = (trace_strands(&a), trace_strands(&b));
        let sp = signed_perm_image(&a);
        for (s, &(p, f)) in ta.iter().enumerate() {
            prop_assert_eq!(sp.image(s + 1), p + 1);
            prop_assert_eq!(sp.flips()[s], f);
        }
        prop_assert_eq!(signed_perm_image(&a) == signed_perm_image(&b), ta == tb);
    }

    #[test]
    fn quotient_images_are_homomorphic((a, b) in pair(6, 20)) {
        let ab = cat(&a, &b);
        prop_assert_eq!(signed_perm_image(&ab), signed_perm_image(&a).then(&signed_perm_image(&b)));
        prop_assert_eq!(signed_perm_image(&a.invert()), signed_perm_image(&a).inverse());
        let (x, y, z) = (abelian_invariant(&a), abelian_invariant(&b), abelian_invariant(&ab));
        prop_assert_eq!(z.writhe, x.writhe + y.writhe);
        prop_assert_eq!(z.v_parity, x.v_parity ^ y.v_parity);
        prop_assert_eq!(z.bar_parity, x.bar_parity ^ y.bar_parity);
    }

    #[test]
    fn closures_are_valid(w in word(6, 25)) {
        let gd = closure_gauss_data(&w);
        prop_assert!(validate(&gd).is_valid(), "{:?}", validate(&gd));
        prop_assert_eq!(component_count(&gd).unwrap(), gd.mu);
    }

    #[test]
    fn closure_is_conjugation_invariant((a, b) in pair(5, 10)) {
        let (ab, ba) = (closure_gauss_data(&cat(&a, &b)), closure_gauss_data(&cat(&b, &a)));
        prop_assert!(gauss_isomorphic(&ab, &ba).is_some());
    }

    #[test]
    fn inserted_v_pairs_are_invisible(w in word(5, 12), at in any::<Index>(), i in any::<Index>()) {
        prop_assume!(w.degree() >= 2);
        let mut l = w.letters().to_vec();
        let v = Generator::v(1 + i.index(w.degree() - 1) as u8);
        let p = at.index(l.len() + 1);
        l.splice(p..p, [v, v]);
        let w2 = BraidWord::new(w.degree(), l).unwrap();
        prop_assert!(gauss_isomorphic(&closure_gauss_data(&w), &closure_gauss_data(&w2)).is_some());
    }

    #[test]
    fn gauss_isomorphism_is_an_equivalence(w in word(5, 12), u in word(5, 12)) {
        let g = closure_gauss_data(&w);
        let (g1, g2) = (relabel(&g, "x"), relabel(&relabel(&g, "x"), "y"));
        let m = gauss_isomorphic(&g, &g).unwrap();
        prop_assert!(m.iter().all(|(a, b)| a == b) || is_isomorphism(&g, &g, &m));
        let f = gauss_isomorphic(&g, &g1).unwrap();
        prop_assert!(is_isomorphism(&g, &g1, &f));
        prop_assert!(gauss_isomorphic(&g1, &g).is_some());
        let h = gauss_isomorphic(&g1, &g2).unwrap();
        let composed: BTreeMap<SiteId, SiteId> = f.iter().map(|(a, b)| (a.clone(), h[b].clone())).collect();
        prop_assert!(is_isomorphism(&g, &g2, &composed));
        let gu = closure_gauss_data(&u);
        prop_assert_eq!(gauss_isomorphic(&g, &gu).is_some(), gauss_isomorphic(&gu, &g).is_some());
    }

    #[test]
    fn braiding_round_trips(w in word(5, 12)) {
        let gd = closure_gauss_data(&w);
        let b = braid_from_gauss_data(&gd).unwrap();
        prop_assert!(gauss_isomorphic(&closure_gauss_data(&b), &gd).is_some(), "{} -> {}", w, b);
    }

    #[test]
    fn braiding_relabeled_data_round_trips(w in word(4, 10)) {
        let gd = relabel(&closure_gauss_data(&w), "k");
        let b = braid_from_gauss_data(&gd).unwrap();
        prop_assert!(gauss_isomorphic(&closure_gauss_data(&b), &gd).is_some());
    }

    #[test]
    fn markov_moves_undo_exactly(w in word(4, 10)) {
        for m in applicable_moves(&w, 5) {
            let w2 = apply_markov(&w, m).unwrap();
            prop_assert_eq!(&apply_markov(&w2, m.inverse()).unwrap(), &w, "{}", m);
            prop_assert_eq!(closure_gauss_data(&w2).mu, closure_gauss_data(&w).mu, "{}", m);
        }
    }

    #[test]
    fn flip_is_an_involution(w in word(6, 20)) {
        prop_assert_eq!(flip(&flip(&w)), w.clone());
        prop_assert_eq!(flip(&w).degree(), w.degree());
    }

    #[test]
    fn left_exchange_flips_to_right_exchange((b1, b2) in pair(3, 5)) {
        let n = b1.degree() + 1;
        let (s, v) = (Generator::sigma(1), Generator::v(1));
        let side = |b: &BraidWord| b.embed(1, 0).unwrap().into_letters();
        let build = |inner: Generator, outer: Generator| {
            let mut l = side(&b1);
            l.push(inner);
            l.extend(side(&b2));
            l.push(outer);
            BraidWord::new(n, l).unwrap()
        };
        let (b, b_prime) = (build(s.inverse(), s), build(v, v));
        let split = b1.len() + 1;
        prop_assert_eq!(apply_markov(&b, MarkovMove::LeftExchange(split)).unwrap(), b_prime.clone());
        let top = (n - 1) as u8;
        let mut right = flip(&b1).embed(0, 1).unwrap().into_letters();
        right.push(Generator::sigma_inv(top));
        right.extend(flip(&b2).embed(0, 1).unwrap().into_letters());
        right.push(Generator::sigma(top));
        prop_assert_eq!(flip(&b).into_letters(), right);
        prop_assert_eq!(apply_markov(&flip(&b), MarkovMove::RightExchange(split)).unwrap(), flip(&b_prime));
    }

    #[test]
    fn reduce_generators_is_a_homomorphism((a, b) in pair(6, 15)) {
        let (ra, rb) = (reduce_generators(&a), reduce_generators(&b));
        prop_assert!(is_reduced(&ra));
        prop_assert_eq!(reduce_generators(&cat(&a, &b)).free_reduce(), cat(&ra, &rb).free_reduce());
        prop_assert_eq!(signed_perm_image(&ra), signed_perm_image(&a));
        prop_assert_eq!(abelian_invariant(&ra).writhe, abelian_invariant(&a).writhe);
        prop_assert_eq!(reduce_generators(&ra).free_reduce(), ra.free_reduce());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn isomorphism_agrees_with_exhaustive_search((a, b) in pair(3, 6)) {
        let (g1, g2) = (closure_gauss_data(&a), relabel(&closure_gauss_data(&b), "z"));
        prop_assume!(g1.crossings.len() <= 4 && g1.bars.len() <= 4);
        let found = gauss_isomorphic(&g1, &g2);
        if let Some(m) = &found {
            prop_assert!(is_isomorphism(&g1, &g2, m));
        }
        prop_assert_eq!(found.is_some(), g1.mu == g2.mu && exhaustive_isomorphic(&g1, &g2));
    }

    #[test]
    fn bounded_equal_is_sound(w in word(4, 6), picks in prop::collection::vec(any::<Index>(), 1..4)) {
        let rules = standard_rules(w.degree());
        let mut w2 = w.clone();
        for p in &picks {
            let options = matches(&w2, &rules);
            if options.is_empty() {
                break;
            }
            let (pos, k) = options[p.index(options.len())];
            let next = apply_rule(&w2, pos, &rules.rules()[k]).unwrap();
            if next.len() > 12 {
                break;
            }
            w2 = next;
        }
        let budget = SearchBudget::new(8, 24, 20_000);
        let there = bounded_equal(&w, &w2, &rules, budget).unwrap();
        let back = bounded_equal(&w2, &w, &rules, budget).unwrap();
        for (v, from, to) in [(&there, &w, &w2), (&back, &w2, &w)] {
            match v {
                Verdict::Equal(s) => {
                    prop_assert_eq!(&s.start, from);
                    prop_assert_eq!(&s.end, to);
                    prop_assert!(verify_derivation(s, &rules).is_ok());
                }
                Verdict::Distinct(x) => prop_assert!(false, "related words called distinct by {}", x),
                Verdict::Unknown(_) => {}
            }
        }
        prop_assert_eq!(there.is_equal(), back.is_equal());
    }

    #[test]
    fn distinct_verdicts_name_a_separating_invariant((a, b) in pair(4, 6)) {
        let rules = standard_rules(a.degree());
        let v = bounded_equal(&a, &b, &rules, SearchBudget::new(4, 16, 2_000)).unwrap();
        let u = bounded_equal(&b, &a, &rules, SearchBudget::new(4, 16, 2_000)).unwrap();
        prop_assert_eq!(matches!(v, Verdict::Distinct(_)), matches!(u, Verdict::Distinct(_)));
        if let Verdict::Distinct(x) = &v {
            prop_assert_eq!(Some(x.as_str()), tvb_core::quotients::separating_invariant(&a, &b));
        }
        if let Verdict::Equal(s) = v {
            prop_assert!(verify_derivation(&s, &rules).is_ok());
        }
    }

    #[test]
    fn equal_verdicts_are_congruent((a, c) in pair(3, 3)) {
        let n = a.degree();
        prop_assume!(n >= 2);
        let rules = standard_rules(n);
        let g = BraidWord::parse(&format!("n={n}; v1 t1 v1")).unwrap();
        let h = BraidWord::parse(&format!("n={n}; t2")).unwrap();
        let (x, y) = (cat(&cat(&a, &g), &c), cat(&cat(&a, &h), &c));
        let v = bounded_equal(&x, &y, &rules, SearchBudget::new(10, 32, 50_000)).unwrap();
        prop_assert!(v.is_equal(), "{} vs {}: {}", x, y, v.label());
    }

    #[test]
    fn nabla_conjugates_to_flip(w in word(4, 3)) {
        let n = w.degree();
        let d = nabla(n).unwrap();
        let lhs = cat(&cat(&d, &w), &d.invert());
        let v = bounded_equal(&lhs, &flip(&w), &standard_rules(n), SearchBudget::new(16, 64, 200_000)).unwrap();
        prop_assert!(v.is_equal(), "{}: {}", w, v.label());
    }
}

#[test]
fn relations_preserve_the_quotients() {
    for n in 1..=6 {
        for rules in [standard_rules(n), reduced_rules(n.max(2))] {
            let d = rules.degree();
            for r in rules.rules() {
                let (l, rr) = (BraidWord::new(d, r.lhs.clone()).unwrap(), BraidWord::new(d, r.rhs.clone()).unwrap());
                assert_eq!(signed_perm_image(&l), signed_perm_image(&rr), "{}", r.name);
                assert_eq!(abelian_invariant(&l), abelian_invariant(&rr), "{}", r.name);
                assert_eq!(block_image_of(d, &r.lhs), block_image_of(d, &r.rhs), "{}", r.name);
            }
        }
    }
}

#[test]
fn nabla_squares_to_identity() {
    for n in 1..=5 {
        let d = nabla(n).unwrap();
        let v = bounded_equal(&cat(&d, &d), &BraidWord::identity(n), &standard_rules(n), SearchBudget::new(16, 64, 200_000))
            .unwrap();
        assert!(v.is_equal(), "n={n}: {}", v.label());
    }
}
