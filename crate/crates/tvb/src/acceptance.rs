//! The acceptance suite, shared by `tvb selftest` and the `acceptance` test
//! target. Each criterion reports pass or fail with a one-line detail, and a
//! criterion that overruns its time limit fails.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tvb_core::alexander::braid_from_gauss_data;
use tvb_core::diagram::{closure_gauss_data, component_count, gauss_isomorphic};
use tvb_core::markov::{apply_markov, applicable_moves, flip, nabla, MarkovMove, StabKind};
use tvb_core::quotients::{abelian_invariant, signed_perm_image};
use tvb_core::reduced::{builtin_lemma_scripts, relation_checks, replay_lemmas};
use tvb_core::rewrite::{bounded_equal, defining_rules, family_instances, standard_rules, verify_derivation};
use tvb_core::{BraidWord, Generator, Kind, SearchBudget, Verdict};

use crate::json::parse_gauss_data;
use crate::verify_presentation_parallel;

/// The Gauss data quintuple of the worked example with one bar.
pub const WORKED_EXAMPLE_JSON: &str = include_str!("../data/worked_example.json");

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}. {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Check = fn() -> Result<String, String>;

/// `(title, check, time limit)` in criterion order.
pub const CRITERIA: &[(&str, Check, Duration)] = &[
    ("relation soundness", relation_soundness, Duration::from_secs(1)),
    ("equivalent relation forms", equivalent_forms, Duration::from_secs(80)),
    ("reduced presentation", reduced_presentation, Duration::from_secs(300)),
    ("worked example", worked_example, Duration::from_secs(1)),
    ("closure example", closure_example, Duration::from_secs(1)),
    ("braiding round trip", braiding_round_trip, Duration::from_secs(120)),
    ("markov moves", markov_moves, Duration::from_secs(60)),
    ("nabla conjugation", nabla_conjugation, Duration::from_secs(300)),
    ("negative controls", negative_controls, Duration::from_secs(1)),
];

pub fn run_one(id: usize) -> Option<Outcome> {
    let (title, check, limit) = *CRITERIA.get(id.checked_sub(1)?)?;
    let t = Instant::now();
    let result = check();
    let elapsed = t.elapsed();
    let (passed, detail) = match result {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the {}s limit", limit.as_secs())),
        Err(e) => (false, e),
    };
    Some(Outcome { id, title, passed, detail, elapsed })
}

pub fn run_all() -> Vec<Outcome> {
    (1..=CRITERIA.len()).filter_map(run_one).collect()
}

/// Uniform random word of the given degree and length at most `max_len`.
pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .filter_map(|_| {
            let kind = match rng.gen_range(0..4) {
                0 => Kind::Sigma,
                1 => Kind::SigmaInv,
                2 => Kind::V,
                _ => Kind::Gamma,
            };
            let top = if kind == Kind::Gamma { n } else { n - 1 };
            (top > 0).then(|| Generator::new(kind, rng.gen_range(1..=top) as u8))
        })
        .collect();
    BraidWord::new(n, letters).expect("letters fit the degree")
}

fn word(n: usize, letters: &[Generator]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).expect("relation letters fit the degree")
}

fn relation_soundness() -> Result<String, String> {
    let mut count = 0;
    for n in 2..=6 {
        for r in defining_rules(n).rules() {
            let (a, b) = (word(n, &r.lhs), word(n, &r.rhs));
            if signed_perm_image(&a) != signed_perm_image(&b) {
                return Err(format!("{} changes the signed permutation at n={n}", r.name));
            }
            if abelian_invariant(&a) != abelian_invariant(&b) {
                return Err(format!("{} changes the abelian invariant at n={n}", r.name));
            }
            count += 1;
        }
    }
    Ok(format!("{count} oriented relation instances preserve both quotients"))
}

/// Each pair `(from, to, also_removed)`: the instances of `to` are proven
/// with `to` and `also_removed` taken out of the standard rules.
pub const EQUIVALENT_FORMS: &[(&str, &str, &[&str])] = &[
    ("rel-vsv", "relC-vsv", &[]),
    ("relC-vsv", "rel-vsv", &[]),
    ("rel-bv", "relC-vb", &["rel-vb"]),
    ("relC-vb", "rel-bv", &["rel-vb"]),
    ("rel-bv", "rel-vb", &["relC-vb"]),
    ("rel-vb", "rel-bv", &["relC-vb"]),
    ("rel-twist-III", "rel-twist-III-negative", &[]),
    ("rel-twist-III-negative", "rel-twist-III", &[]),
];

fn equivalent_forms() -> Result<String, String> {
    let n = 3;
    let full = standard_rules(n);
    let mut proven = 0;
    for (from, to, extra) in EQUIVALENT_FORMS {
        let mut removed = vec![*to];
        removed.extend_from_slice(extra);
        let rules = full.without(&removed);
        for r in family_instances(&full, to) {
            let t = Instant::now();
            let v = bounded_equal(&word(n, &r.lhs), &word(n, &r.rhs), &rules, SearchBudget::new(12, 64, 200_000))
                .map_err(|e| e.to_string())?;
            let Verdict::Equal(script) = v else {
                return Err(format!("{from} => {}: {}", r.name, v.label()));
            };
            verify_derivation(&script, &rules).map_err(|e| format!("{from} => {}: {e}", r.name))?;
            if t.elapsed() > Duration::from_secs(10) {
                return Err(format!("{from} => {} took {:?}", r.name, t.elapsed()));
            }
            proven += 1;
        }
    }
    Ok(format!("{proven} instances proven from their partner relation at n=3"))
}

fn reduced_presentation() -> Result<String, String> {
    let mut proven = 0;
    for n in [3, 4] {
        let (a, b) = verify_presentation_parallel(n, SearchBudget::default()).map_err(|e| e.to_string())?;
        for report in [&a, &b] {
            let (_, rules) = relation_checks(n, report.direction).map_err(|e| e.to_string())?;
            for (name, v) in &report.per_relation {
                let Verdict::Equal(script) = v else {
                    return Err(format!("n={n} {}: {name} is {}", report.direction, v.label()));
                };
                verify_derivation(script, &rules).map_err(|e| format!("n={n} {name}: {e}"))?;
                proven += 1;
            }
        }
    }
    let lemmas = builtin_lemma_scripts(4).map_err(|e| e.to_string())?;
    for (name, result) in replay_lemmas(&lemmas) {
        result.map_err(|e| format!("lemma {name}: {e}"))?;
    }
    Ok(format!("{proven} relations proven at n=3,4 in both directions; {} lemma scripts replay", lemmas.len()))
}

fn worked_example() -> Result<String, String> {
    let gd = parse_gauss_data(WORKED_EXAMPLE_JSON).map_err(|e| e.to_string())?;
    match component_count(&gd) {
        Ok(1) => Ok(String::from("component_count = 1")),
        other => Err(format!("component_count returned {other:?}")),
    }
}

fn closure_example() -> Result<String, String> {
    let w = BraidWord::parse("n=2; t1 S1 t2").map_err(|e| e.to_string())?;
    let gd = closure_gauss_data(&w);
    let signs: Vec<i8> = gd.crossings.iter().map(|c| c.sign).collect();
    if signs == [-1] && gd.bars.len() == 2 && gd.mu == 1 {
        Ok(String::from("1 crossing of sign -1, 2 bars, mu = 1"))
    } else {
        Err(format!("signs {signs:?}, {} bars, mu = {}", gd.bars.len(), gd.mu))
    }
}

fn braiding_round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let w = random_word(&mut rng, n, 12);
        let gd = closure_gauss_data(&w);
        let b = braid_from_gauss_data(&gd).map_err(|e| format!("{w}: {e}"))?;
        if gauss_isomorphic(&gd, &closure_gauss_data(&b)).is_none() {
            return Err(format!("{w} braids to {b}, whose closure is not isomorphic"));
        }
    }
    Ok(String::from("200 random closures rebraided isomorphically"))
}

/// A word of shape `ι(b₁) σ_N⁻¹ ι(b₂) σ_N`, or its left-hand mirror, so
/// that exchange moves apply.
fn exchange_word(rng: &mut impl Rng, n: usize, left: bool) -> BraidWord {
    let inner = |rng: &mut ChaCha8Rng| random_word(rng, n - 1, 3);
    let mut sub = ChaCha8Rng::seed_from_u64(rng.gen());
    let (b1, b2) = (inner(&mut sub), inner(&mut sub));
    let lift = |b: &BraidWord| if left { b.embed(1, 0).expect("fits") } else { b.with_degree(n).expect("fits") };
    let (edge, edge_inv) = if left {
        (Generator::sigma(1), Generator::sigma_inv(1))
    } else {
        (Generator::sigma(n as u8 - 1), Generator::sigma_inv(n as u8 - 1))
    };
    let mut letters = lift(&b1).into_letters();
    letters.push(edge_inv);
    letters.extend(lift(&b2).into_letters());
    letters.push(edge);
    BraidWord::new(n, letters).expect("fits")
}

/// Moves that leave the closed diagram unchanged up to planar isotopy and
/// virtual crossings. Conjugation by a real or bar letter adds a cancelling
/// pair of sites, so only its closure component count is compared.
fn keeps_gauss_data(m: MarkovMove) -> bool {
    match m {
        MarkovMove::CyclicShift | MarkovMove::InverseCyclicShift => true,
        MarkovMove::ConjugateBy(g) | MarkovMove::Deconjugate(g) => g.kind == Kind::V,
        _ => false,
    }
}

fn markov_moves() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut iso, mut mu_checked, mut stab, mut exch) = (0, 0, 0, 0);
    for k in 0..500 {
        let n = rng.gen_range(2..=4);
        let w = match k % 4 {
            0 => exchange_word(&mut rng, n, false),
            1 => exchange_word(&mut rng, n, true),
            _ => random_word(&mut rng, n, 8),
        };
        let moves = applicable_moves(&w, n + 1);
        let m = moves[rng.gen_range(0..moves.len())];
        let after = apply_markov(&w, m).map_err(|e| format!("{m} on {w}: {e}"))?;
        if apply_markov(&after, m.inverse()).ok().as_ref() != Some(&w) {
            return Err(format!("{m} on {w} is not undone by its inverse"));
        }
        let (g0, g1) = (closure_gauss_data(&w), closure_gauss_data(&after));
        if g0.mu != g1.mu {
            return Err(format!("{m} on {w} changes mu"));
        }
        mu_checked += 1;
        if keeps_gauss_data(m) {
            if gauss_isomorphic(&g0, &g1).is_none() {
                return Err(format!("{m} on {w}: closures not isomorphic"));
            }
            iso += 1;
        }
        match m {
            MarkovMove::Stabilize(_) | MarkovMove::Destabilize(_) => stab += 1,
            MarkovMove::RightExchange(_)
            | MarkovMove::InverseRightExchange(_)
            | MarkovMove::LeftExchange(_)
            | MarkovMove::InverseLeftExchange(_) => exch += 1,
            _ => {}
        }
        for kind in [StabKind::Positive, StabKind::Negative, StabKind::Virtual] {
            let up = apply_markov(&w, MarkovMove::Stabilize(kind)).map_err(|e| e.to_string())?;
            if apply_markov(&up, MarkovMove::Destabilize(kind)).ok().as_ref() != Some(&w) {
                return Err(format!("destabilize after stabilize changes {w}"));
            }
        }
    }
    if stab == 0 || exch == 0 {
        return Err(format!("sample missed a move class ({stab} stabilizations, {exch} exchanges)"));
    }
    Ok(format!(
        "{mu_checked} moves keep mu and invert exactly; {iso} rotations and virtual conjugations give isomorphic closures; \
         {stab} stabilizations, {exch} exchanges"
    ))
}

fn nabla_conjugation() -> Result<String, String> {
    let budget = SearchBudget::new(20, 80, 200_000);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut proven = 0;
    for n in 2..=4 {
        let rules = standard_rules(n);
        let nb = nabla(n).map_err(|e| e.to_string())?;
        for _ in 0..50 {
            let w = random_word(&mut rng, n, 6);
            let lhs = nb.compose(&w).and_then(|x| x.compose(&nb.invert())).map_err(|e| e.to_string())?;
            let v = bounded_equal(&lhs, &flip(&w), &rules, budget).map_err(|e| e.to_string())?;
            let Verdict::Equal(script) = v else {
                return Err(format!("nabla {w} nabla^-1 vs flip: {}", v.label()));
            };
            verify_derivation(&script, &rules).map_err(|e| format!("{w}: {e}"))?;
            proven += 1;
        }
    }
    for n in 1..=5 {
        let nb = nabla(n).map_err(|e| e.to_string())?;
        let sq = nb.compose(&nb).map_err(|e| e.to_string())?;
        let rules = standard_rules(n);
        let v = bounded_equal(&sq, &BraidWord::identity(n), &rules, budget).map_err(|e| e.to_string())?;
        let Verdict::Equal(script) = v else {
            return Err(format!("nabla^2 at n={n}: {}", v.label()));
        };
        verify_derivation(&script, &rules).map_err(|e| format!("nabla^2 at n={n}: {e}"))?;
    }
    Ok(format!("{proven} conjugations equal their flips; nabla^2 = e for n <= 5"))
}

fn negative_controls() -> Result<String, String> {
    let (a, b) = (BraidWord::parse("n=2; s1").unwrap(), BraidWord::parse("n=2; S1").unwrap());
    match bounded_equal(&a, &b, &standard_rules(2), SearchBudget::default()) {
        Ok(Verdict::Distinct(w)) if w == "writhe" => {}
        other => return Err(format!("s1 vs S1 gave {other:?}")),
    }
    let gd = closure_gauss_data(&a);
    let mut flipped = gd.clone();
    flipped.crossings[0].sign = -1;
    if gauss_isomorphic(&gd, &flipped).is_some() {
        return Err(String::from("sign-flipped crossing accepted as isomorphic"));
    }
    Ok(String::from("s1 != S1 by writhe; sign flip rejected"))
}
