//! Homomorphic images of braid words: the signed permutation in
//! `Z₂ⁿ ⋊ Sₙ` and the abelian triple.
//!
//! Products follow word order: `a.then(&b)` is the image of `a` stacked on `b`.

use alloc::vec::Vec;
use core::fmt;

use crate::word::{BraidWord, Generator, Kind};

/// A permutation of strand positions together with a bar parity per strand.
///
/// `perm[i]` is the bottom position reached by the strand starting at top
/// position `i`, and `flips[i]` the parity of bars met along the way.
/// Positions are stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    perm: Vec<u8>,
    flips: Vec<u8>,
}

impl SignedPermutation {
    pub fn identity(degree: usize) -> Self {
        SignedPermutation { perm: (0..degree as u8).collect(), flips: alloc::vec![0; degree] }
    }

    /// From 0-based images and flip bits. Returns `None` unless `perm` is a
    /// bijection and every flip is 0 or 1.
    pub fn from_parts(perm: Vec<u8>, flips: Vec<u8>) -> Option<Self> {
        let n = perm.len();
        if flips.len() != n || flips.iter().any(|&f| f > 1) {
            return None;
        }
        let mut seen = alloc::vec![false; n];
        for &p in &perm {
            if p as usize >= n || core::mem::replace(&mut seen[p as usize], true) {
                return None;
            }
        }
        Some(SignedPermutation { perm, flips })
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    /// 0-based images of top positions.
    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn flips(&self) -> &[u8] {
        &self.flips
    }

    /// 1-based image of the strand starting at 1-based position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.perm[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize) && self.flips.iter().all(|&f| f == 0)
    }

    /// Image of `self` stacked on `other`.
    pub fn then(&self, other: &SignedPermutation) -> SignedPermutation {
        debug_assert_eq!(self.degree(), other.degree());
        let perm = self.perm.iter().map(|&p| other.perm[p as usize]).collect();
        let flips = self
            .flips
            .iter()
            .zip(&self.perm)
            .map(|(&f, &p)| f ^ other.flips[p as usize])
            .collect();
        SignedPermutation { perm, flips }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.degree();
        let mut perm = alloc::vec![0u8; n];
        let mut flips = alloc::vec![0u8; n];
        for i in 0..n {
            let p = self.perm[i] as usize;
            perm[p] = i as u8;
            flips[p] = self.flips[i];
        }
        SignedPermutation { perm, flips }
    }

    /// Appends one letter below. σ and v swap the strands at positions
    /// `i, i+1`; `γ_i` toggles the strand currently at position `i`.
    pub fn push(&mut self, g: Generator) {
        let i = g.index as usize - 1;
        match g.kind {
            Kind::Gamma => {
                // the strand currently at bottom position i
                let s = self.perm.iter().position(|&p| p as usize == i).unwrap();
                self.flips[s] ^= 1;
            }
            _ => {
                for p in self.perm.iter_mut() {
                    if *p as usize == i {
                        *p += 1;
                    } else if *p as usize == i + 1 {
                        *p -= 1;
                    }
                }
            }
        }
    }

    /// Number of inversions plus number of flipped strands; the length of the
    /// element over `v_1..v_{n-1}, γ_1..γ_n`.
    pub fn standard_length(&self) -> usize {
        let n = self.degree();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    inv += 1;
                }
            }
        }
        inv + self.flips.iter().map(|&f| f as usize).sum::<usize>()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (&p, &fl)) in self.perm.iter().zip(&self.flips).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", if fl == 1 { "-" } else { "" }, p + 1)?;
        }
        f.write_str("]")
    }
}

/// Image of `letters` in `Z₂ⁿ ⋊ Sₙ` under strand tracing.
pub fn signed_perm_of(degree: usize, letters: &[Generator]) -> SignedPermutation {
    let mut sp = SignedPermutation::identity(degree);
    for &g in letters {
        sp.push(g);
    }
    sp
}

pub fn signed_perm_image(w: &BraidWord) -> SignedPermutation {
    signed_perm_of(w.degree(), w.letters())
}

/// Image under `σ_i ↦ 1`, `v_i ↦ s_i`, `γ_i ↦ flip`. This is also a
/// homomorphism on the twisted virtual braid group; the rewriting engine
/// uses it to track the virtual-and-bar part of a word.
pub fn block_image_of(degree: usize, letters: &[Generator]) -> SignedPermutation {
    let mut sp = SignedPermutation::identity(degree);
    for &g in letters.iter().filter(|g| g.is_block()) {
        sp.push(g);
    }
    sp
}

/// Writhe, parity of virtual crossings, parity of bars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AbelianTriple {
    pub writhe: i64,
    pub v_parity: u8,
    pub bar_parity: u8,
}

pub fn abelian_invariant(w: &BraidWord) -> AbelianTriple {
    let [s, si, v, g] = w.kind_counts();
    AbelianTriple {
        writhe: s as i64 - si as i64,
        v_parity: (v % 2) as u8,
        bar_parity: (g % 2) as u8,
    }
}

/// Name of the first invariant that separates `a` from `b`, if any.
pub fn separating_invariant(a: &BraidWord, b: &BraidWord) -> Option<&'static str> {
    let (x, y) = (abelian_invariant(a), abelian_invariant(b));
    if x.writhe != y.writhe {
        return Some("writhe");
    }
    if x.v_parity != y.v_parity {
        return Some("v-parity");
    }
    if x.bar_parity != y.bar_parity {
        return Some("bar-parity");
    }
    if signed_perm_image(a) != signed_perm_image(b) {
        return Some("signed-permutation");
    }
    if block_image_of(a.degree(), a.letters()) != block_image_of(b.degree(), b.letters()) {
        return Some("virtual-bar-projection");
    }
    None
}
