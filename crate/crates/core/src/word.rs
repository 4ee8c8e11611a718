//! Generators and braid words of the twisted virtual braid group.
//!
//! Letters are stored top-to-bottom: the product `a b` is the braid `a`
//! stacked on top of `b`, which is plain concatenation of letter sequences.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Largest supported number of strands.
pub const MAX_DEGREE: usize = 255;

/// The four kinds of letters.
///
/// The derived order (`Sigma < SigmaInv < V < Gamma`) is the letter order
/// used for shortlex comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// Positive real crossing `σ_i`.
    Sigma,
    /// Negative real crossing `σ_i⁻¹`.
    SigmaInv,
    /// Virtual crossing `v_i`.
    V,
    /// Bar `γ_i` on the strand at position `i`.
    Gamma,
}

impl Kind {
    /// Token prefix used by the text format.
    pub fn token(self) -> char {
        match self {
            Kind::Sigma => 's',
            Kind::SigmaInv => 'S',
            Kind::V => 'v',
            Kind::Gamma => 't',
        }
    }

    fn from_token(c: char) -> Option<Kind> {
        match c {
            's' => Some(Kind::Sigma),
            'S' => Some(Kind::SigmaInv),
            'v' => Some(Kind::V),
            't' => Some(Kind::Gamma),
            _ => None,
        }
    }

    /// True for σ and σ⁻¹.
    pub fn is_real(self) -> bool {
        matches!(self, Kind::Sigma | Kind::SigmaInv)
    }
}

/// One letter: a generator or the inverse of `σ_i`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: Kind,
    pub index: u8,
}

impl Generator {
    pub const fn new(kind: Kind, index: u8) -> Self {
        Generator { kind, index }
    }

    pub const fn sigma(index: u8) -> Self {
        Self::new(Kind::Sigma, index)
    }

    pub const fn sigma_inv(index: u8) -> Self {
        Self::new(Kind::SigmaInv, index)
    }

    pub const fn v(index: u8) -> Self {
        Self::new(Kind::V, index)
    }

    pub const fn gamma(index: u8) -> Self {
        Self::new(Kind::Gamma, index)
    }

    /// Group inverse of this letter. `v_i` and `γ_i` are involutions.
    pub fn inverse(self) -> Self {
        let kind = match self.kind {
            Kind::Sigma => Kind::SigmaInv,
            Kind::SigmaInv => Kind::Sigma,
            k => k,
        };
        Generator { kind, index: self.index }
    }

    /// Whether the letter is valid on `degree` strands.
    pub fn fits(self, degree: usize) -> bool {
        let i = self.index as usize;
        match self.kind {
            Kind::Gamma => (1..=degree).contains(&i),
            _ => i >= 1 && i < degree,
        }
    }

    /// Largest strand position touched by the letter.
    pub fn max_position(self) -> usize {
        match self.kind {
            Kind::Gamma => self.index as usize,
            _ => self.index as usize + 1,
        }
    }

    /// Shift the index by `s`.
    pub fn shifted(self, s: usize) -> Self {
        Generator { kind: self.kind, index: (self.index as usize + s) as u8 }
    }

    /// True for letters that are neither σ nor σ⁻¹.
    pub fn is_block(self) -> bool {
        !self.kind.is_real()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.token(), self.index)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self, Error> {
        let mut chars = tok.chars();
        let kind = chars
            .next()
            .and_then(Kind::from_token)
            .ok_or_else(|| Error::Syntax(String::from(tok)))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Syntax(String::from(tok)));
        }
        let index: usize = digits.parse().map_err(|_| Error::Syntax(String::from(tok)))?;
        if index == 0 || index > MAX_DEGREE {
            return Err(Error::IndexOutOfRange { token: String::from(tok), degree: 0 });
        }
        Ok(Generator::new(kind, index as u8))
    }
}

/// A word in the standard generators on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidWord {
    degree: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    /// Builds a word, checking every index against `degree`.
    pub fn new(degree: usize, letters: Vec<Generator>) -> Result<Self, Error> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::BadDegree(degree));
        }
        if let Some(g) = letters.iter().find(|g| !g.fits(degree)) {
            return Err(Error::IndexOutOfRange { token: g.to_string(), degree });
        }
        Ok(BraidWord { degree, letters })
    }

    /// Constructor for callers that already guarantee validity.
    pub(crate) fn from_parts(degree: usize, letters: Vec<Generator>) -> Self {
        debug_assert!(letters.iter().all(|g| g.fits(degree)));
        BraidWord { degree, letters }
    }

    pub fn identity(degree: usize) -> Self {
        BraidWord { degree, letters: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters viewed on a different number of strands.
    pub fn with_degree(&self, degree: usize) -> Result<Self, Error> {
        BraidWord::new(degree, self.letters.clone())
    }

    /// Parses `n=<degree>; tok tok ...`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        let rest = text.strip_prefix("n=").ok_or(Error::MissingHeader)?;
        let (head, body) = rest.split_once(';').ok_or(Error::MissingHeader)?;
        let degree: usize = head.trim().parse().map_err(|_| Error::MissingHeader)?;
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::BadDegree(degree));
        }
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let g = match tok.parse::<Generator>() {
                Err(Error::IndexOutOfRange { token, .. }) => {
                    return Err(Error::IndexOutOfRange { token, degree })
                }
                other => other?,
            };
            if !g.fits(degree) {
                return Err(Error::IndexOutOfRange { token: String::from(tok), degree });
            }
            letters.push(g);
        }
        Ok(BraidWord { degree, letters })
    }

    /// `self` stacked on `other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, Error> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { degree: self.degree, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            degree: self.degree,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Cancels adjacent `σσ⁻¹`, `σ⁻¹σ`, `vv`, `γγ` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        BraidWord { degree: self.degree, letters: free_reduce_letters(&self.letters) }
    }

    /// Adds `s` trivial strands on the left and `t` on the right.
    pub fn embed(&self, s: usize, t: usize) -> Result<BraidWord, Error> {
        let degree = self.degree + s + t;
        if degree > MAX_DEGREE {
            return Err(Error::BadDegree(degree));
        }
        Ok(BraidWord { degree, letters: self.letters.iter().map(|g| g.shifted(s)).collect() })
    }

    /// Number of letters of each kind, in `Kind` order.
    pub fn kind_counts(&self) -> [usize; 4] {
        let mut c = [0; 4];
        for g in &self.letters {
            c[g.kind as usize] += 1;
        }
        c
    }
}

/// Stack-based free reduction; the result does not depend on deletion order.
pub fn free_reduce_letters(letters: &[Generator]) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::with_capacity(letters.len());
    for &g in letters {
        if out.last() == Some(&g.inverse()) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// Writes letters separated by single spaces.
pub fn write_letters(f: &mut impl fmt::Write, letters: &[Generator]) -> fmt::Result {
    for (k, g) in letters.iter().enumerate() {
        if k > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{g}")?;
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.degree)?;
        if !self.letters.is_empty() {
            f.write_str(" ")?;
            write_letters(f, &self.letters)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BraidWord::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let a = w("n=3; t1 S1 t2");
        assert_eq!(a.degree(), 3);
        assert_eq!(
            a.letters(),
            &[Generator::gamma(1), Generator::sigma_inv(1), Generator::gamma(2)]
        );
        assert_eq!(w("n=2;"), BraidWord::identity(2));
        assert!(matches!(
            BraidWord::parse("n=2; t3"),
            Err(Error::IndexOutOfRange { degree: 2, .. })
        ));
        assert!(matches!(BraidWord::parse("n=2; s2"), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(BraidWord::parse("t1 s1"), Err(Error::MissingHeader)));
        assert!(matches!(BraidWord::parse("n=2; x1"), Err(Error::Syntax(_))));
        assert!(matches!(BraidWord::parse("n=2; s"), Err(Error::Syntax(_))));
        assert!(matches!(BraidWord::parse("n=0;"), Err(Error::BadDegree(0))));
    }

    #[test]
    fn format_examples() {
        let a = BraidWord::new(
            2,
            vec![Generator::gamma(1), Generator::sigma_inv(1), Generator::gamma(2)],
        )
        .unwrap();
        assert_eq!(a.to_string(), "n=2; t1 S1 t2");
        assert_eq!(BraidWord::identity(4).to_string(), "n=4;");
        assert_eq!(w("n=3;   v1\tv2 ").to_string(), "n=3; v1 v2");
    }

    #[test]
    fn compose_and_invert() {
        let s = w("n=2; s1");
        assert_eq!(s.compose(&s.invert()).unwrap(), w("n=2; s1 S1"));
        assert_eq!(BraidWord::identity(2).compose(&s).unwrap(), s);
        assert_eq!(w("n=2; t1").compose(&w("n=2; v1")).unwrap(), w("n=2; t1 v1"));
        assert!(matches!(s.compose(&w("n=3;")), Err(Error::DegreeMismatch(2, 3))));
        assert_eq!(w("n=2; t1 S1 t2").invert(), w("n=2; t2 s1 t1"));
        assert_eq!(BraidWord::identity(3).invert(), BraidWord::identity(3));
        assert_eq!(w("n=3; v1 v2 s1").invert(), w("n=3; S1 v2 v1"));
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w("n=2; v1 v1").free_reduce(), BraidWord::identity(2));
        assert_eq!(w("n=3; t2 t2 s1").free_reduce(), w("n=3; s1"));
        assert_eq!(w("n=3; s1 v2 v2 S1").free_reduce(), BraidWord::identity(3));
        assert_eq!(w("n=3; s1 s1 v1").free_reduce(), w("n=3; s1 s1 v1"));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(w("n=2; s1").embed(0, 1).unwrap(), w("n=3; s1"));
        assert_eq!(w("n=1; t1").embed(2, 0).unwrap(), w("n=3; t3"));
        assert_eq!(BraidWord::identity(1).embed(1, 1).unwrap(), BraidWord::identity(3));
    }
}
