//! An executable calculus for twisted virtual braid groups.
//!
//! Words are over `σ_i^{±1}`, `v_i` and `γ_i`. Equality is a bounded search
//! whose positive answers are replayable scripts. Braiding inverts closure
//! only up to Gauss-data isomorphism.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

use alloc::string::String;

pub mod alexander;
pub mod diagram;
pub mod markov;
pub mod quotients;
pub mod reduced;
pub mod rewrite;
mod search;
pub mod word;

pub use diagram::{Endpoint, GaussData, SiteId};
pub use quotients::{AbelianTriple, SignedPermutation};
pub use rewrite::{DerivationScript, RewriteRule, RuleSet, SearchBudget, Step, Verdict};
pub use word::{BraidWord, Generator, Kind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at token `{0}`")]
    Syntax(String),
    #[error("letter `{token}` out of range for degree {degree}")]
    IndexOutOfRange { token: String, degree: usize },
    #[error("missing `n=<degree>;` header")]
    MissingHeader,
    #[error("unsupported degree {0}")]
    BadDegree(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("rule `{rule}` does not match at position {pos}")]
    NoMatch { rule: String, pos: usize },
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("script line {line}: {msg}")]
    Script { line: usize, msg: String },
    #[error("invalid Gauss data: {0}")]
    InvalidGaussData(String),
    #[error("move does not apply: {0}")]
    ShapeMismatch(String),
}
