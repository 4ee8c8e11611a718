//! Std companion of `tvb_core`. Everything here is IO or presentation;
//! the algorithms live in the core crate.

use std::io::Read;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use tvb_core::reduced::{relation_checks, Direction, PresentationReport};
use tvb_core::{BraidWord, DerivationScript, SearchBudget};

pub mod acceptance;
pub mod cli;
pub mod json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] tvb_core::Error),
    #[error("{0}")]
    Invalid(String),
}

/// Reads a whole file, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Reads a braid word file. Blank lines and `#` comments are ignored.
pub fn read_word(path: &str) -> Result<BraidWord, CliError> {
    let text = read_input(path)?;
    let body: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    Ok(BraidWord::parse(&body.join(" "))?)
}

pub fn read_script(path: &str) -> Result<DerivationScript, CliError> {
    Ok(DerivationScript::parse(&read_input(path)?)?)
}

/// `verify_presentation_equivalence` with relations checked on a pool of
/// worker threads. Results are sorted by relation name, so the report does
/// not depend on scheduling.
pub fn verify_presentation_parallel(
    n: usize,
    budget: SearchBudget,
) -> Result<(PresentationReport, PresentationReport), CliError> {
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
    let run = |direction: Direction| -> Result<PresentationReport, CliError> {
        let (checks, rules) = relation_checks(n, direction)?;
        let next = AtomicUsize::new(0);
        let results = Mutex::new(Vec::with_capacity(checks.len()));
        std::thread::scope(|s| {
            for _ in 0..workers.min(checks.len()) {
                s.spawn(|| loop {
                    let k = next.fetch_add(1, Ordering::Relaxed);
                    let Some(c) = checks.get(k) else { break };
                    let v = c.run(&rules, budget);
                    results.lock().expect("no worker panics while holding the lock").push((c.name.clone(), v));
                });
            }
        });
        let results = results.into_inner().expect("workers finished");
        Ok(PresentationReport::from_results(direction, results))
    };
    Ok((run(Direction::StandardToReduced)?, run(Direction::ReducedToStandard)?))
}
