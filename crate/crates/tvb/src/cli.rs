//! Command-line front end. `run` maps every outcome to an exit code:
//! 0 success or equal, 1 distinct or invalid input, 2 unknown, 64 usage.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tvb_core::alexander::braid_from_gauss_data;
use tvb_core::diagram::closure_gauss_data;
use tvb_core::markov::{markov_equal_bounded, MarkovVerdict};
use tvb_core::reduced::{builtin_lemma_scripts, replay_lemmas, MAX_PRESENTATION_DEGREE};
use tvb_core::rewrite::{bounded_equal, defining_rules, reduced_rules, standard_rules, verify_derivation};
use tvb_core::{RuleSet, SearchBudget, Verdict};

use crate::json::{gauss_data_to_string, invariants, parse_gauss_data, LemmaJson, ReportJson, VerdictJson};
use crate::{acceptance, read_input, read_script, read_word, verify_presentation_parallel, CliError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISTINCT: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "tvb", version, about = "Twisted virtual braid calculus")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rules {
    Standard,
    Defining,
    Reduced,
}

impl Rules {
    fn build(self, n: usize) -> RuleSet {
        match self {
            Rules::Standard => standard_rules(n),
            Rules::Defining => defining_rules(n),
            Rules::Reduced => reduced_rules(n),
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_depth: u64,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_length: u64,
    #[arg(long, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_states: u64,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        SearchBudget::new(self.max_depth as usize, self.max_length as usize, self.max_states as usize)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Free-reduce a word.
    Normalize { word: String },
    /// Quotient invariants of a word as JSON.
    Invariants { word: String },
    /// Bounded equality search between two words.
    Equal {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Rules::Standard)]
        rules: Rules,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Gauss data of the closure of a word.
    Closure { word: String },
    /// A braid word whose closure has the given Gauss data.
    Braid { gauss_data: String },
    /// Bounded Markov equivalence search between two words.
    MarkovEqual {
        a: String,
        b: String,
        /// Largest number of strands a stabilization may reach.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Replay a derivation script.
    Verify {
        script: String,
        #[arg(long, value_enum, default_value_t = Rules::Standard)]
        rules: Rules,
    },
    /// Prove the reduced and standard presentations equivalent.
    VerifyPresentation {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=MAX_PRESENTATION_DEGREE as u64))]
        n: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the acceptance suite.
    Selftest,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn json<T: Serialize>(&mut self, value: &T) {
        let _ = writeln!(self.out, "{}", serde_json::to_string(value).expect("plain data serializes"));
    }

    fn line(&mut self, text: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{text}");
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { out, err, format: cli.format };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_DISTINCT
        }
    }
}

fn verdict_code(v: &VerdictJson) -> i32 {
    match v {
        VerdictJson::Equal { .. } => EXIT_OK,
        VerdictJson::Distinct { .. } => EXIT_DISTINCT,
        VerdictJson::Unknown { .. } => EXIT_UNKNOWN,
    }
}

fn report_verdict(io: &mut Io<'_>, v: VerdictJson) -> i32 {
    let code = verdict_code(&v);
    match (&v, io.format) {
        (_, Format::Json) => io.json(&v),
        (VerdictJson::Equal { trace }, Format::Text) => {
            io.line("equal");
            let _ = write!(io.out, "{trace}");
        }
        (VerdictJson::Distinct { witness }, Format::Text) => io.line(format!("distinct: {witness}")),
        (VerdictJson::Unknown { reason, states, depth }, Format::Text) => {
            io.line(format!("unknown: {reason} after {states} states, depth {depth}"))
        }
    }
    code
}

#[derive(Serialize)]
struct WordJson {
    word: String,
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<i32, CliError> {
    match command {
        Command::Normalize { word } => {
            let w = read_word(&word)?.free_reduce();
            match io.format {
                Format::Text => io.line(&w),
                Format::Json => io.json(&WordJson { word: w.to_string() }),
            }
            Ok(EXIT_OK)
        }
        Command::Invariants { word } => {
            io.json(&invariants(&read_word(&word)?));
            Ok(EXIT_OK)
        }
        Command::Equal { a, b, rules, budget } => {
            let (a, b) = (read_word(&a)?, read_word(&b)?);
            let v = bounded_equal(&a, &b, &rules.build(a.degree()), budget.budget())?;
            Ok(report_verdict(io, (&v).into()))
        }
        Command::Closure { word } => {
            io.line(gauss_data_to_string(&closure_gauss_data(&read_word(&word)?)));
            Ok(EXIT_OK)
        }
        Command::Braid { gauss_data } => {
            let w = braid_from_gauss_data(&parse_gauss_data(&read_input(&gauss_data)?)?)?;
            match io.format {
                Format::Text => io.line(&w),
                Format::Json => io.json(&WordJson { word: w.to_string() }),
            }
            Ok(EXIT_OK)
        }
        Command::MarkovEqual { a, b, max_degree, budget } => {
            let (a, b) = (read_word(&a)?, read_word(&b)?);
            let v = markov_equal_bounded(&a, &b, budget.budget(), max_degree as usize);
            if let MarkovVerdict::Equal(trace) = &v {
                debug_assert_eq!(tvb_core::markov::verify_markov_trace(trace), Ok(()));
            }
            Ok(report_verdict(io, (&v).into()))
        }
        Command::Verify { script, rules } => {
            let s = read_script(&script)?;
            let result = verify_derivation(&s, &rules.build(s.start.degree()));
            match (&result, io.format) {
                (Ok(()), Format::Text) => io.line(format!("ok: {} steps", s.steps.len())),
                (Err(e), Format::Text) => io.line(format!("failed: {e}")),
                (r, Format::Json) => io.json(&LemmaJson {
                    lemma: script.clone(),
                    ok: r.is_ok(),
                    failure: r.as_ref().err().map(|e| e.to_string()),
                }),
            }
            Ok(if result.is_ok() { EXIT_OK } else { EXIT_DISTINCT })
        }
        Command::VerifyPresentation { n, budget } => {
            let n = n as usize;
            let (a, b) = verify_presentation_parallel(n, budget.budget())?;
            let lemmas: Vec<LemmaJson> = replay_lemmas(&builtin_lemma_scripts(n)?)
                .into_iter()
                .map(|(lemma, r)| LemmaJson { ok: r.is_ok(), failure: r.err().map(|e| e.to_string()), lemma })
                .collect();
            #[derive(Serialize)]
            struct Out {
                reports: [ReportJson; 2],
                lemmas: Vec<LemmaJson>,
            }
            let all = a.all_proven && b.all_proven && lemmas.iter().all(|l| l.ok);
            let unknown = a.per_relation.iter().chain(&b.per_relation).any(|(_, v)| matches!(v, Verdict::Unknown(_)));
            io.json(&Out { reports: [(&a).into(), (&b).into()], lemmas });
            Ok(if all {
                EXIT_OK
            } else if unknown {
                EXIT_UNKNOWN
            } else {
                EXIT_DISTINCT
            })
        }
        Command::Selftest => {
            let mut failed = 0;
            for k in 1..=acceptance::CRITERIA.len() {
                let o = acceptance::run_one(k).expect("criterion exists");
                failed += usize::from(!o.passed);
                io.line(&o);
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_DISTINCT })
        }
    }
}
