//! Subcommand dispatch. Results go to the output stream, diagnostics to
//! the error stream; exit codes are 0 for success, 1 for negative
//! verdicts, 2 for usage and parse errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use nfca_core::bounds::{max_fooling_set, verify_fooling_set};
use nfca_core::cover::{is_cover, similarity_pairs, state_similar};
use nfca_core::exact::{
    complexity_report, minimal_nfa_exact, minimal_unary_nfa_for_lengthset, minimize_dfca,
};
use nfca_core::hardness::reduction_nfa;
use nfca_core::reduce::reduce_nfca;
use nfca_core::{
    families, ComplexityValue, FiniteLanguage, FoolingMode, FoolingSet, MergeKind, Nfa,
    SearchBudget, SearchMode, SearchOutcome,
};
use serde_json::json;

use crate::dot::to_dot;
use crate::format::{
    decode_word, encode_word, parse_automaton, parse_dimacs, parse_language, parse_pairs,
    serialize_automaton, serialize_language, serialize_pairs, FormatError,
};

#[derive(Parser)]
#[command(name = "nfca", version, about = "Cover automata for finite languages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether an automaton accepts a word (`_` is the empty word)
    Accept { automaton: PathBuf, word: String },
    /// List the words an automaton accepts up to a length bound
    Language {
        automaton: PathBuf,
        #[arg(long)]
        ell: usize,
    },
    /// Check that an automaton covers a language up to its bound
    CoverCheck { automaton: PathBuf, language: PathBuf },
    /// Print the level (shortest reaching length) of every state
    Levels { automaton: PathBuf },
    /// List all similar state pairs, or test the one pair given
    Similar {
        automaton: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(num_args = 0..=2)]
        states: Vec<usize>,
    },
    /// Merge similar states while the cover is preserved
    Reduce { automaton: PathBuf, language: PathBuf },
    /// Minimal complete deterministic cover automaton of a language
    DfcaMin { language: PathBuf },
    /// Exhaustive search for a minimal NFA or cover NFA
    ExactMin {
        language: PathBuf,
        #[arg(long, value_enum)]
        mode: TargetKind,
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
        /// Seconds before the search gives up with bounds
        #[arg(long)]
        deadline: Option<f64>,
    },
    /// Fooling-set lower bounds
    Fooling {
        #[command(subcommand)]
        action: FoolingAction,
    },
    /// All four complexity measures of a language, as JSON
    Report {
        language: PathBuf,
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
        /// Seconds before searches give up with bounds
        #[arg(long)]
        deadline: Option<f64>,
    },
    /// Write a built-in family as a language or automaton file
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Write a built-in regression fixture as an automaton file
    Fixture {
        #[arg(value_enum)]
        which: FixtureName,
    },
    /// Build the cover automaton whose bounded language decides a 3CNF formula
    SatReduce { cnf: PathBuf },
    /// GraphViz DOT export of an automaton
    Dot { automaton: PathBuf },
}

#[derive(Subcommand)]
enum FoolingAction {
    /// Check a pairs file against a language
    Verify {
        language: PathBuf,
        pairs: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeName,
    },
    /// Search for a maximum fooling set over all word splittings
    Search {
        language: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeName,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Words with a marked letter at a fixed distance from the end
    Lf { m: usize, n: usize },
    /// Unary lengths 1+m for m up to l, skipping multiples of k
    Llk { l: usize, k: usize },
    /// The (k+1)-state unary cover automaton for the llk family
    Ak { k: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetKind {
    /// Exact acceptor
    Nfa,
    /// Cover acceptor
    Nfca,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeName {
    NfaPlain,
    NfaExtended,
    CoverPlain,
    CoverExtended,
}

impl From<ModeName> for FoolingMode {
    fn from(name: ModeName) -> FoolingMode {
        match name {
            ModeName::NfaPlain => FoolingMode::NfaPlain,
            ModeName::NfaExtended => FoolingMode::NfaExtended,
            ModeName::CoverPlain => FoolingMode::CoverPlain,
            ModeName::CoverExtended => FoolingMode::CoverExtended,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FixtureName {
    Fig6,
    Fig7,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Failure {
        usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        usage(format!("write failed: {e}"))
    }
}

pub fn run_command(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_automaton(path: &Path) -> Result<Nfa, Failure> {
    Ok(parse_automaton(&read_file(path)?)?)
}

fn load_language(path: &Path) -> Result<FiniteLanguage, Failure> {
    Ok(parse_language(&read_file(path)?)?)
}

fn parse_deadline(seconds: Option<f64>) -> Result<Option<Duration>, Failure> {
    match seconds {
        None => Ok(None),
        Some(s) if s.is_finite() && s > 0.0 => Ok(Some(Duration::from_secs_f64(s))),
        Some(s) => Err(usage(format!("deadline must be a positive number of seconds, got {s}"))),
    }
}

fn budget(max_n: usize, mode: SearchMode, deadline: Option<f64>) -> Result<SearchBudget, Failure> {
    if max_n == 0 {
        return Err(usage("max-n must be at least 1"));
    }
    let budget = SearchBudget::new(max_n, mode);
    Ok(match parse_deadline(deadline)? {
        Some(d) => budget.with_deadline(d),
        None => budget,
    })
}

/// Rewrites a witness found over the internal unary alphabet onto the
/// letter the input language actually uses.
fn with_letter(a: &Nfa, letter: char) -> Nfa {
    let transitions: Vec<(usize, char, usize)> =
        a.transitions().into_iter().map(|(s, _, t)| (s, letter, t)).collect();
    Nfa::new(a.state_count(), vec![letter], a.initial(), a.finals().iter().copied(), transitions)
        .expect("relettering preserves well-formedness")
}

fn search_minimal(lang: &FiniteLanguage, budget: &SearchBudget) -> SearchOutcome {
    if let &[letter] = lang.alphabet() {
        let lengths = lang.words().iter().map(|w| w.chars().count()).collect();
        let outcome = minimal_unary_nfa_for_lengthset(&lengths, lang.ell(), budget);
        if let SearchOutcome::Found { size, witness } = outcome {
            return SearchOutcome::Found { size, witness: with_letter(&witness, letter) };
        }
        return outcome;
    }
    minimal_nfa_exact(lang, budget)
}

fn json_value(v: ComplexityValue) -> serde_json::Value {
    match v {
        ComplexityValue::Exact(n) => json!(n),
        ComplexityValue::Bounds { lower, upper } => json!({ "lower": lower, "upper": upper }),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Accept { automaton, word } => {
            let a = load_automaton(&automaton)?;
            match a.accepts(&decode_word(&word)) {
                Ok(true) => {
                    writeln!(out, "ACCEPT")?;
                    Ok(0)
                }
                Ok(false) => {
                    writeln!(out, "REJECT")?;
                    Ok(1)
                }
                Err(e) => Err(usage(e)),
            }
        }
        Command::Language { automaton, ell } => {
            let a = load_automaton(&automaton)?;
            for w in a.enumerate_accepted(ell).words() {
                writeln!(out, "{}", encode_word(w))?;
            }
            Ok(0)
        }
        Command::CoverCheck { automaton, language } => {
            let a = load_automaton(&automaton)?;
            let lang = load_language(&language)?;
            let verdict = is_cover(&a, &lang);
            if verdict.equal {
                writeln!(out, "COVER OK")?;
                Ok(0)
            } else {
                let witness = verdict.witness.as_deref().unwrap_or("");
                writeln!(out, "COVER FAIL witness={}", encode_word(witness))?;
                Ok(1)
            }
        }
        Command::Levels { automaton } => {
            let a = load_automaton(&automaton)?;
            let levels = a.levels();
            for s in 0..a.state_count() {
                match levels.get(s) {
                    Some(level) => writeln!(out, "{s} {level}")?,
                    None => writeln!(out, "{s} -")?,
                }
            }
            Ok(0)
        }
        Command::Similar { automaton, ell, states } => {
            let a = load_automaton(&automaton)?;
            match states.as_slice() {
                [] => {
                    for (p, q) in similarity_pairs(&a, ell).map_err(usage)? {
                        writeln!(out, "{p} {q}")?;
                    }
                    Ok(0)
                }
                &[p, q] => {
                    if state_similar(&a, ell, p, q).map_err(usage)? {
                        writeln!(out, "SIMILAR")?;
                        Ok(0)
                    } else {
                        writeln!(out, "DISSIMILAR")?;
                        Ok(1)
                    }
                }
                _ => Err(usage("similar takes zero or two state arguments")),
            }
        }
        Command::Reduce { automaton, language } => {
            let a = load_automaton(&automaton)?;
            let lang = load_language(&language)?;
            let (reduced, merges) = reduce_nfca(&a, &lang).map_err(usage)?;
            for m in &merges {
                let kind = match m.kind {
                    MergeKind::Strong => "strong",
                    MergeKind::Weak => "weak",
                };
                writeln!(out, "# {kind} merge: kept {}, removed {}", m.merged_into, m.removed)?;
            }
            write!(out, "{}", serialize_automaton(&reduced))?;
            Ok(0)
        }
        Command::DfcaMin { language } => {
            let lang = load_language(&language)?;
            write!(out, "{}", serialize_automaton(&minimize_dfca(&lang).to_nfa()))?;
            Ok(0)
        }
        Command::ExactMin { language, mode, max_n, deadline } => {
            let lang = load_language(&language)?;
            let mode = match mode {
                TargetKind::Nfa => SearchMode::Equal,
                TargetKind::Nfca => SearchMode::Cover,
            };
            match search_minimal(&lang, &budget(max_n, mode, deadline)?) {
                SearchOutcome::Found { size, witness } => {
                    writeln!(out, "# minimal states: {size}")?;
                    write!(out, "{}", serialize_automaton(&witness))?;
                    Ok(0)
                }
                SearchOutcome::Unknown { lower, timed_out } => {
                    writeln!(out, "UNKNOWN lower={lower} timed_out={timed_out}")?;
                    Ok(1)
                }
            }
        }
        Command::Fooling { action } => match action {
            FoolingAction::Verify { language, pairs, mode } => {
                let lang = load_language(&language)?;
                let pairs = parse_pairs(&read_file(&pairs)?)?;
                let set = FoolingSet::new(pairs, mode.into()).map_err(usage)?;
                let verdict = verify_fooling_set(&lang, &set);
                if verdict.valid {
                    writeln!(out, "VALID bound={}", verdict.bound)?;
                    Ok(0)
                } else {
                    let v = verdict.violation.expect("invalid verdicts carry a violation");
                    writeln!(out, "INVALID i={} j={} {}", v.i, v.j, v.clause)?;
                    Ok(1)
                }
            }
            FoolingAction::Search { language, mode } => {
                let lang = load_language(&language)?;
                let set = max_fooling_set(&lang, mode.into(), None).map_err(usage)?;
                writeln!(out, "# size: {}", set.len())?;
                write!(out, "{}", serialize_pairs(set.pairs()))?;
                Ok(0)
            }
        },
        Command::Report { language, max_n, deadline } => {
            let lang = load_language(&language)?;
            if max_n == 0 {
                return Err(usage("max-n must be at least 1"));
            }
            let report = complexity_report(&lang, max_n, parse_deadline(deadline)?);
            let value = json!({
                "sc": report.sc,
                "csc": report.csc,
                "nsc": json_value(report.nsc),
                "ncsc": json_value(report.ncsc),
            });
            writeln!(out, "{value}")?;
            Ok(0)
        }
        Command::Gen { family } => {
            match family {
                GenFamily::Lf { m, n } => {
                    let lang = families::gen_lf(m, n).map_err(usage)?;
                    write!(out, "{}", serialize_language(&lang))?;
                }
                GenFamily::Llk { l, k } => {
                    let lang = families::gen_llk(l, k).map_err(usage)?;
                    write!(out, "{}", serialize_language(&lang))?;
                }
                GenFamily::Ak { k } => {
                    let a = families::ak_automaton(k).map_err(usage)?;
                    write!(out, "{}", serialize_automaton(&a))?;
                }
            }
            Ok(0)
        }
        Command::Fixture { which } => {
            let (a, ell) = match which {
                FixtureName::Fig6 => families::fixture_fig6().map_err(usage)?,
                FixtureName::Fig7 => families::fixture_fig7().map_err(usage)?,
            };
            writeln!(out, "# ell: {ell}")?;
            write!(out, "{}", serialize_automaton(&a))?;
            Ok(0)
        }
        Command::SatReduce { cnf } => {
            let formula = parse_dimacs(&read_file(&cnf)?)?;
            let result = reduction_nfa(&formula);
            writeln!(out, "# ell: {}", result.ell)?;
            let primes: Vec<String> = result.primes.iter().map(usize::to_string).collect();
            writeln!(out, "# primes: {}", primes.join(" "))?;
            write!(out, "{}", serialize_automaton(&result.automaton))?;
            Ok(0)
        }
        Command::Dot { automaton } => {
            let a = load_automaton(&automaton)?;
            write!(out, "{}", to_dot(&a))?;
            Ok(0)
        }
    }
}
