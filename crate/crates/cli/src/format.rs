//! Text formats: automata, language files, pairs files, DIMACS CNF.
//!
//! All formats treat `#` as a comment-to-end-of-line marker and ignore
//! blank lines. `_` stands for the empty word wherever a word is expected.

use std::collections::BTreeSet;

use nfca_core::hardness::{CnfFormula, Literal};
use nfca_core::{FiniteLanguage, LangError, Nfa};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: malformed header {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: header `{key}:` given twice")]
    DuplicateHeader { line: usize, key: &'static str },
    #[error("line {line}: header `{key}:` must come before the body")]
    HeaderAfterBody { line: usize, key: &'static str },
    #[error("missing header `{key}:`")]
    MissingHeader { key: &'static str },
    #[error("line {line}: expected `src symbol dst`, got {text:?}")]
    BadTransition { line: usize, text: String },
    #[error("line {line}: state {state} out of range, automaton has {count} states")]
    StateOutOfRange { line: usize, state: usize, count: usize },
    #[error("line {line}: symbol '{symbol}' is not in the alphabet")]
    UnknownSymbol { line: usize, symbol: char },
    #[error("line {line}: duplicate transition")]
    DuplicateTransition { line: usize },
    #[error("line {line}: expected `x , y`, got {text:?}")]
    BadPair { line: usize, text: String },
    #[error("language: {0}")]
    Lang(#[from] LangError),
    #[error("automaton: {0}")]
    Automaton(#[from] nfca_core::AutomatonError),
    #[error("line {line}: expected `p cnf <variables> <clauses>`, got {text:?}")]
    BadProblemLine { line: usize, text: String },
    #[error("missing `p cnf` problem line")]
    MissingProblemLine,
    #[error("line {line}: bad literal {text:?}")]
    BadLiteral { line: usize, text: String },
    #[error("line {line}: literal {literal} names a variable above the declared count {count}")]
    LiteralOutOfRange { line: usize, literal: i64, count: usize },
    #[error("clause {index} has {len} literals; only 3CNF is supported")]
    ClauseTooLong { index: usize, len: usize },
    #[error("clause {index} is empty")]
    EmptyClause { index: usize },
    #[error("problem line declares {declared} clauses, file has {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

/// The empty word is written `_` so that it survives whitespace splitting.
pub fn decode_word(token: &str) -> String {
    if token == "_" {
        String::new()
    } else {
        token.to_string()
    }
}

pub fn encode_word(word: &str) -> &str {
    if word.is_empty() {
        "_"
    } else {
        word
    }
}

/// Numbered, comment-stripped, non-blank lines.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    })
}

fn header_value<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(':'))
        .map(str::trim)
}

pub fn parse_automaton(text: &str) -> Result<Nfa, FormatError> {
    let mut alphabet: Option<Vec<char>> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<usize> = None;
    let mut finals: Option<Vec<usize>> = None;
    let mut in_transitions = false;
    let mut transitions: Vec<(usize, char, usize)> = Vec::new();
    let mut seen = BTreeSet::new();

    for (line, body) in meaningful_lines(text) {
        if !in_transitions {
            if let Some(value) = header_value(body, "alphabet") {
                if alphabet.is_some() {
                    return Err(FormatError::DuplicateHeader { line, key: "alphabet" });
                }
                alphabet = Some(value.chars().filter(|c| !c.is_whitespace()).collect());
            } else if let Some(value) = header_value(body, "states") {
                if states.is_some() {
                    return Err(FormatError::DuplicateHeader { line, key: "states" });
                }
                states = Some(value.parse().map_err(|_| FormatError::BadHeader {
                    line,
                    text: body.to_string(),
                })?);
            } else if let Some(value) = header_value(body, "initial") {
                if initial.is_some() {
                    return Err(FormatError::DuplicateHeader { line, key: "initial" });
                }
                initial = Some(value.parse().map_err(|_| FormatError::BadHeader {
                    line,
                    text: body.to_string(),
                })?);
            } else if let Some(value) = header_value(body, "final") {
                if finals.is_some() {
                    return Err(FormatError::DuplicateHeader { line, key: "final" });
                }
                let mut list = Vec::new();
                for token in value.split_whitespace() {
                    list.push(token.parse().map_err(|_| FormatError::BadHeader {
                        line,
                        text: body.to_string(),
                    })?);
                }
                finals = Some(list);
            } else if header_value(body, "transitions").is_some() {
                in_transitions = true;
            } else {
                return Err(FormatError::BadHeader { line, text: body.to_string() });
            }
            continue;
        }

        let tokens: Vec<&str> = body.split_whitespace().collect();
        let &[src, sym, dst] = tokens.as_slice() else {
            return Err(FormatError::BadTransition { line, text: body.to_string() });
        };
        let src: usize = src
            .parse()
            .map_err(|_| FormatError::BadTransition { line, text: body.to_string() })?;
        let dst: usize = dst
            .parse()
            .map_err(|_| FormatError::BadTransition { line, text: body.to_string() })?;
        let mut sym_chars = sym.chars();
        let (Some(symbol), None) = (sym_chars.next(), sym_chars.next()) else {
            return Err(FormatError::BadTransition { line, text: body.to_string() });
        };
        let count = states.ok_or(FormatError::MissingHeader { key: "states" })?;
        let known = alphabet.as_ref().ok_or(FormatError::MissingHeader { key: "alphabet" })?;
        for state in [src, dst] {
            if state >= count {
                return Err(FormatError::StateOutOfRange { line, state, count });
            }
        }
        if !known.contains(&symbol) {
            return Err(FormatError::UnknownSymbol { line, symbol });
        }
        if !seen.insert((src, symbol, dst)) {
            return Err(FormatError::DuplicateTransition { line });
        }
        transitions.push((src, symbol, dst));
    }

    let alphabet = alphabet.ok_or(FormatError::MissingHeader { key: "alphabet" })?;
    let states = states.ok_or(FormatError::MissingHeader { key: "states" })?;
    let initial = initial.ok_or(FormatError::MissingHeader { key: "initial" })?;
    let finals = finals.ok_or(FormatError::MissingHeader { key: "final" })?;
    Ok(Nfa::new(states, alphabet, initial, finals, transitions)?)
}

pub fn serialize_automaton(a: &Nfa) -> String {
    let mut out = String::new();
    out.push_str("alphabet: ");
    out.extend(a.alphabet().iter());
    out.push('\n');
    out.push_str(&format!("states: {}\n", a.state_count()));
    out.push_str(&format!("initial: {}\n", a.initial()));
    out.push_str("final:");
    for s in a.finals() {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    out.push_str("transitions:\n");
    for (src, sym, dst) in a.transitions() {
        out.push_str(&format!("{src} {sym} {dst}\n"));
    }
    out
}

/// Language files: optional `alphabet:` and `ell:` headers, then one word
/// per line. Without `alphabet:` the symbols are collected from the words;
/// without `ell:` the bound is the longest word's length.
pub fn parse_language(text: &str) -> Result<FiniteLanguage, FormatError> {
    let mut alphabet: Option<Vec<char>> = None;
    let mut ell: Option<usize> = None;
    let mut words: Vec<String> = Vec::new();

    for (line, body) in meaningful_lines(text) {
        if let Some(value) = header_value(body, "alphabet") {
            if alphabet.is_some() {
                return Err(FormatError::DuplicateHeader { line, key: "alphabet" });
            }
            if !words.is_empty() {
                return Err(FormatError::HeaderAfterBody { line, key: "alphabet" });
            }
            alphabet = Some(value.chars().filter(|c| !c.is_whitespace()).collect());
        } else if let Some(value) = header_value(body, "ell") {
            if ell.is_some() {
                return Err(FormatError::DuplicateHeader { line, key: "ell" });
            }
            if !words.is_empty() {
                return Err(FormatError::HeaderAfterBody { line, key: "ell" });
            }
            ell = Some(value.parse().map_err(|_| FormatError::BadHeader {
                line,
                text: body.to_string(),
            })?);
        } else {
            words.push(decode_word(body));
        }
    }

    let alphabet = alphabet.unwrap_or_else(|| {
        let symbols: BTreeSet<char> = words.iter().flat_map(|w| w.chars()).collect();
        if symbols.is_empty() {
            vec!['a']
        } else {
            symbols.into_iter().collect()
        }
    });
    let lang = match ell {
        Some(ell) => FiniteLanguage::new(alphabet, words, ell)?,
        None => FiniteLanguage::with_max_ell(alphabet, words)?,
    };
    Ok(lang)
}

pub fn serialize_language(lang: &FiniteLanguage) -> String {
    let mut out = String::new();
    out.push_str("alphabet: ");
    out.extend(lang.alphabet().iter());
    out.push('\n');
    out.push_str(&format!("ell: {}\n", lang.ell()));
    for w in lang.words() {
        out.push_str(encode_word(w));
        out.push('\n');
    }
    out
}

/// Pairs files: one `x , y` per line.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>, FormatError> {
    let mut pairs = Vec::new();
    for (line, body) in meaningful_lines(text) {
        let mut halves = body.split(',');
        let (Some(x), Some(y), None) = (halves.next(), halves.next(), halves.next()) else {
            return Err(FormatError::BadPair { line, text: body.to_string() });
        };
        pairs.push((decode_word(x.trim()), decode_word(y.trim())));
    }
    Ok(pairs)
}

pub fn serialize_pairs(pairs: &[(String, String)]) -> String {
    let mut out = String::new();
    for (x, y) in pairs {
        out.push_str(&format!("{} , {}\n", encode_word(x), encode_word(y)));
    }
    out
}

/// DIMACS CNF, restricted to clauses of at most three literals; shorter
/// clauses are padded by repeating their last literal, which leaves the
/// formula logically unchanged.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, FormatError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();

    for (line, body) in meaningful_lines(text) {
        if body.starts_with('c') || body.starts_with('%') {
            continue;
        }
        if let Some(rest) = body.strip_prefix('p') {
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            let ok = tokens.len() == 3 && tokens[0] == "cnf";
            let parsed = if ok {
                tokens[1].parse::<usize>().ok().zip(tokens[2].parse::<usize>().ok())
            } else {
                None
            };
            declared =
                Some(parsed.ok_or(FormatError::BadProblemLine { line, text: body.to_string() })?);
            continue;
        }
        let (variables, _) = declared.ok_or(FormatError::MissingProblemLine)?;
        for token in body.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| FormatError::BadLiteral { line, text: token.to_string() })?;
            if value == 0 {
                clauses.push(close_clause(&current, clauses.len() + 1)?);
                current.clear();
                continue;
            }
            let variable = value.unsigned_abs() as usize;
            if variable > variables {
                return Err(FormatError::LiteralOutOfRange {
                    line,
                    literal: value,
                    count: variables,
                });
            }
            current.push(Literal::new(variable, value < 0));
        }
    }

    let (variables, clause_count) = declared.ok_or(FormatError::MissingProblemLine)?;
    if !current.is_empty() {
        clauses.push(close_clause(&current, clauses.len() + 1)?);
    }
    if clauses.len() != clause_count {
        return Err(FormatError::ClauseCountMismatch {
            declared: clause_count,
            found: clauses.len(),
        });
    }
    CnfFormula::new(variables, clauses).map_err(|e| FormatError::BadHeader {
        line: 0,
        text: e.to_string(),
    })
}

fn close_clause(literals: &[Literal], index: usize) -> Result<[Literal; 3], FormatError> {
    match literals {
        [] => Err(FormatError::EmptyClause { index }),
        &[a] => Ok([a, a, a]),
        &[a, b] => Ok([a, b, b]),
        &[a, b, c] => Ok([a, b, c]),
        _ => Err(FormatError::ClauseTooLong { index, len: literals.len() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nfca_core::families;

    #[test]
    fn the_minimal_file_accepts_only_the_empty_word() {
        let a = parse_automaton(
            "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntransitions:\n",
        )
        .unwrap();
        assert_eq!(a.state_count(), 1);
        assert!(a.accepts("").unwrap());
        assert!(!a.accepts("a").unwrap());
    }

    #[test]
    fn fig7_round_trips_identically() {
        let (a, _) = families::fixture_fig7().unwrap();
        let text = serialize_automaton(&a);
        assert_eq!(parse_automaton(&text).unwrap(), a);
        assert_eq!(serialize_automaton(&parse_automaton(&text).unwrap()), text);
    }

    #[test]
    fn foreign_symbols_name_the_line() {
        let text = "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntransitions:\n0 b 0\n";
        assert_eq!(
            parse_automaton(text),
            Err(FormatError::UnknownSymbol { line: 6, symbol: 'b' })
        );
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a machine\nalphabet: ab\n\nstates: 2\ninitial: 0\nfinal: 1\ntransitions:\n0 a 1 # the only edge\n";
        let a = parse_automaton(text).unwrap();
        assert_eq!(a.state_count(), 2);
        assert!(a.accepts("a").unwrap());
    }

    #[test]
    fn transition_validation_reports_positions() {
        let base = "alphabet: a\nstates: 2\ninitial: 0\nfinal: 1\ntransitions:\n";
        assert_eq!(
            parse_automaton(&format!("{base}0 a 5\n")),
            Err(FormatError::StateOutOfRange { line: 6, state: 5, count: 2 })
        );
        assert_eq!(
            parse_automaton(&format!("{base}0 a 1\n0 a 1\n")),
            Err(FormatError::DuplicateTransition { line: 7 })
        );
        assert_eq!(
            parse_automaton(&format!("{base}0 a\n")),
            Err(FormatError::BadTransition { line: 6, text: "0 a".into() })
        );
    }

    #[test]
    fn language_files_parse_headers_and_default_them() {
        let lang = parse_language("alphabet: ab\nell: 3\n_\nab\n").unwrap();
        assert_eq!(lang.alphabet(), &['a', 'b']);
        assert_eq!(lang.ell(), 3);
        assert_eq!(lang.words(), ["".to_string(), "ab".to_string()]);

        let defaulted = parse_language("ba\nb\n").unwrap();
        assert_eq!(defaulted.alphabet(), &['a', 'b']);
        assert_eq!(defaulted.ell(), 2);
    }

    #[test]
    fn language_rejects_words_beyond_the_declared_bound() {
        let err = parse_language("ell: 1\naa\n").unwrap_err();
        assert!(matches!(err, FormatError::Lang(LangError::WordTooLong { .. })));
    }

    #[test]
    fn pairs_round_trip_with_epsilon_markers() {
        let pairs = vec![
            (String::new(), "ab".to_string()),
            ("a".to_string(), String::new()),
        ];
        let text = serialize_pairs(&pairs);
        assert_eq!(text, "_ , ab\na , _\n");
        assert_eq!(parse_pairs(&text).unwrap(), pairs);
        assert_eq!(
            parse_pairs("a b\n"),
            Err(FormatError::BadPair { line: 1, text: "a b".into() })
        );
    }

    #[test]
    fn dimacs_parses_pads_and_validates() {
        let f = parse_dimacs("c tiny\np cnf 2 2\n1 -2 0\n2 0\n").unwrap();
        assert_eq!(f.variable_count(), 2);
        assert_eq!(f.clauses().len(), 2);
        assert_eq!(f.clauses()[1][1], f.clauses()[1][2]);

        assert_eq!(
            parse_dimacs("p cnf 1 1\n1 1 1 1 0\n"),
            Err(FormatError::ClauseTooLong { index: 1, len: 4 })
        );
        assert_eq!(
            parse_dimacs("p cnf 1 2\n1 0\n"),
            Err(FormatError::ClauseCountMismatch { declared: 2, found: 1 })
        );
        assert_eq!(
            parse_dimacs("p cnf 1 1\n2 0\n"),
            Err(FormatError::LiteralOutOfRange { line: 2, literal: 2, count: 1 })
        );
    }
}
