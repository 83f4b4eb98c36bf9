//! Explicit finite languages with a length bound.
//!
//! A [`FiniteLanguage`] is a finite set of words over a declared alphabet
//! together with a bound `ell` at least the length of the longest word. The
//! bound is the horizon up to which cover automata must agree with the
//! language; everything beyond it is unconstrained.

use std::cmp::Ordering;

use thiserror::Error;

use crate::automata::Dfa;
use crate::clique;
use crate::words::{count_words_up_to, shortlex_cmp, symbol_index, words_up_to};

/// Errors produced while building a finite language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LangError {
    #[error("alphabet declares symbol '{0}' twice")]
    DuplicateSymbol(char),
    #[error("word {word:?} uses symbol '{symbol}' outside the alphabet")]
    UnknownSymbol { word: String, symbol: char },
    #[error("word {word:?} is longer than the bound {ell}")]
    WordTooLong { word: String, ell: usize },
}

/// A finite set of words plus its length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLanguage {
    alphabet: Vec<char>,
    /// Deduplicated, in shortlex order for the declared alphabet.
    words: Vec<String>,
    ell: usize,
}

impl FiniteLanguage {
    /// Builds a language with an explicit bound `ell`.
    pub fn new(
        alphabet: Vec<char>,
        words: impl IntoIterator<Item = String>,
        ell: usize,
    ) -> Result<Self, LangError> {
        for (i, &c) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(&c) {
                return Err(LangError::DuplicateSymbol(c));
            }
        }
        let mut words: Vec<String> = words.into_iter().collect();
        for w in &words {
            if w.chars().count() > ell {
                return Err(LangError::WordTooLong { word: w.clone(), ell });
            }
            for c in w.chars() {
                if symbol_index(&alphabet, c).is_none() {
                    return Err(LangError::UnknownSymbol { word: w.clone(), symbol: c });
                }
            }
        }
        words.sort_by(|a, b| shortlex_cmp(&alphabet, a, b));
        words.dedup();
        Ok(FiniteLanguage { alphabet, words, ell })
    }

    /// Builds a language whose bound is the length of its longest word
    /// (zero for the empty language).
    pub fn with_max_ell(
        alphabet: Vec<char>,
        words: impl IntoIterator<Item = String>,
    ) -> Result<Self, LangError> {
        let words: Vec<String> = words.into_iter().collect();
        let ell = words.iter().map(|w| w.chars().count()).max().unwrap_or(0);
        Self::new(alphabet, words, ell)
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    /// The length bound.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Words in shortlex order.
    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words
            .binary_search_by(|w| shortlex_cmp(&self.alphabet, w, word))
            .is_ok()
    }

    /// Word similarity: `x` and `y` agree on membership of `xw` and `yw` for
    /// every extension `w` with `|w| ≤ ell − max(|x|, |y|)`. Words longer
    /// than the bound have no extensions to test and are similar to
    /// everything.
    pub fn word_similar(&self, x: &str, y: &str) -> bool {
        let lx = x.chars().count();
        let ly = y.chars().count();
        let Some(budget) = self.ell.checked_sub(lx.max(ly)) else {
            return true;
        };
        let mut xe = String::from(x);
        let mut ye = String::from(y);
        for w in words_up_to(&self.alphabet, budget) {
            xe.truncate(x.len());
            xe.push_str(&w);
            ye.truncate(y.len());
            ye.push_str(&w);
            if self.contains(&xe) != self.contains(&ye) {
                return false;
            }
        }
        true
    }

    /// A maximum-size set of pairwise dissimilar words from `Σ^{≤ell}`,
    /// in shortlex order. Its size equals the minimal cover-DFA size.
    ///
    /// A greedy pass seeds an exact branch-and-bound clique search on the
    /// dissimilarity graph, so the result is deterministic.
    pub fn max_dissimilar_sequence(&self) -> Vec<String> {
        let universe = words_up_to(&self.alphabet, self.ell);
        let n = universe.len();
        // Membership profile of each word over all of its extensions, in
        // shortlex extension order. Because shorter-bounded enumerations are
        // prefixes of longer ones, two words are similar exactly when their
        // profiles agree on the first `count_words_up_to(k, budget)` bits.
        let profiles: Vec<Vec<u64>> = universe
            .iter()
            .map(|x| {
                let budget = self.ell - x.chars().count();
                let exts = words_up_to(&self.alphabet, budget);
                let mut bits = vec![0u64; (exts.len() + 63) / 64];
                let mut xe = String::from(x.as_str());
                for (i, w) in exts.iter().enumerate() {
                    xe.truncate(x.len());
                    xe.push_str(w);
                    if self.contains(&xe) {
                        bits[i / 64] |= 1 << (i % 64);
                    }
                }
                bits
            })
            .collect();
        let lengths: Vec<usize> = universe.iter().map(|w| w.chars().count()).collect();
        let k = self.alphabet.len();
        let mut adj = vec![vec![0u64; (n + 63) / 64]; n];
        for i in 0..n {
            for j in i + 1..n {
                let budget = self.ell - lengths[i].max(lengths[j]);
                let prefix = count_words_up_to(k, budget);
                if !profiles_agree(&profiles[i], &profiles[j], prefix) {
                    adj[i][j / 64] |= 1 << (j % 64);
                    adj[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        let best = clique::max_clique(n, &adj);
        let mut words: Vec<String> = best.into_iter().map(|i| universe[i].clone()).collect();
        words.sort_by(|a, b| shortlex_cmp(&self.alphabet, a, b));
        words
    }

    /// The minimal complete DFA accepting exactly this set of words, in
    /// canonical breadth-first form. Built from the word trie plus a sink.
    pub fn dfa_of(&self) -> Dfa {
        let k = self.alphabet.len();
        // Trie over all prefixes of member words.
        let mut next: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
        let mut finals = Vec::new();
        for w in &self.words {
            let mut node = 0;
            for c in w.chars() {
                let sym = symbol_index(&self.alphabet, c).unwrap();
                node = match next[node][sym] {
                    Some(t) => t,
                    None => {
                        let t = next.len();
                        next.push(vec![None; k]);
                        next[node][sym] = Some(t);
                        t
                    }
                };
            }
            finals.push(node);
        }
        let sink = next.len();
        let mut table: Vec<Vec<usize>> = next
            .into_iter()
            .map(|row| row.into_iter().map(|t| t.unwrap_or(sink)).collect())
            .collect();
        table.push(vec![sink; k]);
        Dfa::new(self.alphabet.clone(), 0, finals, table)
            .expect("trie construction produces a valid DFA")
            .minimized()
    }
}

fn profiles_agree(a: &[u64], b: &[u64], prefix_bits: usize) -> bool {
    let full = prefix_bits / 64;
    if a[..full] != b[..full] {
        return false;
    }
    let rem = prefix_bits % 64;
    if rem == 0 {
        return true;
    }
    let mask = (1u64 << rem) - 1;
    (a[full] ^ b[full]) & mask == 0
}

/// Convenience ordering for tests and callers sorting words of a language.
pub fn cmp_in(lang: &FiniteLanguage, a: &str, b: &str) -> Ordering {
    shortlex_cmp(lang.alphabet(), a, b)
}
