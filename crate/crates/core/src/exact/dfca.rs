//! Minimal deterministic cover automata.
//!
//! Starting from the minimal DFA of the language exactly, states are merged
//! by similarity of their shortest witnesses: two DFA states behave
//! identically within the length budget precisely when those words are
//! similar in the language. Scanning states in discovery order (which is
//! level order) and joining the first similar representative yields a
//! minimal cover DFA whose size is the number of similarity classes — the
//! same number a maximal dissimilar word sequence counts from below.

use crate::automata::Dfa;
use crate::lang::FiniteLanguage;

/// Builds a minimal complete DFA covering `lang`, with as many states as
/// the language has similarity classes (`csc`).
pub fn minimize_dfca(lang: &FiniteLanguage) -> Dfa {
    let dfa = lang.dfa_of();
    let nfa = dfa.to_nfa();
    let n = dfa.state_count();
    let witnesses: Vec<String> = (0..n)
        .map(|s| nfa.shortest_witness(s).expect("minimal DFA states are reachable"))
        .collect();

    // The minimal DFA numbers states by breadth-first discovery, so this
    // scan meets states in nondecreasing level order; the first similar
    // representative therefore always has the smaller level, which is what
    // makes joining it safe.
    let mut representatives: Vec<usize> = Vec::new();
    let mut class: Vec<usize> = vec![0; n];
    for s in 0..n {
        let home = representatives
            .iter()
            .position(|&r| lang.word_similar(&witnesses[r], &witnesses[s]));
        match home {
            Some(idx) => class[s] = idx,
            None => {
                class[s] = representatives.len();
                representatives.push(s);
            }
        }
    }

    let next: Vec<Vec<usize>> = representatives
        .iter()
        .map(|&r| {
            (0..dfa.alphabet().len())
                .map(|sym| class[dfa.next_state(r, sym)])
                .collect()
        })
        .collect();
    let finals = representatives
        .iter()
        .enumerate()
        .filter(|&(_, &r)| dfa.is_final(r))
        .map(|(idx, _)| idx);
    Dfa::new(dfa.alphabet().to_vec(), class[dfa.initial()], finals, next)
        .expect("class merging preserves completeness")
}
