//! Assembling all four complexity measures of one language.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Duration;

use crate::automata::Nfa;
use crate::bounds::{max_fooling_set, FoolingMode};
use crate::lang::FiniteLanguage;

use super::{
    minimal_nfa_exact, minimal_unary_nfa_for_lengthset, minimize_dfca, ComplexityReport,
    ComplexityValue, SearchBudget, SearchMode, SearchOutcome,
};

/// Computes the deterministic measures outright and runs both exhaustive
/// searches, each capped at `max_states` and, when given, at `deadline` of
/// wall-clock time of its own. A search that cannot finish leaves an
/// interval whose floor combines the refuted sizes with a fooling-set
/// bound; everything below the deterministic witnesses refuted makes the
/// witness size exact.
pub fn complexity_report(
    lang: &FiniteLanguage,
    max_states: usize,
    deadline: Option<Duration>,
) -> ComplexityReport {
    assert!(max_states >= 1, "a search needs at least one state");
    let dfa = lang.dfa_of();
    let sc = dfa.state_count();
    let dfca = minimize_dfca(lang);
    let csc = dfca.state_count();

    let exact_seed = dfa.to_nfa().trimmed(lang.ell());
    let (mut nsc, nsc_witness) =
        settle(lang, SearchMode::Equal, exact_seed, max_states, deadline);

    let trimmed_dfca = dfca.to_nfa().trimmed(lang.ell());
    let cover_seed = if trimmed_dfca.state_count() < nsc_witness.state_count() {
        trimmed_dfca
    } else {
        nsc_witness.clone()
    };
    let (mut ncsc, ncsc_witness) =
        settle(lang, SearchMode::Cover, cover_seed, max_states, deadline);

    if !ncsc.is_exact() {
        ncsc = ncsc.raise_lower(fooling_floor(lang, FoolingMode::CoverExtended));
    }
    if !nsc.is_exact() {
        nsc = nsc
            .raise_lower(fooling_floor(lang, FoolingMode::NfaExtended))
            .raise_lower(ncsc.lower());
    }

    let mut witnesses = BTreeMap::new();
    witnesses.insert("sc", dfa.to_nfa());
    witnesses.insert("csc", dfca.to_nfa());
    witnesses.insert("nsc", nsc_witness);
    witnesses.insert("ncsc", ncsc_witness);
    ComplexityReport { sc, csc, nsc, ncsc, witnesses }
}

/// Tries to beat `seed` by exhaustive search below its size; returns the
/// settled value and the best automaton realizing its upper end.
fn settle(
    lang: &FiniteLanguage,
    mode: SearchMode,
    seed: Nfa,
    max_states: usize,
    deadline: Option<Duration>,
) -> (ComplexityValue, Nfa) {
    let upper = seed.state_count();
    if upper == 1 {
        return (ComplexityValue::Exact(1), seed);
    }
    let cap = max_states.min(upper - 1);
    let mut budget = SearchBudget::new(cap, mode);
    if let Some(limit) = deadline {
        budget = budget.with_deadline(limit);
    }
    match search(lang, &budget) {
        SearchOutcome::Found { size, witness } => (ComplexityValue::Exact(size), witness),
        SearchOutcome::Unknown { lower, timed_out } => {
            if !timed_out && cap == upper - 1 {
                (ComplexityValue::Exact(upper), seed)
            } else {
                (ComplexityValue::Bounds { lower, upper }.normalized(), seed)
            }
        }
    }
}

fn search(lang: &FiniteLanguage, budget: &SearchBudget) -> SearchOutcome {
    if let [letter] = lang.alphabet() {
        let lengths: BTreeSet<usize> =
            lang.words().iter().map(|w| w.chars().count()).collect();
        match minimal_unary_nfa_for_lengthset(&lengths, lang.ell(), budget) {
            SearchOutcome::Found { size, witness } => {
                SearchOutcome::Found { size, witness: with_letter(&witness, *letter) }
            }
            unknown => unknown,
        }
    } else {
        minimal_nfa_exact(lang, budget)
    }
}

fn with_letter(nfa: &Nfa, letter: char) -> Nfa {
    if nfa.alphabet() == [letter] {
        return nfa.clone();
    }
    let transitions = nfa
        .transitions()
        .into_iter()
        .map(|(from, _, to)| (from, letter, to));
    Nfa::new(
        nfa.state_count(),
        vec![letter],
        nfa.initial(),
        nfa.finals().iter().copied(),
        transitions,
    )
    .expect("relettering keeps the automaton well-formed")
}

fn fooling_floor(lang: &FiniteLanguage, mode: FoolingMode) -> usize {
    max_fooling_set(lang, mode, None).map_or(0, |set| set.len())
}
