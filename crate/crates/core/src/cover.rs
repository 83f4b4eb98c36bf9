//! Cover verdicts and similarity of states in a cover automaton.
//!
//! An automaton `A` covers a finite language `L` with bound `ell` when the
//! words of length at most `ell` accepted by `A` are exactly `L`. Two states
//! are *similar* when, within the length budget left by their levels, the
//! same suffixes lead to acceptance. Similar states are what merging (see
//! [`crate::reduce`]) removes; unlike Myhill–Nerode equivalence, similarity
//! is reflexive and symmetric but not transitive.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::automata::Nfa;
use crate::lang::FiniteLanguage;
use crate::words::shortlex_cmp;

/// Errors from similarity queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("state {state} out of range, automaton has {state_count} states")]
    StateOutOfRange { state: usize, state_count: usize },
    #[error("state {0} is not reachable from the initial state")]
    UnreachableState(usize),
    #[error("state {state} has level {level}, beyond the bound {ell}; trim the automaton first")]
    LevelExceedsBound { state: usize, level: usize, ell: usize },
}

/// Outcome of a cover check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverVerdict {
    /// Whether the bounded language of the automaton equals the language.
    pub equal: bool,
    /// Shortlex-least disagreeing word when not equal.
    pub witness: Option<String>,
}

/// Checks whether `a` is a cover automaton for `lang`, i.e. whether the
/// words of length at most `lang.ell()` accepted by `a` are exactly the
/// language. The witness is the shortlex-least disagreement under `a`'s
/// alphabet order.
pub fn is_cover(a: &Nfa, lang: &FiniteLanguage) -> CoverVerdict {
    let accepted = a.enumerate_accepted(lang.ell());
    let mine: BTreeSet<&String> = accepted.words().iter().collect();
    let theirs: BTreeSet<&String> = lang.words().iter().collect();
    let witness = mine
        .symmetric_difference(&theirs)
        .map(|w| w.as_str())
        .min_by(|x, y| shortlex_cmp(a.alphabet(), x, y));
    match witness {
        None => CoverVerdict { equal: true, witness: None },
        Some(w) => CoverVerdict { equal: false, witness: Some(w.to_string()) },
    }
}

fn level_checked(a: &Nfa, ell: usize, state: usize) -> Result<usize, CoverError> {
    if state >= a.state_count() {
        return Err(CoverError::StateOutOfRange { state, state_count: a.state_count() });
    }
    let level = a
        .levels()
        .get(state)
        .ok_or(CoverError::UnreachableState(state))?;
    if level > ell {
        return Err(CoverError::LevelExceedsBound { state, level, ell });
    }
    Ok(level)
}

/// Are states `p` and `q` similar in `a` under the bound `ell`? Both states
/// must be reachable with level at most `ell`.
///
/// The check walks pairs of state subsets in lockstep, one subset per word
/// prefix, memoizing visited subset pairs together with the largest suffix
/// budget they were entered with.
pub fn state_similar(a: &Nfa, ell: usize, p: usize, q: usize) -> Result<bool, CoverError> {
    let lp = level_checked(a, ell, p)?;
    let lq = level_checked(a, ell, q)?;
    let budget = ell - lp.max(lq);
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), usize> = HashMap::new();
    Ok(similar_sets(
        a,
        &BTreeSet::from([p]),
        &BTreeSet::from([q]),
        budget,
        &mut memo,
    ))
}

fn similar_sets(
    a: &Nfa,
    s: &BTreeSet<usize>,
    t: &BTreeSet<usize>,
    budget: usize,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), usize>,
) -> bool {
    let accepts_s = s.iter().any(|x| a.is_final(*x));
    let accepts_t = t.iter().any(|x| a.is_final(*x));
    if accepts_s != accepts_t {
        return false;
    }
    if budget == 0 {
        return true;
    }
    let mut key = (
        s.iter().copied().collect::<Vec<_>>(),
        t.iter().copied().collect::<Vec<_>>(),
    );
    if key.0 > key.1 {
        std::mem::swap(&mut key.0, &mut key.1);
    }
    if memo.get(&key).map_or(false, |&b| b >= budget) {
        // Already verified, or an enclosing call with at least this budget
        // is exploring the same pair and will cover all our suffixes.
        return true;
    }
    memo.insert(key, budget);
    for sym in 0..a.alphabet().len() {
        let ns = a.step(s, sym);
        let nt = a.step(t, sym);
        if !similar_sets(a, &ns, &nt, budget - 1, memo) {
            return false;
        }
    }
    true
}

/// All similar pairs `(p, q)` with `p < q`, in increasing order. The
/// automaton must be trimmed to `ell`: every state reachable with level at
/// most `ell`.
pub fn similarity_pairs(a: &Nfa, ell: usize) -> Result<Vec<(usize, usize)>, CoverError> {
    for s in 0..a.state_count() {
        level_checked(a, ell, s)?;
    }
    let mut pairs = Vec::new();
    for p in 0..a.state_count() {
        for q in p + 1..a.state_count() {
            if state_similar(a, ell, p, q)? {
                pairs.push((p, q));
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn cover_check_accepts_the_chain_family() {
        let a = families::nfca_fig2(4).unwrap();
        for m in 0..4 {
            let l = families::gen_lf(m, 4).unwrap();
            let verdict = is_cover(&a, &l);
            assert!(verdict.equal, "m = {m}: witness {:?}", verdict.witness);
        }
    }

    #[test]
    fn cover_check_reports_the_least_disagreement() {
        let a = families::nfca_fig2(4).unwrap();
        let small = crate::lang::FiniteLanguage::new(
            a.alphabet().to_vec(),
            ["aaa".to_string()],
            4,
        )
        .unwrap();
        let verdict = is_cover(&a, &small);
        assert!(!verdict.equal);
        assert_eq!(verdict.witness.as_deref(), Some("aab"));
    }

    #[test]
    fn missing_words_also_break_the_cover() {
        let a = Nfa::new(1, vec!['a'], 0, [], []).unwrap();
        let l = crate::lang::FiniteLanguage::new(vec!['a'], ["a".to_string()], 2).unwrap();
        let verdict = is_cover(&a, &l);
        assert!(!verdict.equal);
        assert_eq!(verdict.witness.as_deref(), Some("a"));
    }

    #[test]
    fn the_two_cycles_of_fig6_are_similar_within_the_bound() {
        let (a, ell) = families::fixture_fig6().unwrap();
        assert!(state_similar(&a, ell, 2, 7).unwrap());
        assert!(!state_similar(&a, ell, 1, 3).unwrap());
        assert!(state_similar(&a, ell, 0, 0).unwrap());
    }

    #[test]
    fn fig7_pairs_include_the_documented_merge_candidate() {
        let (a, ell) = families::fixture_fig7().unwrap();
        let pairs = similarity_pairs(&a, ell).unwrap();
        assert!(pairs.contains(&(3, 5)), "pairs: {pairs:?}");
        for &(p, q) in &pairs {
            assert!(p < q);
            assert!(state_similar(&a, ell, p, q).unwrap());
        }
    }

    #[test]
    fn similarity_requires_reachable_states_within_the_bound() {
        let a = Nfa::new(3, vec!['a'], 0, [2], [(0, 'a', 2), (1, 'a', 2)]).unwrap();
        assert_eq!(
            state_similar(&a, 4, 1, 2),
            Err(CoverError::UnreachableState(1))
        );
        let chain = Nfa::new(3, vec!['a'], 0, [2], [(0, 'a', 1), (1, 'a', 2)]).unwrap();
        assert_eq!(
            state_similar(&chain, 1, 0, 2),
            Err(CoverError::LevelExceedsBound { state: 2, level: 2, ell: 1 })
        );
        assert_eq!(
            similarity_pairs(&chain, 1),
            Err(CoverError::LevelExceedsBound { state: 2, level: 2, ell: 1 })
        );
    }

    #[test]
    fn states_with_no_budget_left_are_vacuously_similar() {
        // Both states sit at the bound; only the empty suffix is tested.
        let a = Nfa::new(3, vec!['a'], 0, [1, 2], [(0, 'a', 1), (0, 'a', 2), (2, 'a', 0)]).unwrap();
        assert!(state_similar(&a, 1, 1, 2).unwrap());
        assert!(!state_similar(&a, 3, 1, 2).unwrap());
    }
}
