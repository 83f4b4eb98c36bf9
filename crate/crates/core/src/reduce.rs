//! NFCA size reduction by state merging.
//!
//! Two merge flavours, both removing state `q` in favour of state `p`:
//!
//! * *weak*: `q` collapses into `p` — in- and out-transitions and finality
//!   are united. The bounded language never shrinks but may grow.
//! * *strong*: `q`'s in-transitions are redirected to `p`, its out-row and
//!   finality are deleted. When `p` and `q` are similar and
//!   `level(p) ≤ level(q)`, a strong merge preserves cover equality.
//!
//! [`reduce_nfca`] iterates such sanctioned strong merges to a fixpoint.
//! [`replace_subautomaton`] swaps the sub-automaton hanging off one state
//! for the union of two given automata with the same bounded behaviour.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::automata::Nfa;
use crate::cover::{is_cover, similarity_pairs, CoverError};
use crate::lang::FiniteLanguage;

/// Errors from merge and replacement operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("state {state} out of range, automaton has {state_count} states")]
    StateOutOfRange { state: usize, state_count: usize },
    #[error("cannot merge state {0} with itself")]
    MergeWithSelf(usize),
    #[error("input is not a cover automaton for the language, witness {witness:?}")]
    NotACover { witness: Option<String> },
    #[error(
        "cover lost after strong-merging {removed} into {merged_into}, witness {witness:?}; \
         similarity analysis and merge disagree"
    )]
    CoverLost {
        merged_into: usize,
        removed: usize,
        witness: Option<String>,
    },
    #[error("replacement automata must use the same alphabet as the host")]
    AlphabetMismatch,
    #[error(
        "closure violated: state {state} outside the sub-automaton of {root} \
         reaches {target} inside it on '{symbol}'"
    )]
    ClosureViolated {
        state: usize,
        root: usize,
        target: usize,
        symbol: char,
    },
    #[error("the initial state lies strictly inside the sub-automaton of {root}")]
    InitialInsideSubautomaton { root: usize },
    #[error(
        "replacement languages disagree with the right language of {root} \
         on {word:?} within budget {budget}"
    )]
    RightLanguageMismatch {
        root: usize,
        word: String,
        budget: usize,
    },
    #[error("replacement breaks the cover, witness {witness:?}")]
    ReplacementBreaksCover { witness: Option<String> },
    #[error(transparent)]
    State(#[from] CoverError),
}

/// Which merge produced a [`MergeReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeKind {
    Weak,
    Strong,
}

impl std::fmt::Display for MergeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MergeKind::Weak => write!(f, "weak"),
            MergeKind::Strong => write!(f, "strong"),
        }
    }
}

/// One merge step performed by [`reduce_nfca`]. State indices refer to the
/// automaton as it was immediately before this step (merging compacts
/// indices, so later reports use later numberings).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeReport {
    pub kind: MergeKind,
    pub merged_into: usize,
    pub removed: usize,
    pub cover_preserved: bool,
    /// Disagreeing word when the merge broke the cover.
    pub witness: Option<String>,
}

fn check_pair(a: &Nfa, p: usize, q: usize) -> Result<(), ReduceError> {
    for s in [p, q] {
        if s >= a.state_count() {
            return Err(ReduceError::StateOutOfRange {
                state: s,
                state_count: a.state_count(),
            });
        }
    }
    if p == q {
        return Err(ReduceError::MergeWithSelf(p));
    }
    Ok(())
}

fn rebuild_without(
    a: &Nfa,
    q: usize,
    initial: usize,
    finals: impl IntoIterator<Item = usize>,
    transitions: impl IntoIterator<Item = (usize, char, usize)>,
) -> Nfa {
    let relabel = |s: usize| if s > q { s - 1 } else { s };
    let transitions: BTreeSet<(usize, char, usize)> = transitions
        .into_iter()
        .map(|(s, c, t)| (relabel(s), c, relabel(t)))
        .collect();
    Nfa::new(
        a.state_count() - 1,
        a.alphabet().to_vec(),
        relabel(initial),
        finals.into_iter().map(relabel),
        transitions,
    )
    .expect("merge produces a well-formed automaton")
}

/// Collapses state `q` into state `p`: every transition endpoint `q`
/// becomes `p`, and `p` is final if either state was. Indices above `q`
/// shift down by one.
pub fn weak_merge(a: &Nfa, p: usize, q: usize) -> Result<Nfa, ReduceError> {
    check_pair(a, p, q)?;
    let collapse = |s: usize| if s == q { p } else { s };
    let transitions: Vec<_> = a
        .transitions()
        .into_iter()
        .map(|(s, c, t)| (collapse(s), c, collapse(t)))
        .collect();
    let finals: Vec<_> = a.finals().iter().map(|&f| collapse(f)).collect();
    Ok(rebuild_without(a, q, collapse(a.initial()), finals, transitions))
}

/// Redirects transitions entering `q` to `p` and deletes `q` together with
/// its outgoing transitions and finality; `p`'s own finality is unchanged.
/// Indices above `q` shift down by one. Cover preservation is NOT checked
/// here; [`reduce_nfca`] applies the similar-states-and-lower-level
/// sufficient condition.
pub fn strong_merge(a: &Nfa, p: usize, q: usize) -> Result<Nfa, ReduceError> {
    check_pair(a, p, q)?;
    let transitions: Vec<_> = a
        .transitions()
        .into_iter()
        .filter(|&(s, _, _)| s != q)
        .map(|(s, c, t)| (s, c, if t == q { p } else { t }))
        .collect();
    let finals: Vec<_> = a.finals().iter().copied().filter(|&f| f != q).collect();
    let initial = if a.initial() == q { p } else { a.initial() };
    Ok(rebuild_without(a, q, initial, finals, transitions))
}

/// Greedy reduction pipeline: repeatedly trim, recompute similarity, and
/// strong-merge one similar pair until none remains. The removed state is
/// always the one with the higher level (ties keep the lower index); among
/// candidate pairs the one removing the highest-level state goes first
/// (ties pick the smallest pair). Every merge is re-verified against the
/// language, so the result is always a cover automaton.
pub fn reduce_nfca(
    a: &Nfa,
    lang: &FiniteLanguage,
) -> Result<(Nfa, Vec<MergeReport>), ReduceError> {
    let verdict = is_cover(a, lang);
    if !verdict.equal {
        return Err(ReduceError::NotACover { witness: verdict.witness });
    }
    let ell = lang.ell();
    let mut current = a.clone();
    let mut reports = Vec::new();
    loop {
        current = current.trimmed(ell);
        let pairs = similarity_pairs(&current, ell)?;
        let levels = current.levels();
        let chosen = pairs
            .into_iter()
            .map(|(p, q)| {
                let (lp, lq) = (levels.get(p).unwrap(), levels.get(q).unwrap());
                let (keep, removed) = if lp <= lq { (p, q) } else { (q, p) };
                (keep, removed, lp.max(lq))
            })
            .max_by(|x, y| {
                // Highest removed level wins; among equals the pair seen
                // first (smallest indices) wins, so compare reversed.
                x.2.cmp(&y.2)
                    .then_with(|| (y.0.min(y.1), y.0.max(y.1)).cmp(&(x.0.min(x.1), x.0.max(x.1))))
            });
        let Some((keep, removed, _)) = chosen else {
            break;
        };
        let merged = strong_merge(&current, keep, removed)?;
        let check = is_cover(&merged, lang);
        if !check.equal {
            return Err(ReduceError::CoverLost {
                merged_into: keep,
                removed,
                witness: check.witness,
            });
        }
        reports.push(MergeReport {
            kind: MergeKind::Strong,
            merged_into: keep,
            removed,
            cover_preserved: true,
            witness: None,
        });
        current = merged;
    }
    Ok((current, reports))
}

/// Replaces the sub-automaton generated by `p` — the states reachable from
/// `p` that still lead to a final state — by the disjoint union of `a1` and
/// `a2`, grafting both initial states onto `p`.
///
/// Requirements, each checked: no state outside the sub-automaton may enter
/// it anywhere but at `p`; the initial state must not lie strictly inside
/// it; and `L(a1) ∪ L(a2)` must agree with the right language of `p` on all
/// words up to `lang.ell() − level(p)`. The result keeps the outside states
/// (in order), then `a1`'s states, then `a2`'s, and is verified to still
/// cover `lang`.
pub fn replace_subautomaton(
    a: &Nfa,
    p: usize,
    a1: &Nfa,
    a2: &Nfa,
    lang: &FiniteLanguage,
) -> Result<Nfa, ReduceError> {
    if p >= a.state_count() {
        return Err(ReduceError::StateOutOfRange { state: p, state_count: a.state_count() });
    }
    if a1.alphabet() != a.alphabet() || a2.alphabet() != a.alphabet() {
        return Err(ReduceError::AlphabetMismatch);
    }
    let ell = lang.ell();
    let level_p = a
        .levels()
        .get(p)
        .ok_or(ReduceError::State(CoverError::UnreachableState(p)))?;
    if level_p > ell {
        return Err(ReduceError::State(CoverError::LevelExceedsBound {
            state: p,
            level: level_p,
            ell,
        }));
    }
    let budget = ell - level_p;

    let mut reach = vec![false; a.state_count()];
    let mut queue = vec![p];
    reach[p] = true;
    while let Some(s) = queue.pop() {
        for sym in 0..a.alphabet().len() {
            for &t in a.successors(s, sym) {
                if !reach[t] {
                    reach[t] = true;
                    queue.push(t);
                }
            }
        }
    }
    let alive = a.distances_to_final();
    let in_sub: Vec<bool> = (0..a.state_count())
        .map(|s| reach[s] && (alive[s].is_some() || s == p))
        .collect();

    for s in 0..a.state_count() {
        if in_sub[s] {
            continue;
        }
        for sym in 0..a.alphabet().len() {
            for &t in a.successors(s, sym) {
                if in_sub[t] && t != p {
                    return Err(ReduceError::ClosureViolated {
                        state: s,
                        root: p,
                        target: t,
                        symbol: a.alphabet()[sym],
                    });
                }
            }
        }
    }
    if in_sub[a.initial()] && a.initial() != p {
        return Err(ReduceError::InitialInsideSubautomaton { root: p });
    }

    let right: BTreeSet<String> = a
        .with_initial(p)
        .expect("p was validated above")
        .enumerate_accepted(budget)
        .words()
        .iter()
        .cloned()
        .collect();
    let mut replacement: BTreeSet<String> = a1
        .enumerate_accepted(budget)
        .words()
        .iter()
        .cloned()
        .collect();
    replacement.extend(a2.enumerate_accepted(budget).words().iter().cloned());
    if let Some(word) = right
        .symmetric_difference(&replacement)
        .min_by(|x, y| crate::words::shortlex_cmp(a.alphabet(), x, y))
    {
        return Err(ReduceError::RightLanguageMismatch {
            root: p,
            word: word.clone(),
            budget,
        });
    }

    let kept: Vec<usize> = (0..a.state_count())
        .filter(|&s| !in_sub[s] || s == p)
        .collect();
    let index: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let off1 = kept.len();
    let off2 = off1 + a1.state_count();
    let mut transitions: BTreeSet<(usize, char, usize)> = BTreeSet::new();
    for &s in &kept {
        for sym in 0..a.alphabet().len() {
            let c = a.alphabet()[sym];
            for &t in a.successors(s, sym) {
                if s == p {
                    // p's old row survives only where it left the
                    // sub-automaton, plus its own self-loop.
                    if !in_sub[t] {
                        transitions.insert((index[&p], c, index[&t]));
                    } else if t == p {
                        transitions.insert((index[&p], c, index[&p]));
                    }
                } else {
                    transitions.insert((index[&s], c, index[&t]));
                }
            }
        }
    }
    for (graft, offset) in [(a1, off1), (a2, off2)] {
        for (s, c, t) in graft.transitions() {
            transitions.insert((offset + s, c, offset + t));
        }
        for sym in 0..a.alphabet().len() {
            let c = a.alphabet()[sym];
            for &t in graft.successors(graft.initial(), sym) {
                transitions.insert((index[&p], c, offset + t));
            }
        }
    }
    let mut finals: BTreeSet<usize> = a
        .finals()
        .iter()
        .filter(|&&f| !in_sub[f] || f == p)
        .map(|f| index[f])
        .collect();
    finals.extend(a1.finals().iter().map(|&f| off1 + f));
    finals.extend(a2.finals().iter().map(|&f| off2 + f));

    let b = Nfa::new(
        off2 + a2.state_count(),
        a.alphabet().to_vec(),
        index[&a.initial()],
        finals,
        transitions,
    )
    .expect("replacement produces a well-formed automaton");
    let check = is_cover(&b, lang);
    if !check.equal {
        return Err(ReduceError::ReplacementBreaksCover { witness: check.witness });
    }
    Ok(b)
}
