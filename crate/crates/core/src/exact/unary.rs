//! Minimal NFAs over a one-letter alphabet.
//!
//! A unary NFA is fully described by the subset trajectory R₀ = {initial},
//! Rₜ₊₁ = ⋃ δ(Rₜ): the word aᵗ is accepted exactly when Rₜ meets the final
//! states. The search walks that single trajectory, inventing each state's
//! row and acceptance flag at first contact like the general searcher, but
//! without a branching word tree. Equality targets keep walking past the
//! bound until the trajectory dies out or repeats a subset already seen
//! beyond the bound; a repeat with no acceptance in between proves every
//! longer word is rejected too.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::automata::Nfa;

use super::search::{bits, first_touch_rows};
use super::{SearchBudget, SearchMode, SearchOutcome};

/// Finds a smallest unary NFA whose accepted word lengths, compared
/// exactly or up to `ell` per the budget's mode, equal `lengths`. The
/// witness is built over the alphabet `{a}`.
pub fn minimal_unary_nfa_for_lengthset(
    lengths: &BTreeSet<usize>,
    ell: usize,
    budget: &SearchBudget,
) -> SearchOutcome {
    assert!(
        lengths.iter().all(|&m| m <= ell),
        "every length must lie within the bound"
    );
    let deadline = budget.deadline().map(|d| Instant::now() + d);
    let mut lower = 1;
    for n in 1..=budget.max_states() {
        let mut searcher = TrajectorySearcher::new(lengths, ell, n, budget.mode(), deadline);
        match searcher.step(0, 1, &mut Vec::new()) {
            Walk::Found => {
                return SearchOutcome::Found { size: n, witness: searcher.materialize() };
            }
            Walk::Dead => lower = n + 1,
            Walk::Abort => return SearchOutcome::Unknown { lower, timed_out: true },
        }
    }
    SearchOutcome::Unknown { lower, timed_out: false }
}

enum Walk {
    Found,
    Dead,
    Abort,
}

struct TrajectorySearcher<'a> {
    lengths: &'a BTreeSet<usize>,
    ell: usize,
    n: usize,
    mode: SearchMode,
    deadline: Option<Instant>,
    rows: Vec<Option<u64>>,
    finality: Vec<Option<bool>>,
    introduced: usize,
    used: u64,
    nodes: u64,
}

impl<'a> TrajectorySearcher<'a> {
    fn new(
        lengths: &'a BTreeSet<usize>,
        ell: usize,
        n: usize,
        mode: SearchMode,
        deadline: Option<Instant>,
    ) -> TrajectorySearcher<'a> {
        assert!(n <= 60, "search sizes beyond 60 states are not representable");
        TrajectorySearcher {
            lengths,
            ell,
            n,
            mode,
            deadline,
            rows: vec![None; n],
            finality: vec![None; n],
            introduced: 1,
            used: 1,
            nodes: 0,
        }
    }

    /// Processes the trajectory from time `t` onwards, with `current` the
    /// subset reached by aᵗ and `seen_beyond` the subsets met at times
    /// past the bound on the way here.
    fn step(&mut self, t: usize, current: u64, seen_beyond: &mut Vec<u64>) -> Walk {
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Walk::Abort;
                }
            }
        }
        self.nodes += 1;

        if self.mode == SearchMode::Equal && t > self.ell && seen_beyond.contains(&current) {
            return self.close();
        }
        if let Some(state) = bits(current).find(|&s| self.finality[s].is_none()) {
            for value in [false, true] {
                self.finality[state] = Some(value);
                match self.step(t, current, seen_beyond) {
                    Walk::Dead => {}
                    other => return other,
                }
            }
            self.finality[state] = None;
            return Walk::Dead;
        }

        let accepts = bits(current).any(|s| self.finality[s] == Some(true));
        if accepts != self.lengths.contains(&t) {
            return Walk::Dead;
        }
        if current == 0 {
            return if self.lengths.iter().any(|&m| m > t) { Walk::Dead } else { self.close() };
        }
        if self.mode == SearchMode::Cover && t == self.ell {
            return self.close();
        }

        if let Some(state) = bits(current).find(|&s| self.rows[s].is_none()) {
            for (mask, fresh) in first_touch_rows(self.introduced, self.n) {
                self.rows[state] = Some(mask);
                self.introduced += fresh;
                match self.step(t, current, seen_beyond) {
                    Walk::Dead => {
                        self.introduced -= fresh;
                        self.rows[state] = None;
                    }
                    other => return other,
                }
            }
            return Walk::Dead;
        }

        let next = bits(current)
            .map(|s| self.rows[s].expect("settled above"))
            .fold(0u64, |acc, row| acc | row);
        let saved_used = self.used;
        self.used |= next;
        let tracked = self.mode == SearchMode::Equal && t > self.ell;
        if tracked {
            seen_beyond.push(current);
        }
        let result = self.step(t + 1, next, seen_beyond);
        if tracked {
            seen_beyond.pop();
        }
        if !matches!(result, Walk::Found) {
            self.used = saved_used;
        }
        result
    }

    fn close(&self) -> Walk {
        if self.used == (1u64 << self.n) - 1 { Walk::Found } else { Walk::Dead }
    }

    fn materialize(&self) -> Nfa {
        let mut transitions = Vec::new();
        for (state, entry) in self.rows.iter().enumerate() {
            if let Some(mask) = entry {
                for target in bits(*mask) {
                    transitions.push((state, 'a', target));
                }
            }
        }
        let finals = (0..self.n).filter(|&s| self.finality[s] == Some(true));
        Nfa::new(self.n, vec!['a'], 0, finals, transitions)
            .expect("the trajectory only builds well-formed automata")
    }
}
