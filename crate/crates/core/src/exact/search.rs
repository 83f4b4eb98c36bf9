//! Exhaustive search for state-minimal NFAs.
//!
//! Sizes are tried in increasing order. For each size the search walks the
//! word tree in shortlex order and invents transition rows and acceptance
//! flags only at the moment the walk first consults them; a walk that
//! classifies every word correctly and touches every state is a witness.
//! Equality targets restrict rows to a forward DAG — a state-minimal
//! acceptor of a finite language is trim, hence acyclic, hence fits some
//! topological relabelling with the initial state first. Cover targets
//! allow arbitrary rows but number states in order of first appearance,
//! which prunes relabelled duplicates of the same automaton.

use std::collections::HashSet;
use std::time::Instant;

use crate::automata::Nfa;
use crate::lang::FiniteLanguage;

use super::{SearchBudget, SearchMode, SearchOutcome};

/// Finds a smallest NFA matching `lang` under the budget's mode, trying
/// sizes `1..=max_states` and giving up on the deadline if one is set.
pub fn minimal_nfa_exact(lang: &FiniteLanguage, budget: &SearchBudget) -> SearchOutcome {
    let deadline = budget.deadline().map(|d| Instant::now() + d);
    let prefixes = prefix_set(lang);
    let mut lower = 1;
    for n in 1..=budget.max_states() {
        let mut searcher = Searcher::new(lang, n, budget.mode(), &prefixes, deadline);
        let mut queue = vec![QueueItem { word: String::new(), depth: 0, mask: 1 }];
        match searcher.walk(&mut queue, 0) {
            Walk::Found => {
                return SearchOutcome::Found { size: n, witness: searcher.materialize() };
            }
            Walk::Dead => lower = n + 1,
            Walk::Abort => return SearchOutcome::Unknown { lower, timed_out: true },
        }
    }
    SearchOutcome::Unknown { lower, timed_out: false }
}

fn prefix_set(lang: &FiniteLanguage) -> HashSet<String> {
    let mut out = HashSet::new();
    for word in lang.words() {
        let mut prefix = String::new();
        out.insert(prefix.clone());
        for c in word.chars() {
            prefix.push(c);
            out.insert(prefix.clone());
        }
    }
    out
}

struct QueueItem {
    word: String,
    depth: usize,
    mask: u64,
}

enum Walk {
    Found,
    Dead,
    Abort,
}

struct Searcher<'a> {
    lang: &'a FiniteLanguage,
    n: usize,
    mode: SearchMode,
    horizon: usize,
    prefixes: &'a HashSet<String>,
    deadline: Option<Instant>,
    rows: Vec<Vec<Option<u64>>>,
    finality: Vec<Option<bool>>,
    introduced: usize,
    used: u64,
    nodes: u64,
}

impl<'a> Searcher<'a> {
    fn new(
        lang: &'a FiniteLanguage,
        n: usize,
        mode: SearchMode,
        prefixes: &'a HashSet<String>,
        deadline: Option<Instant>,
    ) -> Searcher<'a> {
        assert!(n <= 60, "search sizes beyond 60 states are not representable");
        let horizon = match mode {
            SearchMode::Equal => lang.ell().max(n.saturating_sub(1)),
            SearchMode::Cover => lang.ell(),
        };
        Searcher {
            lang,
            n,
            mode,
            horizon,
            prefixes,
            deadline,
            rows: vec![vec![None; lang.alphabet().len()]; n],
            finality: vec![None; n],
            introduced: 1,
            used: 1,
            nodes: 0,
        }
    }

    fn walk(&mut self, queue: &mut Vec<QueueItem>, at: usize) -> Walk {
        if at == queue.len() {
            return if self.used == (1u64 << self.n) - 1 { Walk::Found } else { Walk::Dead };
        }
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Walk::Abort;
                }
            }
        }
        self.nodes += 1;

        let mask = queue[at].mask;
        if let Some(state) = bits(mask).find(|&s| self.finality[s].is_none()) {
            for value in [false, true] {
                self.finality[state] = Some(value);
                match self.walk(queue, at) {
                    Walk::Dead => {}
                    other => return other,
                }
            }
            self.finality[state] = None;
            return Walk::Dead;
        }

        let accepts = bits(mask).any(|s| self.finality[s] == Some(true));
        if accepts != self.lang.contains(&queue[at].word) {
            return Walk::Dead;
        }
        if queue[at].depth == self.horizon {
            return self.walk(queue, at + 1);
        }

        for symbol in 0..self.lang.alphabet().len() {
            if let Some(state) = bits(mask).find(|&s| self.rows[s][symbol].is_none()) {
                return self.branch_row(queue, at, state, symbol);
            }
        }

        let base = queue.len();
        let saved_used = self.used;
        for (symbol, &c) in self.lang.alphabet().iter().enumerate() {
            let successors = bits(mask)
                .map(|s| self.rows[s][symbol].expect("settled above"))
                .fold(0u64, |acc, row| acc | row);
            let mut word = queue[at].word.clone();
            word.push(c);
            if successors == 0 {
                if self.prefixes.contains(&word) {
                    queue.truncate(base);
                    self.used = saved_used;
                    return Walk::Dead;
                }
                continue;
            }
            self.used |= successors;
            queue.push(QueueItem { word, depth: queue[at].depth + 1, mask: successors });
        }
        let result = self.walk(queue, at + 1);
        queue.truncate(base);
        if !matches!(result, Walk::Found) {
            self.used = saved_used;
        }
        result
    }

    fn branch_row(
        &mut self,
        queue: &mut Vec<QueueItem>,
        at: usize,
        state: usize,
        symbol: usize,
    ) -> Walk {
        for (mask, fresh) in self.row_options(state) {
            self.rows[state][symbol] = Some(mask);
            self.introduced += fresh;
            match self.walk(queue, at) {
                Walk::Dead => {
                    self.introduced -= fresh;
                    self.rows[state][symbol] = None;
                }
                other => return other,
            }
        }
        Walk::Dead
    }

    /// Candidate row values together with how many fresh states each one
    /// introduces, in the order the search is committed to.
    fn row_options(&self, state: usize) -> Vec<(u64, usize)> {
        let mut options = Vec::new();
        match self.mode {
            SearchMode::Cover => return first_touch_rows(self.introduced, self.n),
            SearchMode::Equal => {
                let positions: Vec<usize> = (state + 1..self.n).collect();
                for choice in 0..(1u64 << positions.len()) {
                    let mut mask = 0u64;
                    for (bit, &pos) in positions.iter().enumerate() {
                        if choice & (1 << bit) != 0 {
                            mask |= 1 << pos;
                        }
                    }
                    options.push((mask, 0));
                }
            }
        }
        options
    }

    fn materialize(&self) -> Nfa {
        let mut transitions = Vec::new();
        for (state, row) in self.rows.iter().enumerate() {
            for (symbol, entry) in row.iter().enumerate() {
                if let Some(mask) = entry {
                    for target in bits(*mask) {
                        transitions.push((state, self.lang.alphabet()[symbol], target));
                    }
                }
            }
        }
        let finals = (0..self.n).filter(|&s| self.finality[s] == Some(true));
        Nfa::new(self.n, self.lang.alphabet().to_vec(), 0, finals, transitions)
            .expect("the walk only builds well-formed automata")
    }
}

/// Every row a state may take when `introduced` states exist so far: any
/// mix of known states plus a consecutive block of fresh ones, ordered by
/// block size and then by the known part, so the empty row comes first.
pub(super) fn first_touch_rows(introduced: usize, n: usize) -> Vec<(u64, usize)> {
    let mut options = Vec::new();
    for fresh in 0..=(n - introduced) {
        let block = ((1u64 << fresh) - 1) << introduced;
        for old in 0..(1u64 << introduced) {
            options.push((old | block, fresh));
        }
    }
    options
}

pub(super) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(
        (mask != 0).then(|| mask.trailing_zeros() as usize),
        move |&s| {
            let rest = mask & !((2u64 << s) - 1);
            (rest != 0).then(|| rest.trailing_zeros() as usize)
        },
    )
}
