//! Automaton types and the classical constructions on them.
//!
//! [`Nfa`] is the working representation everywhere: a finite set of states
//! `0..state_count`, one initial state, a set of final states and a set of
//! transition triples over a declared alphabet. No epsilon moves. [`Dfa`] is
//! a complete deterministic automaton produced by [`Nfa::determinize`] or by
//! the minimal-DFA construction in [`crate::lang`].

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::lang::FiniteLanguage;
use crate::words::symbol_index;

/// Errors produced while building or querying automata.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("alphabet declares symbol '{0}' twice")]
    DuplicateSymbol(char),
    #[error("state {state} out of range, automaton has {state_count} states")]
    StateOutOfRange { state: usize, state_count: usize },
    #[error("symbol '{0}' is not in the alphabet")]
    UnknownSymbol(char),
    #[error("duplicate transition {from} -{symbol}-> {to}")]
    DuplicateTransition { from: usize, symbol: char, to: usize },
    #[error("state {0} is not reachable from the initial state")]
    UnreachableState(usize),
}

/// Nondeterministic finite automaton without epsilon transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Vec<char>,
    initial: usize,
    finals: BTreeSet<usize>,
    /// `delta[state][symbol]` is the set of successor states.
    delta: Vec<Vec<BTreeSet<usize>>>,
}

/// Complete deterministic finite automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<char>,
    initial: usize,
    finals: BTreeSet<usize>,
    /// `next[state][symbol]`, total over all states and symbols.
    next: Vec<Vec<usize>>,
}

/// Breadth-first level of every state: the length of a shortest word
/// reaching it, or `None` for unreachable states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTable {
    levels: Vec<Option<usize>>,
}

impl LevelTable {
    /// Level of `state`, `None` if unreachable.
    pub fn get(&self, state: usize) -> Option<usize> {
        self.levels.get(state).copied().flatten()
    }

    /// One entry per state.
    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.levels
    }

    /// Largest level among reachable states.
    pub fn max_level(&self) -> Option<usize> {
        self.levels.iter().filter_map(|l| *l).max()
    }
}

fn validate_alphabet(alphabet: &[char]) -> Result<(), AutomatonError> {
    for (i, &c) in alphabet.iter().enumerate() {
        if alphabet[..i].contains(&c) {
            return Err(AutomatonError::DuplicateSymbol(c));
        }
    }
    Ok(())
}

impl Nfa {
    /// Builds an NFA, validating all invariants.
    pub fn new(
        state_count: usize,
        alphabet: Vec<char>,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, char, usize)>,
    ) -> Result<Self, AutomatonError> {
        if state_count == 0 {
            return Err(AutomatonError::NoStates);
        }
        validate_alphabet(&alphabet)?;
        let check = |state: usize| {
            if state >= state_count {
                Err(AutomatonError::StateOutOfRange { state, state_count })
            } else {
                Ok(())
            }
        };
        check(initial)?;
        let mut final_set = BTreeSet::new();
        for f in finals {
            check(f)?;
            final_set.insert(f);
        }
        let mut delta = vec![vec![BTreeSet::new(); alphabet.len()]; state_count];
        for (from, symbol, to) in transitions {
            check(from)?;
            check(to)?;
            let s = symbol_index(&alphabet, symbol)
                .ok_or(AutomatonError::UnknownSymbol(symbol))?;
            if !delta[from][s].insert(to) {
                return Err(AutomatonError::DuplicateTransition { from, symbol, to });
            }
        }
        Ok(Nfa { alphabet, initial, finals: final_set, delta })
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals.contains(&state)
    }

    /// Successors of `state` on the symbol with alphabet rank `symbol`.
    pub fn successors(&self, state: usize, symbol: usize) -> &BTreeSet<usize> {
        &self.delta[state][symbol]
    }

    /// Rank of `symbol` in this automaton's alphabet.
    pub fn symbol_index(&self, symbol: char) -> Option<usize> {
        symbol_index(&self.alphabet, symbol)
    }

    /// All transition triples in `(from, symbol rank, to)` order.
    pub fn transitions(&self) -> Vec<(usize, char, usize)> {
        let mut out = Vec::new();
        for (from, row) in self.delta.iter().enumerate() {
            for (s, targets) in row.iter().enumerate() {
                for &to in targets {
                    out.push((from, self.alphabet[s], to));
                }
            }
        }
        out
    }

    /// The same automaton rerooted at `initial`.
    pub fn with_initial(&self, initial: usize) -> Result<Self, AutomatonError> {
        if initial >= self.state_count() {
            return Err(AutomatonError::StateOutOfRange {
                state: initial,
                state_count: self.state_count(),
            });
        }
        let mut out = self.clone();
        out.initial = initial;
        Ok(out)
    }

    /// Image of a state set under one symbol.
    pub fn step(&self, set: &BTreeSet<usize>, symbol: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &s in set {
            out.extend(self.delta[s][symbol].iter().copied());
        }
        out
    }

    /// Does the automaton accept `word`? Errors on symbols outside the
    /// alphabet.
    pub fn accepts(&self, word: &str) -> Result<bool, AutomatonError> {
        let mut current = BTreeSet::from([self.initial]);
        for c in word.chars() {
            let s = self
                .symbol_index(c)
                .ok_or(AutomatonError::UnknownSymbol(c))?;
            current = self.step(&current, s);
        }
        Ok(current.iter().any(|s| self.finals.contains(s)))
    }

    /// Breadth-first levels of all states.
    pub fn levels(&self) -> LevelTable {
        let mut levels = vec![None; self.state_count()];
        let mut queue = VecDeque::from([self.initial]);
        levels[self.initial] = Some(0);
        while let Some(s) = queue.pop_front() {
            let next_level = levels[s].unwrap() + 1;
            for row in &self.delta[s] {
                for &t in row {
                    if levels[t].is_none() {
                        levels[t] = Some(next_level);
                        queue.push_back(t);
                    }
                }
            }
        }
        LevelTable { levels }
    }

    /// Shortest distance from each state to some final state, `None` when no
    /// final state is reachable.
    pub fn distances_to_final(&self) -> Vec<Option<usize>> {
        let n = self.state_count();
        let mut reverse = vec![Vec::new(); n];
        for (from, row) in self.delta.iter().enumerate() {
            for targets in row {
                for &to in targets {
                    reverse[to].push(from);
                }
            }
        }
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for &f in &self.finals {
            dist[f] = Some(0);
            queue.push_back(f);
        }
        while let Some(s) = queue.pop_front() {
            let d = dist[s].unwrap() + 1;
            for &p in &reverse[s] {
                if dist[p].is_none() {
                    dist[p] = Some(d);
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// The shortlex-least word reaching `state`; its length equals the
    /// state's level. Errors on unreachable states.
    pub fn shortest_witness(&self, state: usize) -> Result<String, AutomatonError> {
        if state >= self.state_count() {
            return Err(AutomatonError::StateOutOfRange {
                state,
                state_count: self.state_count(),
            });
        }
        let levels = self.levels();
        let target = levels
            .get(state)
            .ok_or(AutomatonError::UnreachableState(state))?;
        // best[s] = least word of the current exact length reaching s,
        // as a vector of symbol ranks.
        let mut best: Vec<Option<Vec<usize>>> = vec![None; self.state_count()];
        best[self.initial] = Some(Vec::new());
        for _ in 0..target {
            let mut next: Vec<Option<Vec<usize>>> = vec![None; self.state_count()];
            for (s, word) in best.iter().enumerate() {
                let Some(word) = word else { continue };
                for (sym, targets) in self.delta[s].iter().enumerate() {
                    for &t in targets {
                        let mut cand = word.clone();
                        cand.push(sym);
                        match &next[t] {
                            Some(cur) if *cur <= cand => {}
                            _ => next[t] = Some(cand),
                        }
                    }
                }
            }
            best = next;
        }
        let word = best[state]
            .take()
            .expect("level table guarantees a word of exactly the level's length");
        Ok(word.into_iter().map(|s| self.alphabet[s]).collect())
    }

    /// Removes states that cannot take part in accepting a word of length at
    /// most `ell`: states with level above `ell` and states from which no
    /// final state is reachable within the remaining budget. The initial
    /// state is always kept. Surviving states keep their relative order.
    pub fn trimmed(&self, ell: usize) -> Nfa {
        let levels = self.levels();
        let dist = self.distances_to_final();
        let keep: Vec<bool> = (0..self.state_count())
            .map(|s| {
                if s == self.initial {
                    return true;
                }
                match (levels.get(s), dist[s]) {
                    (Some(l), Some(d)) => l + d <= ell,
                    _ => false,
                }
            })
            .collect();
        let mut map = vec![usize::MAX; self.state_count()];
        let mut count = 0;
        for (s, &k) in keep.iter().enumerate() {
            if k {
                map[s] = count;
                count += 1;
            }
        }
        let initial_useful = levels.get(self.initial).is_some()
            && dist[self.initial].map_or(false, |d| d <= ell);
        let mut delta = vec![vec![BTreeSet::new(); self.alphabet.len()]; count];
        if initial_useful {
            for (from, row) in self.delta.iter().enumerate() {
                if !keep[from] {
                    continue;
                }
                for (sym, targets) in row.iter().enumerate() {
                    for &to in targets {
                        if keep[to] {
                            delta[map[from]][sym].insert(map[to]);
                        }
                    }
                }
            }
        }
        let finals = if initial_useful {
            self.finals.iter().filter(|&&f| keep[f]).map(|&f| map[f]).collect()
        } else {
            BTreeSet::new()
        };
        Nfa {
            alphabet: self.alphabet.clone(),
            initial: map[self.initial],
            finals,
            delta,
        }
    }

    /// Subset construction. The result is complete; the empty subset is
    /// always materialized as a sink, last in discovery order when never
    /// reached.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets: Vec<BTreeSet<usize>> = Vec::new();
        let mut next: Vec<Vec<usize>> = Vec::new();
        let start: BTreeSet<usize> = BTreeSet::from([self.initial]);
        index.insert(start.iter().copied().collect(), 0);
        subsets.push(start);
        let mut head = 0;
        while head < subsets.len() {
            let current = subsets[head].clone();
            let mut row = Vec::with_capacity(k);
            for sym in 0..k {
                let image = self.step(&current, sym);
                let key: Vec<usize> = image.iter().copied().collect();
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(key, id);
                        subsets.push(image);
                        id
                    }
                };
                row.push(id);
            }
            next.push(row);
            head += 1;
        }
        if !index.contains_key(&Vec::new()) {
            let id = subsets.len();
            subsets.push(BTreeSet::new());
            next.push(vec![id; k]);
        }
        let finals = subsets
            .iter()
            .enumerate()
            .filter(|(_, set)| set.iter().any(|s| self.finals.contains(s)))
            .map(|(i, _)| i)
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            next,
        }
    }

    /// All accepted words of length at most `ell`, as a language with bound
    /// `ell`. Implemented as a walk of the depth-bounded subset graph with
    /// dead branches pruned, so the cost is governed by the number of
    /// reachable subsets plus the size of the output.
    pub fn enumerate_accepted(&self, ell: usize) -> FiniteLanguage {
        let k = self.alphabet.len();
        // Depth-bounded subset graph.
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets: Vec<BTreeSet<usize>> = Vec::new();
        let mut depth: Vec<usize> = Vec::new();
        let mut succ: Vec<Option<Vec<usize>>> = Vec::new();
        let start: BTreeSet<usize> = BTreeSet::from([self.initial]);
        index.insert(start.iter().copied().collect(), 0);
        subsets.push(start);
        depth.push(0);
        succ.push(None);
        let mut head = 0;
        while head < subsets.len() {
            if depth[head] < ell {
                let current = subsets[head].clone();
                let mut row = Vec::with_capacity(k);
                for sym in 0..k {
                    let image = self.step(&current, sym);
                    let key: Vec<usize> = image.iter().copied().collect();
                    let id = match index.get(&key) {
                        Some(&id) => id,
                        None => {
                            let id = subsets.len();
                            index.insert(key, id);
                            subsets.push(image);
                            depth.push(depth[head] + 1);
                            succ.push(None);
                            id
                        }
                    };
                    row.push(id);
                }
                succ[head] = Some(row);
            }
            head += 1;
        }
        let accepting: Vec<bool> = subsets
            .iter()
            .map(|set| set.iter().any(|s| self.finals.contains(s)))
            .collect();
        // Distance from each subset to an accepting subset.
        let mut reverse = vec![Vec::new(); subsets.len()];
        for (u, row) in succ.iter().enumerate() {
            if let Some(row) = row {
                for &v in row {
                    reverse[v].push(u);
                }
            }
        }
        let mut dist = vec![None; subsets.len()];
        let mut queue = VecDeque::new();
        for (u, &acc) in accepting.iter().enumerate() {
            if acc {
                dist[u] = Some(0usize);
                queue.push_back(u);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &p in &reverse[u] {
                if dist[p].is_none() {
                    dist[p] = Some(d);
                    queue.push_back(p);
                }
            }
        }
        // Emit every accepted word; every explored branch lies on an
        // accepting path within the budget.
        let mut words = Vec::new();
        if dist[0].map_or(false, |d| d <= ell) {
            let mut word = String::new();
            self.emit(0, 0, ell, &succ, &accepting, &dist, &mut word, &mut words);
        }
        FiniteLanguage::new(self.alphabet.clone(), words, ell)
            .expect("enumerated words are valid by construction")
    }

    #[allow(clippy::too_many_arguments)]
    fn emit(
        &self,
        node: usize,
        len: usize,
        ell: usize,
        succ: &[Option<Vec<usize>>],
        accepting: &[bool],
        dist: &[Option<usize>],
        word: &mut String,
        out: &mut Vec<String>,
    ) {
        if accepting[node] {
            out.push(word.clone());
        }
        if len == ell {
            return;
        }
        let row = succ[node].as_ref().expect("inner nodes are expanded");
        for (sym, &v) in row.iter().enumerate() {
            if dist[v].map_or(false, |d| d + len + 1 <= ell) {
                word.push(self.alphabet[sym]);
                self.emit(v, len + 1, ell, succ, accepting, dist, word, out);
                word.pop();
            }
        }
    }
}

impl Dfa {
    /// Builds a DFA, validating completeness and ranges.
    pub fn new(
        alphabet: Vec<char>,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        next: Vec<Vec<usize>>,
    ) -> Result<Self, AutomatonError> {
        let state_count = next.len();
        if state_count == 0 {
            return Err(AutomatonError::NoStates);
        }
        validate_alphabet(&alphabet)?;
        let check = |state: usize| {
            if state >= state_count {
                Err(AutomatonError::StateOutOfRange { state, state_count })
            } else {
                Ok(())
            }
        };
        check(initial)?;
        let mut final_set = BTreeSet::new();
        for f in finals {
            check(f)?;
            final_set.insert(f);
        }
        for row in &next {
            assert_eq!(row.len(), alphabet.len(), "transition table must be total");
            for &t in row {
                check(t)?;
            }
        }
        Ok(Dfa { alphabet, initial, finals: final_set, next })
    }

    pub fn state_count(&self) -> usize {
        self.next.len()
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals.contains(&state)
    }

    /// Successor of `state` on the symbol with rank `symbol`.
    pub fn next_state(&self, state: usize, symbol: usize) -> usize {
        self.next[state][symbol]
    }

    pub fn accepts(&self, word: &str) -> Result<bool, AutomatonError> {
        let mut state = self.initial;
        for c in word.chars() {
            let s = symbol_index(&self.alphabet, c)
                .ok_or(AutomatonError::UnknownSymbol(c))?;
            state = self.next[state][s];
        }
        Ok(self.finals.contains(&state))
    }

    /// View of the DFA as an NFA over the same states.
    pub fn to_nfa(&self) -> Nfa {
        let delta = self
            .next
            .iter()
            .map(|row| row.iter().map(|&t| BTreeSet::from([t])).collect())
            .collect();
        Nfa {
            alphabet: self.alphabet.clone(),
            initial: self.initial,
            finals: self.finals.clone(),
            delta,
        }
    }

    /// The minimal complete DFA for the same language, in canonical form:
    /// states are numbered in breadth-first discovery order from the initial
    /// state, trying symbols in alphabet order. Idempotent.
    pub fn minimized(&self) -> Dfa {
        let k = self.alphabet.len();
        // Restrict to reachable states.
        let mut reach = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        reach[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for sym in 0..k {
                let t = self.next[s][sym];
                if !reach[t] {
                    reach[t] = true;
                    order.push(t);
                }
            }
        }
        // Moore refinement on the reachable part.
        let mut class = vec![usize::MAX; self.state_count()];
        for &s in &order {
            class[s] = usize::from(self.finals.contains(&s));
        }
        let mut class_count = 2;
        loop {
            let mut sig_ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
            let mut next_class = vec![usize::MAX; self.state_count()];
            for &s in &order {
                let sig = (
                    class[s],
                    (0..k).map(|sym| class[self.next[s][sym]]).collect::<Vec<_>>(),
                );
                let fresh = sig_ids.len();
                let id = *sig_ids.entry(sig).or_insert(fresh);
                next_class[s] = id;
            }
            let count = sig_ids.len();
            class = next_class;
            if count == class_count {
                break;
            }
            class_count = count;
        }
        // Canonical relabeling by BFS over classes.
        let mut rep: Vec<Option<usize>> = vec![None; class_count];
        for &s in &order {
            if rep[class[s]].is_none() {
                rep[class[s]] = Some(s);
            }
        }
        let mut relabel = vec![usize::MAX; class_count];
        let mut bfs = vec![class[self.initial]];
        relabel[class[self.initial]] = 0;
        let mut head = 0;
        let mut assigned = 1;
        while head < bfs.len() {
            let c = bfs[head];
            head += 1;
            let r = rep[c].unwrap();
            for sym in 0..k {
                let tc = class[self.next[r][sym]];
                if relabel[tc] == usize::MAX {
                    relabel[tc] = assigned;
                    assigned += 1;
                    bfs.push(tc);
                }
            }
        }
        let mut next = vec![vec![0; k]; assigned];
        let mut finals = BTreeSet::new();
        for c in bfs {
            let r = rep[c].unwrap();
            let id = relabel[c];
            for sym in 0..k {
                next[id][sym] = relabel[class[self.next[r][sym]]];
            }
            if self.finals.contains(&r) {
                finals.insert(id);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            next,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn fig2(n: usize) -> Nfa {
        families::nfca_fig2(n).unwrap()
    }

    fn fig7() -> (Nfa, usize) {
        families::fixture_fig7().unwrap()
    }

    #[test]
    fn membership_follows_every_branch() {
        let a = fig2(4);
        assert!(a.accepts("aaa").unwrap());
        assert!(!a.accepts("bb").unwrap());
        assert!(a.accepts("baaab").unwrap());
        let (f7, _) = fig7();
        assert!(!f7.accepts("aaa").unwrap());
        assert!(f7.accepts("aa").unwrap());
    }

    #[test]
    fn membership_rejects_foreign_symbols() {
        let a = fig2(3);
        assert_eq!(a.accepts("abc"), Err(AutomatonError::UnknownSymbol('c')));
    }

    #[test]
    fn enumeration_matches_naive_membership() {
        let (a, ell) = fig7();
        let lang = a.enumerate_accepted(ell);
        assert_eq!(lang.words(), ["aa", "aaaa"]);
        for w in crate::words::words_up_to(a.alphabet(), ell) {
            assert_eq!(lang.contains(&w), a.accepts(&w).unwrap(), "word {w:?}");
        }
    }

    #[test]
    fn enumeration_at_bound_zero_checks_the_empty_word() {
        let a = Nfa::new(1, vec!['a'], 0, [0], []).unwrap();
        assert_eq!(a.enumerate_accepted(0).words(), [""]);
        let b = Nfa::new(1, vec!['a'], 0, [], []).unwrap();
        assert!(b.enumerate_accepted(0).is_empty());
    }

    #[test]
    fn determinization_is_complete_and_equivalent() {
        let a = fig2(4);
        let d = a.determinize();
        for w in crate::words::words_up_to(a.alphabet(), 6) {
            assert_eq!(d.accepts(&w).unwrap(), a.accepts(&w).unwrap(), "word {w:?}");
        }
        // Every row is total.
        for s in 0..d.state_count() {
            for sym in 0..d.alphabet().len() {
                assert!(d.next_state(s, sym) < d.state_count());
            }
        }
    }

    #[test]
    fn determinization_of_final_free_automaton_accepts_nothing() {
        let a = Nfa::new(2, vec!['a'], 0, [], [(0, 'a', 1), (1, 'a', 0)]).unwrap();
        let d = a.determinize();
        assert!(d.finals().is_empty());
        assert!(!d.accepts("aaa").unwrap());
    }

    #[test]
    fn minimization_reaches_the_known_size_for_the_two_branch_family() {
        let a = families::nfa_fig1(2, 4).unwrap();
        let m = a.determinize().minimized();
        assert_eq!(m.state_count(), 15);
        assert_eq!(m.minimized(), m);
    }

    #[test]
    fn minimization_of_empty_language_is_a_single_sink() {
        let a = Nfa::new(3, vec!['a'], 0, [], [(0, 'a', 1), (1, 'a', 2)]).unwrap();
        let m = a.determinize().minimized();
        assert_eq!(m.state_count(), 1);
        assert!(m.finals().is_empty());
    }

    #[test]
    fn levels_are_shortest_path_depths() {
        let (a, _) = fig7();
        let levels = a.levels();
        assert_eq!(levels.get(0), Some(0));
        assert_eq!(levels.get(3), Some(3));
        assert_eq!(levels.get(5), Some(1));
        assert_eq!(levels.max_level(), Some(4));
    }

    #[test]
    fn unreachable_states_have_no_level_and_no_witness() {
        let a = Nfa::new(3, vec!['a'], 0, [2], [(0, 'a', 0)]).unwrap();
        assert_eq!(a.levels().get(1), None);
        assert_eq!(a.shortest_witness(1), Err(AutomatonError::UnreachableState(1)));
    }

    #[test]
    fn shortest_witnesses_are_shortlex_least() {
        let (a, _) = families::fixture_fig6().unwrap();
        assert_eq!(a.shortest_witness(0).unwrap(), "");
        assert_eq!(a.shortest_witness(6).unwrap(), "a");
        assert_eq!(a.shortest_witness(1).unwrap(), a.shortest_witness(3).unwrap());
        // Symbol 'a' precedes 'b', so state 4 (reached via "ba") loses to
        // nothing shorter.
        assert_eq!(a.shortest_witness(4).unwrap(), "ba");
    }

    #[test]
    fn trimming_drops_over_level_and_useless_states() {
        // Chain with a dead tail: state 3 is past the bound, state 4 dead.
        let a = Nfa::new(
            5,
            vec!['a'],
            0,
            [2],
            [(0, 'a', 1), (1, 'a', 2), (2, 'a', 3), (0, 'a', 4)],
        )
        .unwrap();
        let t = a.trimmed(2);
        assert_eq!(t.state_count(), 3);
        assert_eq!(t.enumerate_accepted(2), a.enumerate_accepted(2));
        assert_eq!(t.trimmed(2), t);
    }

    #[test]
    fn trimming_keeps_a_bare_initial_state_when_nothing_is_accepted() {
        let a = Nfa::new(2, vec!['a'], 0, [1], [(0, 'a', 1)]).unwrap();
        let t = a.trimmed(0);
        assert_eq!(t.state_count(), 1);
        assert!(t.finals().is_empty());
        assert!(t.transitions().is_empty());
    }

    #[test]
    fn trimming_preserves_the_bounded_language_of_fixtures() {
        let a = families::nfa_fig1(2, 4).unwrap();
        let t = a.trimmed(5);
        assert_eq!(t.state_count(), a.state_count());
        assert_eq!(t.enumerate_accepted(5), a.enumerate_accepted(5));
    }
}
