//! From 3CNF formulas to unary cover-equivalence instances.
//!
//! Each variable gets its own prime; a word length encodes an assignment
//! through its residues (0 or 1) modulo those primes. The built automaton
//! accepts every length that is *not* the encoding of a satisfying
//! assignment: lengths with an out-of-range residue are caught by one
//! cycle per variable, and lengths encoding an assignment that falsifies
//! some clause are caught by one cycle per clause. The automaton therefore
//! covers all of `a^{≤ell}` with `ell` the product of the primes exactly
//! when the formula is unsatisfiable.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::automata::Nfa;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("variable {variable} is outside 1..={variable_count}")]
    VariableOutOfRange { variable: usize, variable_count: usize },
    #[error("the assignment gives variable {variable} two different values")]
    InconsistentAssignment { variable: usize },
    #[error("the assignment satisfies literal {position} instead of falsifying the clause")]
    AssignmentDoesNotFalsify { position: usize },
}

/// One literal: a 1-based variable index, possibly negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Literal {
    variable: usize,
    negated: bool,
}

impl Literal {
    pub fn new(variable: usize, negated: bool) -> Literal {
        assert!(variable >= 1, "variables are numbered from 1");
        Literal { variable, negated }
    }

    pub fn variable(&self) -> usize {
        self.variable
    }

    pub fn negated(&self) -> bool {
        self.negated
    }

    fn holds(&self, value: bool) -> bool {
        value != self.negated
    }
}

/// A conjunction of three-literal clauses; duplicate variables within a
/// clause are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(
        variable_count: usize,
        clauses: Vec<[Literal; 3]>,
    ) -> Result<CnfFormula, HardnessError> {
        for clause in &clauses {
            for literal in clause {
                if literal.variable > variable_count {
                    return Err(HardnessError::VariableOutOfRange {
                        variable: literal.variable,
                        variable_count,
                    });
                }
            }
        }
        Ok(CnfFormula { variable_count, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Evaluates the formula under `assignment`, indexed by variable − 1.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.variable_count);
        self.clauses.iter().all(|clause| {
            clause.iter().any(|literal| literal.holds(assignment[literal.variable - 1]))
        })
    }

    /// Brute-force truth-table satisfiability.
    pub fn is_satisfiable(&self) -> bool {
        assert!(self.variable_count < usize::BITS as usize);
        (0..1usize << self.variable_count).any(|bitmap| {
            let assignment: Vec<bool> =
                (0..self.variable_count).map(|v| bitmap & (1 << v) != 0).collect();
            self.evaluate(&assignment)
        })
    }
}

/// The automaton built from a formula, with the bound and the primes that
/// encode its variables.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub automaton: Nfa,
    pub ell: usize,
    pub primes: Vec<usize>,
}

/// The `count` smallest primes, by trial division.
pub fn first_primes(count: usize) -> Vec<usize> {
    let mut primes: Vec<usize> = Vec::with_capacity(count);
    let mut candidate = 2;
    while primes.len() < count {
        if primes.iter().take_while(|&&p| p * p <= candidate).all(|&p| candidate % p != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// A unary automaton accepting the words whose length has one of the given
/// residues modulo `p`: a single cycle of length `p`, preceded, when
/// `tail` is set, by a separate entry state so nothing loops back into the
/// start.
pub fn modulus_nfa(p: usize, residues: &BTreeSet<usize>, tail: bool) -> Nfa {
    assert!(p >= 2, "a cycle needs a modulus of at least 2");
    assert!(residues.iter().all(|&r| r < p), "residues must lie below the modulus");
    let (count, first) = if tail { (p + 1, 1) } else { (p, 0) };
    let mut transitions: Vec<(usize, char, usize)> = (0..p)
        .map(|i| {
            let from = first + i;
            let to = first + (i + 1) % p;
            (from, 'a', to)
        })
        .collect();
    if tail {
        transitions.push((0, 'a', 1));
    }
    let finals = (0..count).filter(|&s| {
        let residue = if tail {
            if s == 0 { 0 } else { s % p }
        } else {
            s
        };
        residues.contains(&residue)
    });
    Nfa::new(count, vec!['a'], 0, finals, transitions)
        .expect("cycles are well-formed")
}

/// The automaton of one clause under its falsifying assignment: a cycle
/// whose length is the least common multiple of the literals' primes, with
/// finals at every position matching all three residues at once.
pub fn clause_nfa(
    clause: &[Literal; 3],
    assignment: [bool; 3],
    primes: [usize; 3],
) -> Result<Nfa, HardnessError> {
    for (position, literal) in clause.iter().enumerate() {
        if literal.holds(assignment[position]) {
            return Err(HardnessError::AssignmentDoesNotFalsify { position });
        }
        for later in position + 1..3 {
            if clause[later].variable == literal.variable
                && (assignment[later] != assignment[position]
                    || primes[later] != primes[position])
            {
                return Err(HardnessError::InconsistentAssignment {
                    variable: literal.variable,
                });
            }
        }
    }
    let length = primes.iter().fold(1, |acc, &p| lcm(acc, p));
    let residues = (0..length)
        .filter(|t| (0..3).all(|j| t % primes[j] == assignment[j] as usize))
        .collect();
    Ok(modulus_nfa(length, &residues, false))
}

/// Builds the full instance: one cycle per clause catching its falsifying
/// encodings, one cycle per variable catching out-of-range residues, all
/// joined under a fresh initial state that copies every component's first
/// step.
pub fn reduction_nfa(formula: &CnfFormula) -> ReductionResult {
    let primes = first_primes(formula.variable_count);
    let ell = primes.iter().product::<usize>();

    let mut components = Vec::new();
    for clause in formula.clauses() {
        if let Some(assignment) = falsifying_assignment(clause) {
            let clause_primes =
                [0, 1, 2].map(|j| primes[clause[j].variable - 1]);
            components.push(
                clause_nfa(clause, assignment, clause_primes)
                    .expect("the derived assignment falsifies its clause"),
            );
        }
    }
    for &p in &primes {
        components.push(modulus_nfa(p, &(2..p).collect(), false));
    }

    let mut transitions = Vec::new();
    let mut finals = BTreeSet::new();
    let mut offset = 1;
    for component in &components {
        for successor in component.successors(0, 0) {
            transitions.push((0, 'a', offset + successor));
        }
        for (from, _, to) in component.transitions() {
            transitions.push((offset + from, 'a', offset + to));
        }
        for &f in component.finals() {
            finals.insert(offset + f);
            if f == 0 {
                finals.insert(0);
            }
        }
        offset += component.state_count();
    }
    let automaton = Nfa::new(offset, vec!['a'], 0, finals, transitions)
        .expect("the union of well-formed cycles is well-formed");
    ReductionResult { automaton, ell, primes }
}

/// The single assignment to the clause's variables making every literal
/// false, or nothing when two literals contradict (the clause is a
/// tautology and never falsified).
fn falsifying_assignment(clause: &[Literal; 3]) -> Option<[bool; 3]> {
    let values = [0, 1, 2].map(|j| clause[j].negated);
    for j in 0..3 {
        for later in j + 1..3 {
            if clause[later].variable == clause[j].variable && values[later] != values[j] {
                return None;
            }
        }
    }
    Some(values)
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}
