//! Exact state complexities of a finite language.
//!
//! Four measures, two computed directly and two by exhaustive search:
//!
//! * `sc`: states of the minimal complete DFA (from [`FiniteLanguage::dfa_of`]);
//! * `csc`: states of the minimal complete DFA covering the language
//!   ([`minimize_dfca`]);
//! * `nsc`: states of a minimal NFA for the language exactly
//!   ([`minimal_nfa_exact`] in [`SearchMode::Equal`]);
//! * `ncsc`: states of a minimal NFA covering the language
//!   ([`SearchMode::Cover`]).
//!
//! The searches are exponential; [`SearchBudget`] caps the state count and
//! wall-clock time, and [`complexity_report`] degrades to intervals when a
//! search cannot finish.
//!
//! [`FiniteLanguage::dfa_of`]: crate::lang::FiniteLanguage::dfa_of

use std::collections::BTreeMap;
use std::time::Duration;

use crate::automata::Nfa;

mod dfca;
mod report;
mod search;
mod unary;

pub use dfca::minimize_dfca;
pub use report::complexity_report;
pub use search::minimal_nfa_exact;
pub use unary::minimal_unary_nfa_for_lengthset;

/// Whether a search compares languages exactly or only up to the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// The automaton's language must equal the finite language.
    Equal,
    /// The automaton's language restricted to the bound must equal it.
    Cover,
}

/// Limits for the exhaustive searches.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    max_states: usize,
    deadline: Option<Duration>,
    mode: SearchMode,
}

impl SearchBudget {
    /// A budget trying sizes `1..=max_states` with no time limit.
    pub fn new(max_states: usize, mode: SearchMode) -> SearchBudget {
        assert!(max_states >= 1, "a search needs at least one state");
        SearchBudget { max_states, deadline: None, mode }
    }

    /// Caps the total wall-clock time of the search.
    pub fn with_deadline(mut self, deadline: Duration) -> SearchBudget {
        self.deadline = Some(deadline);
        self
    }

    pub fn max_states(&self) -> usize {
        self.max_states
    }

    pub fn deadline(&self) -> Option<Duration> {
        self.deadline
    }

    pub fn mode(&self) -> SearchMode {
        self.mode
    }
}

/// Result of an exhaustive minimality search.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    /// `size` is minimal: all smaller sizes were exhaustively refuted and
    /// `witness` realizes this one.
    Found { size: usize, witness: Nfa },
    /// No automaton within the budget. Sizes below `lower` are refuted;
    /// `timed_out` distinguishes a lapsed deadline from an exhausted
    /// `max_states`.
    Unknown { lower: usize, timed_out: bool },
}

/// An exactly known value or a closed interval around it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexityValue {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
}

impl ComplexityValue {
    pub fn lower(&self) -> usize {
        match *self {
            ComplexityValue::Exact(v) => v,
            ComplexityValue::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> usize {
        match *self {
            ComplexityValue::Exact(v) => v,
            ComplexityValue::Bounds { upper, .. } => upper,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ComplexityValue::Exact(_))
    }

    fn normalized(self) -> ComplexityValue {
        match self {
            ComplexityValue::Bounds { lower, upper } if lower >= upper => {
                ComplexityValue::Exact(upper)
            }
            other => other,
        }
    }

    fn raise_lower(self, floor: usize) -> ComplexityValue {
        match self {
            ComplexityValue::Exact(v) => ComplexityValue::Exact(v),
            ComplexityValue::Bounds { lower, upper } => {
                ComplexityValue::Bounds { lower: lower.max(floor), upper }.normalized()
            }
        }
    }
}

impl std::fmt::Display for ComplexityValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComplexityValue::Exact(v) => write!(f, "{v}"),
            ComplexityValue::Bounds { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// All four measures of one language, with witnessing automata for the
/// upper values keyed by measure name.
#[derive(Debug, Clone)]
pub struct ComplexityReport {
    pub sc: usize,
    pub csc: usize,
    pub nsc: ComplexityValue,
    pub ncsc: ComplexityValue,
    pub witnesses: BTreeMap<&'static str, Nfa>,
}
