//! Nondeterministic finite cover automata for finite languages.
//!
//! A finite language `L` whose longest word has length `l` can be represented
//! by any automaton `A` with `L(A) ∩ Σ^{≤l} = L`; such an `A` is a *cover
//! automaton* for `L`. Cover automata may be far smaller than automata for
//! `L` itself because they are free to accept garbage beyond the length
//! bound.
//!
//! This crate provides:
//!
//! * [`automata`]: NFA/DFA types plus the classical constructions
//!   (membership, bounded enumeration, determinization, minimization,
//!   levels, shortest witnesses, trimming);
//! * [`lang`]: explicit finite languages, word similarity and the minimal
//!   DFA construction;
//! * [`cover`]: cover verdicts and the similarity relation on states of a
//!   cover automaton;
//! * [`reduce`]: weak and strong state merging, the greedy similarity
//!   reduction pipeline and sub-automaton replacement;
//! * [`exact`]: exact state complexities (`sc`, `csc`, `nsc`, `ncsc`) via
//!   DFCA minimization and exhaustive bounded search;
//! * [`bounds`]: fooling-set lower bounds in plain/extended and
//!   equality/cover variants;
//! * [`families`]: parametric example languages and automata, plus two
//!   bundled fixtures;
//! * [`hardness`]: the reduction from 3CNF satisfiability to cover-language
//!   equivalence of unary NFAs.

pub mod automata;
pub mod bounds;
pub mod cover;
pub mod exact;
pub mod families;
pub mod hardness;
pub mod lang;
pub mod reduce;
pub mod words;

mod clique;

pub use automata::{AutomatonError, Dfa, LevelTable, Nfa};
pub use bounds::{BoundVerdict, BoundsError, FoolingMode, FoolingSet};
pub use cover::{CoverError, CoverVerdict};
pub use exact::{ComplexityReport, ComplexityValue, SearchBudget, SearchMode, SearchOutcome};
pub use families::{FamilyError, FamilyParams};
pub use hardness::{CnfFormula, HardnessError, Literal, ReductionResult};
pub use lang::{FiniteLanguage, LangError};
pub use reduce::{MergeKind, MergeReport, ReduceError};
