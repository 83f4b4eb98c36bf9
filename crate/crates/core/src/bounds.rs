//! Fooling-set lower bounds on nondeterministic state complexity.
//!
//! A fooling set is a list of word pairs `(x_i, y_i)` with every `x_i y_i`
//! in the language whose cross concatenations `x_i y_j` misbehave enough to
//! force distinct states. Four variants:
//!
//! * `NfaPlain`: every cross concatenation lies outside the language;
//!   bound on the minimal NFA.
//! * `NfaExtended`: for each pair of indices at least one of the two cross
//!   directions lies outside; still a bound on the minimal NFA.
//! * `CoverPlain` / `CoverExtended`: as above, but a cross concatenation
//!   longer than the language bound is exempt (cover automata may accept
//!   it freely); bounds on the minimal cover automaton. In the extended
//!   variant the misbehaving direction must itself be within the bound.
//!
//! All four compatibility conditions are pairwise, so a maximum fooling set
//! drawn from a candidate pool is a maximum clique in the compatibility
//! graph; [`max_fooling_set`] finds one exactly.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::clique;
use crate::lang::FiniteLanguage;
use crate::words::shortlex_cmp;

/// Largest candidate pool [`max_fooling_set`] will search exactly.
pub const POOL_LIMIT: usize = 2000;

/// Errors from fooling-set construction and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("a fooling set needs at least one pair")]
    EmptySet,
    #[error("duplicate pair ({x:?}, {y:?}) in fooling set")]
    DuplicatePair { x: String, y: String },
    #[error("candidate pool is empty: no pair concatenates into the language")]
    EmptyPool,
    #[error("candidate pool has {size} pairs, above the exact-search limit {limit}")]
    PoolTooLarge { size: usize, limit: usize },
}

/// Which fooling-set condition applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoolingMode {
    NfaPlain,
    NfaExtended,
    CoverPlain,
    CoverExtended,
}

impl FoolingMode {
    /// Does this mode bound the cover measure (`ncsc`) rather than `nsc`?
    pub fn is_cover(self) -> bool {
        matches!(self, FoolingMode::CoverPlain | FoolingMode::CoverExtended)
    }
}

impl std::fmt::Display for FoolingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            FoolingMode::NfaPlain => "nfa-plain",
            FoolingMode::NfaExtended => "nfa-extended",
            FoolingMode::CoverPlain => "cover-plain",
            FoolingMode::CoverExtended => "cover-extended",
        };
        write!(f, "{name}")
    }
}

/// A candidate fooling set: word pairs plus the mode they claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoolingSet {
    pairs: Vec<(String, String)>,
    mode: FoolingMode,
}

impl FoolingSet {
    pub fn new(
        pairs: Vec<(String, String)>,
        mode: FoolingMode,
    ) -> Result<FoolingSet, BoundsError> {
        if pairs.is_empty() {
            return Err(BoundsError::EmptySet);
        }
        let mut seen = BTreeSet::new();
        for (x, y) in &pairs {
            if !seen.insert((x, y)) {
                return Err(BoundsError::DuplicatePair { x: x.clone(), y: y.clone() });
            }
        }
        Ok(FoolingSet { pairs, mode })
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn mode(&self) -> FoolingMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// One failed condition, naming the offending index pair (`i == j` means
/// the diagonal membership requirement failed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub clause: &'static str,
}

/// Outcome of checking a fooling set against a language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundVerdict {
    pub valid: bool,
    /// Number of pairs when valid, zero otherwise. A valid verdict lower
    /// bounds `nsc` (NFA modes) or `ncsc` (cover modes).
    pub bound: usize,
    pub violation: Option<Violation>,
}

impl BoundVerdict {
    fn valid(bound: usize) -> BoundVerdict {
        BoundVerdict { valid: true, bound, violation: None }
    }

    fn invalid(i: usize, j: usize, clause: &'static str) -> BoundVerdict {
        BoundVerdict { valid: false, bound: 0, violation: Some(Violation { i, j, clause }) }
    }
}

fn member(lang: &FiniteLanguage, x: &str, y: &str) -> bool {
    let mut w = String::with_capacity(x.len() + y.len());
    w.push_str(x);
    w.push_str(y);
    lang.contains(&w)
}

fn within(lang: &FiniteLanguage, x: &str, y: &str) -> bool {
    x.chars().count() + y.chars().count() <= lang.ell()
}

fn cross_ok(lang: &FiniteLanguage, mode: FoolingMode, a: &(String, String), b: &(String, String)) -> bool {
    let x1y2 = (a.0.as_str(), b.1.as_str());
    let x2y1 = (b.0.as_str(), a.1.as_str());
    match mode {
        FoolingMode::NfaPlain => {
            !member(lang, x1y2.0, x1y2.1) && !member(lang, x2y1.0, x2y1.1)
        }
        FoolingMode::NfaExtended => {
            !member(lang, x1y2.0, x1y2.1) || !member(lang, x2y1.0, x2y1.1)
        }
        FoolingMode::CoverPlain => {
            (!within(lang, x1y2.0, x1y2.1) || !member(lang, x1y2.0, x1y2.1))
                && (!within(lang, x2y1.0, x2y1.1) || !member(lang, x2y1.0, x2y1.1))
        }
        FoolingMode::CoverExtended => {
            (within(lang, x1y2.0, x1y2.1) && !member(lang, x1y2.0, x1y2.1))
                || (within(lang, x2y1.0, x2y1.1) && !member(lang, x2y1.0, x2y1.1))
        }
    }
}

fn clause_for(mode: FoolingMode) -> &'static str {
    match mode {
        FoolingMode::NfaPlain => "a cross concatenation lies in the language",
        FoolingMode::NfaExtended => "both cross directions lie in the language",
        FoolingMode::CoverPlain => "a cross concatenation within the bound lies in the language",
        FoolingMode::CoverExtended => {
            "no cross direction is both within the bound and outside the language"
        }
    }
}

/// Checks every condition of the set's mode against `lang`; a valid verdict
/// carries `bound = |pairs|`.
pub fn verify_fooling_set(lang: &FiniteLanguage, set: &FoolingSet) -> BoundVerdict {
    let pairs = set.pairs();
    for (i, (x, y)) in pairs.iter().enumerate() {
        if !member(lang, x, y) {
            return BoundVerdict::invalid(i, i, "the pair's own concatenation is not in the language");
        }
    }
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if !cross_ok(lang, set.mode(), &pairs[i], &pairs[j]) {
                return BoundVerdict::invalid(i, j, clause_for(set.mode()));
            }
        }
    }
    BoundVerdict::valid(pairs.len())
}

/// All prefix/suffix splittings of the language's words — the only pairs
/// whose own concatenation can be in the language.
fn default_pool(lang: &FiniteLanguage) -> Vec<(String, String)> {
    let mut pool = Vec::new();
    for w in lang.words() {
        let bytes = w.as_bytes();
        for cut in 0..=bytes.len() {
            pool.push((w[..cut].to_string(), w[cut..].to_string()));
        }
    }
    pool
}

/// Finds a maximum-size fooling set of the given mode drawn from `pool`
/// (all splittings of member words when `None`) by exact maximum-clique
/// search over the pairwise-compatibility graph. Pools above [`POOL_LIMIT`]
/// are refused rather than approximated.
pub fn max_fooling_set(
    lang: &FiniteLanguage,
    mode: FoolingMode,
    pool: Option<&[(String, String)]>,
) -> Result<FoolingSet, BoundsError> {
    let candidates: Vec<(String, String)> = match pool {
        Some(given) => given.to_vec(),
        None => default_pool(lang),
    };
    let mut vertices: Vec<(String, String)> = candidates
        .into_iter()
        .filter(|(x, y)| member(lang, x, y))
        .collect();
    vertices.sort();
    vertices.dedup();
    if vertices.is_empty() {
        return Err(BoundsError::EmptyPool);
    }
    if vertices.len() > POOL_LIMIT {
        return Err(BoundsError::PoolTooLarge { size: vertices.len(), limit: POOL_LIMIT });
    }
    let n = vertices.len();
    let words = (n + 63) / 64;
    let mut adj = vec![vec![0u64; words]; n];
    for i in 0..n {
        for j in i + 1..n {
            if cross_ok(lang, mode, &vertices[i], &vertices[j]) {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let best = clique::max_clique(n, &adj);
    let mut pairs: Vec<(String, String)> =
        best.into_iter().map(|v| vertices[v].clone()).collect();
    pairs.sort_by(|a, b| {
        shortlex_cmp(lang.alphabet(), &a.0, &b.0)
            .then_with(|| shortlex_cmp(lang.alphabet(), &a.1, &b.1))
    });
    FoolingSet::new(pairs, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_lf, gen_llk};

    fn worked_nfa_set() -> Vec<(String, String)> {
        let mut pairs = Vec::new();
        for j in 0..=2usize {
            pairs.push((format!("bba{}", "b".repeat(j)), "b".repeat(2 - j)));
        }
        for i in 0..=2usize {
            pairs.push(("a".repeat(i), format!("{}abb", "b".repeat(2 - i))));
        }
        pairs
    }

    #[test]
    fn the_worked_six_pair_set_is_extended_valid_but_not_plain() {
        let lang = gen_lf(2, 4).unwrap();
        let extended = FoolingSet::new(worked_nfa_set(), FoolingMode::NfaExtended).unwrap();
        assert_eq!(verify_fooling_set(&lang, &extended), BoundVerdict::valid(6));

        let plain = FoolingSet::new(worked_nfa_set(), FoolingMode::NfaPlain).unwrap();
        let verdict = verify_fooling_set(&lang, &plain);
        assert!(!verdict.valid);
        assert_eq!(verdict.bound, 0);
        // First clash in scan order: "a" · "bb" = "abb" is in the language.
        let v = verdict.violation.unwrap();
        assert_eq!((v.i, v.j), (0, 4));
    }

    #[test]
    fn the_cover_variant_keeps_four_of_the_six_pairs() {
        let lang = gen_lf(2, 4).unwrap();
        let mut pairs: Vec<(String, String)> = worked_nfa_set()[..3].to_vec();
        pairs.push((String::new(), "bbabb".to_string()));
        let set = FoolingSet::new(pairs, FoolingMode::CoverExtended).unwrap();
        assert_eq!(verify_fooling_set(&lang, &set), BoundVerdict::valid(4));
    }

    #[test]
    fn diagonal_membership_is_checked_first() {
        let lang = FiniteLanguage::new(vec!['a'], ["a".to_string()], 2).unwrap();
        let set = FoolingSet::new(
            vec![("a".to_string(), "a".to_string())],
            FoolingMode::NfaPlain,
        )
        .unwrap();
        let verdict = verify_fooling_set(&lang, &set);
        assert!(!verdict.valid);
        assert_eq!(verdict.violation.map(|v| (v.i, v.j)), Some((0, 0)));
    }

    #[test]
    fn plain_validity_implies_extended_validity() {
        let lang = gen_lf(2, 4).unwrap();
        let pairs = vec![
            ("bba".to_string(), "bb".to_string()),
            ("bbab".to_string(), "b".to_string()),
        ];
        for (plain, extended) in [
            (FoolingMode::NfaPlain, FoolingMode::NfaExtended),
            (FoolingMode::CoverPlain, FoolingMode::CoverExtended),
        ] {
            let p = FoolingSet::new(pairs.clone(), plain).unwrap();
            if verify_fooling_set(&lang, &p).valid {
                let e = FoolingSet::new(pairs.clone(), extended).unwrap();
                assert!(verify_fooling_set(&lang, &e).valid);
            } else {
                panic!("the two-pair set should be plain-valid");
            }
        }
    }

    #[test]
    fn search_finds_the_singleton_for_the_empty_word_language() {
        let lang = FiniteLanguage::new(vec!['a'], [String::new()], 0).unwrap();
        for mode in [
            FoolingMode::NfaPlain,
            FoolingMode::NfaExtended,
            FoolingMode::CoverPlain,
            FoolingMode::CoverExtended,
        ] {
            let set = max_fooling_set(&lang, mode, None).unwrap();
            assert_eq!(set.pairs(), [(String::new(), String::new())]);
        }
    }

    #[test]
    fn search_result_always_verifies() {
        let lang = gen_lf(2, 4).unwrap();
        for mode in [
            FoolingMode::NfaPlain,
            FoolingMode::NfaExtended,
            FoolingMode::CoverPlain,
            FoolingMode::CoverExtended,
        ] {
            let set = max_fooling_set(&lang, mode, None).unwrap();
            let verdict = verify_fooling_set(&lang, &set);
            assert!(verdict.valid, "{mode}: {:?}", verdict.violation);
        }
    }

    // Over the full splitting pool the cyclic family admits one extra pair
    // beyond the interior ceiling: boundary splittings whose short side is
    // `ε` or a single letter make the cross-concatenations land on the
    // short non-member lengths (0 and 1), which interior pairs cannot reach.
    #[test]
    fn the_cover_extended_ceiling_for_the_cyclic_family_is_four_at_the_boundary() {
        let lang = gen_llk(9, 5).unwrap();
        let set = max_fooling_set(&lang, FoolingMode::CoverExtended, None).unwrap();
        assert_eq!(set.len(), 4, "found {:?}", set.pairs());
        assert!(verify_fooling_set(&lang, &set).valid);
        assert!(set.pairs().iter().any(|(x, _)| x.chars().count() <= 1));
    }

    #[test]
    fn the_cover_extended_ceiling_is_three_away_from_the_boundary() {
        for (l, k) in [(9usize, 5usize), (11, 5)] {
            let lang = gen_llk(l, k).unwrap();
            let interior: Vec<(String, String)> = lang
                .words()
                .iter()
                .flat_map(|w| {
                    let n = w.chars().count();
                    (2..=n).map(move |cut| (w[..cut].to_string(), w[cut..].to_string()))
                })
                .collect();
            let set =
                max_fooling_set(&lang, FoolingMode::CoverExtended, Some(&interior)).unwrap();
            assert_eq!(set.len(), 3, "L_{{{l},{k}}} found {:?}", set.pairs());
            assert!(verify_fooling_set(&lang, &set).valid);
        }
    }

    #[test]
    fn pool_policies() {
        let lang = FiniteLanguage::new(vec!['a'], ["a".to_string()], 1).unwrap();
        let junk = vec![("aa".to_string(), "aa".to_string())];
        assert_eq!(
            max_fooling_set(&lang, FoolingMode::NfaPlain, Some(&junk)),
            Err(BoundsError::EmptyPool)
        );
        let empty = FiniteLanguage::new(vec!['a'], Vec::<String>::new(), 3).unwrap();
        assert_eq!(
            max_fooling_set(&empty, FoolingMode::NfaPlain, None),
            Err(BoundsError::EmptyPool)
        );
        let big = gen_lf(4, 5).unwrap();
        assert_eq!(
            max_fooling_set(&big, FoolingMode::NfaExtended, None),
            Err(BoundsError::PoolTooLarge { size: 2024, limit: POOL_LIMIT })
        );
    }

    #[test]
    fn sets_validate_their_own_shape() {
        assert_eq!(
            FoolingSet::new(Vec::new(), FoolingMode::NfaPlain),
            Err(BoundsError::EmptySet)
        );
        let dup = vec![
            ("a".to_string(), "b".to_string()),
            ("a".to_string(), "b".to_string()),
        ];
        assert_eq!(
            FoolingSet::new(dup, FoolingMode::NfaPlain),
            Err(BoundsError::DuplicatePair { x: "a".to_string(), y: "b".to_string() })
        );
    }
}
