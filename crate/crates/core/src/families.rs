//! Parametric example languages and automata, plus two bundled fixtures.
//!
//! Two language families recur throughout the test suite and the CLI:
//!
//! * `gen_lf(m, n)`: all words `u a v` over `{a, b}` with `|u| ≤ m` and
//!   `|v| = n − 2` — "some `a` sits exactly `n − 1` letters from the end".
//! * `gen_llk(l, k)`: the unary words `a^{1+m}` for `0 ≤ m ≤ l` whose
//!   exponent is not of the form `1 + (multiple of k)`.
//!
//! The automaton constructors rebuild specific machines for these families
//! and two standalone counterexample fixtures. Constructions are *gated*:
//! each constructor checks the machine against its generator language (or
//! its documented behaviour) and fails rather than returning a machine that
//! does not do what its name promises.

use thiserror::Error;

use crate::automata::Nfa;
use crate::cover::{is_cover, state_similar};
use crate::lang::FiniteLanguage;
use crate::words::words_up_to;

/// Errors from family generators and fixture constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter {name} = {value} out of range: need {requirement}")]
    ParameterOutOfRange {
        name: &'static str,
        value: usize,
        requirement: &'static str,
    },
    #[error("fixture failed its construction self-check: {0}")]
    FixtureIntegrity(String),
}

/// Parameters selecting one language family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyParams {
    /// `{a,b}^{≤m} a {a,b}^{n−2}` with bound `m + n − 1`.
    Lf { m: usize, n: usize },
    /// `{a^{1+m} : 0 ≤ m ≤ l, m mod k ≠ 0}` with bound `l + 1`.
    Llk { l: usize, k: usize },
}

impl FamilyParams {
    pub fn generate(self) -> Result<FiniteLanguage, FamilyError> {
        match self {
            FamilyParams::Lf { m, n } => gen_lf(m, n),
            FamilyParams::Llk { l, k } => gen_llk(l, k),
        }
    }
}

fn check_lf_params(m: usize, n: usize) -> Result<(), FamilyError> {
    let _ = m;
    if n < 2 {
        return Err(FamilyError::ParameterOutOfRange {
            name: "n",
            value: n,
            requirement: "n ≥ 2",
        });
    }
    Ok(())
}

fn check_llk_params(l: usize, k: usize) -> Result<(), FamilyError> {
    if k < 2 {
        return Err(FamilyError::ParameterOutOfRange {
            name: "k",
            value: k,
            requirement: "k ≥ 2",
        });
    }
    if l <= k {
        return Err(FamilyError::ParameterOutOfRange {
            name: "l",
            value: l,
            requirement: "l > k",
        });
    }
    Ok(())
}

/// The language `{a,b}^{≤m} a {a,b}^{n−2}`, bound `m + n − 1`.
pub fn gen_lf(m: usize, n: usize) -> Result<FiniteLanguage, FamilyError> {
    check_lf_params(m, n)?;
    let alphabet = vec!['a', 'b'];
    let tails: Vec<String> = words_up_to(&alphabet, n - 2)
        .into_iter()
        .filter(|w| w.len() == n - 2)
        .collect();
    let mut words = Vec::new();
    for u in words_up_to(&alphabet, m) {
        for v in &tails {
            words.push(format!("{u}a{v}"));
        }
    }
    Ok(FiniteLanguage::new(alphabet, words, m + n - 1)
        .expect("generated words fit the bound"))
}

fn llk_words(l: usize, k: usize) -> Vec<String> {
    (0..=l)
        .filter(|m| m % k != 0)
        .map(|m| "a".repeat(1 + m))
        .collect()
}

/// The unary language `{a^{1+m} : 0 ≤ m ≤ l, m mod k ≠ 0}` with bound
/// `l + 1`, the length of its longest word.
pub fn gen_llk(l: usize, k: usize) -> Result<FiniteLanguage, FamilyError> {
    check_llk_params(l, k)?;
    Ok(FiniteLanguage::new(vec!['a'], llk_words(l, k), l + 1)
        .expect("generated words fit the bound"))
}

/// Like [`gen_llk`] but with bound `l`, dropping the one word of length
/// `l + 1`. The two readings disagree only about whether the bound names
/// the longest word or the largest exponent offset; both are useful when
/// pinning down minimal cover automata for these languages.
pub fn gen_llk_truncated(l: usize, k: usize) -> Result<FiniteLanguage, FamilyError> {
    check_llk_params(l, k)?;
    let words = llk_words(l, k).into_iter().filter(|w| w.len() <= l);
    Ok(FiniteLanguage::new(vec!['a'], words, l).expect("generated words fit the bound"))
}

fn integrity(check: bool, what: &str) -> Result<(), FamilyError> {
    if check {
        Ok(())
    } else {
        Err(FamilyError::FixtureIntegrity(what.to_string()))
    }
}

fn gate_cover(a: &Nfa, lang: &FiniteLanguage, name: &str) -> Result<(), FamilyError> {
    let verdict = is_cover(a, lang);
    integrity(
        verdict.equal,
        &format!(
            "{name} does not cover its generator language, witness {:?}",
            verdict.witness
        ),
    )
}

/// An NFA whose exact language is `gen_lf(m, n)`, with `m + n` states: a
/// chain of `m + 1` prefix states, each of which may take an `a` into a
/// tail of `n − 1` states that consumes the final `n − 1` letters.
pub fn nfa_fig1(m: usize, n: usize) -> Result<Nfa, FamilyError> {
    check_lf_params(m, n)?;
    let tail = |j: usize| m + j;
    let mut transitions = Vec::new();
    for i in 0..m {
        transitions.push((i, 'a', i + 1));
        transitions.push((i, 'b', i + 1));
    }
    for i in 0..=m {
        transitions.push((i, 'a', tail(1)));
    }
    for j in 1..n - 1 {
        transitions.push((tail(j), 'a', tail(j + 1)));
        transitions.push((tail(j), 'b', tail(j + 1)));
    }
    let a = Nfa::new(m + n, vec!['a', 'b'], 0, [tail(n - 1)], transitions)
        .expect("construction is well-formed");
    gate_cover(&a, &gen_lf(m, n)?, "nfa_fig1")?;
    Ok(a)
}

/// An `n`-state cover automaton for `gen_lf(m, n)`, for every `m`: the
/// prefix chain of [`nfa_fig1`] collapses to a single self-looping state.
pub fn nfca_fig2(n: usize) -> Result<Nfa, FamilyError> {
    check_lf_params(0, n)?;
    let mut transitions = vec![(0, 'a', 0), (0, 'b', 0), (0, 'a', 1)];
    for i in 1..n - 1 {
        transitions.push((i, 'a', i + 1));
        transitions.push((i, 'b', i + 1));
    }
    let a = Nfa::new(n, vec!['a', 'b'], 0, [n - 1], transitions)
        .expect("construction is well-formed");
    for m in 0..=1 {
        gate_cover(&a, &gen_lf(m, n)?, "nfca_fig2")?;
    }
    Ok(a)
}

/// A `(k+1)`-state unary cover automaton for `gen_llk(l, k)`, for every
/// `l > k`: a cycle of length `k` entered after the first letter, accepting
/// everywhere except at the cycle's entry point.
pub fn ak_automaton(k: usize) -> Result<Nfa, FamilyError> {
    if k < 2 {
        return Err(FamilyError::ParameterOutOfRange {
            name: "k",
            value: k,
            requirement: "k ≥ 2",
        });
    }
    let mut transitions = vec![(0, 'a', 1), (k, 'a', 1)];
    for i in 1..k {
        transitions.push((i, 'a', i + 1));
    }
    let a = Nfa::new(k + 1, vec!['a'], 0, 2..=k, transitions)
        .expect("construction is well-formed");
    gate_cover(&a, &gen_llk(k + 1, k)?, "ak_automaton")?;
    Ok(a)
}

/// An 8-state binary fixture with three disjoint `a`-cycles hanging off the
/// initial state. States 2 and 7 are reached by `ba` and `aa` respectively
/// and are similar within the bound 14, yet the words `aa` and `ba` are not
/// similar in the covered language — reachability words of similar states
/// need not be similar words.
pub fn fixture_fig6() -> Result<(Nfa, usize), FamilyError> {
    let ell = 14;
    let a = Nfa::new(
        8,
        vec!['a', 'b'],
        0,
        [2, 4, 5, 7],
        [
            (0, 'b', 1),
            (0, 'b', 3),
            (0, 'a', 6),
            (1, 'a', 2),
            (2, 'a', 1),
            (3, 'a', 4),
            (4, 'a', 5),
            (5, 'a', 3),
            (6, 'a', 7),
            (7, 'a', 6),
        ],
    )
    .expect("construction is well-formed");
    let reach = |word: &str| {
        let mut set = std::collections::BTreeSet::from([0]);
        for c in word.chars() {
            set = a.step(&set, a.symbol_index(c).unwrap());
        }
        set
    };
    integrity(reach("ba").contains(&2), "fixture_fig6: 2 must be reached by ba")?;
    integrity(reach("aa").contains(&7), "fixture_fig6: 7 must be reached by aa")?;
    integrity(
        a.accepts("baa").unwrap() && !a.accepts("aaa").unwrap(),
        "fixture_fig6: must accept baa and reject aaa",
    )?;
    integrity(
        state_similar(&a, ell, 2, 7).unwrap(),
        "fixture_fig6: states 2 and 7 must be similar",
    )?;
    integrity(
        !a.enumerate_accepted(ell).word_similar("aa", "ba"),
        "fixture_fig6: words aa and ba must be dissimilar",
    )?;
    Ok((a, ell))
}

/// A 7-state unary fixture covering `{a², a⁴}` with bound 4. Its two
/// branches contain the similar state pair (3, 5) whose weak merge breaks
/// the cover while the strong merge preserves it.
pub fn fixture_fig7() -> Result<(Nfa, usize), FamilyError> {
    let ell = 4;
    let a = Nfa::new(
        7,
        vec!['a'],
        0,
        [4, 6],
        [
            (0, 'a', 1),
            (0, 'a', 5),
            (1, 'a', 2),
            (2, 'a', 3),
            (3, 'a', 3),
            (3, 'a', 4),
            (5, 'a', 6),
        ],
    )
    .expect("construction is well-formed");
    let lang = FiniteLanguage::new(vec!['a'], ["aa".to_string(), "aaaa".to_string()], ell)
        .expect("two short words");
    gate_cover(&a, &lang, "fixture_fig7")?;
    integrity(
        state_similar(&a, ell, 3, 5).unwrap(),
        "fixture_fig7: states 3 and 5 must be similar",
    )?;
    Ok((a, ell))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lf_family_matches_its_pattern() {
        let l = gen_lf(2, 4).unwrap();
        assert_eq!(l.ell(), 5);
        assert_eq!(l.len(), 28);
        assert!(l.contains("aaa"));
        assert!(!l.contains("bb"));
        for w in l.words() {
            let marker = w.len() - 3;
            assert_eq!(w.as_bytes()[marker], b'a', "{w}");
        }
    }

    #[test]
    fn lf_smallest_instance() {
        let l = gen_lf(0, 2).unwrap();
        assert_eq!(l.words(), &["a".to_string()]);
        assert_eq!(l.ell(), 1);
        assert_eq!(
            gen_lf(1, 1),
            Err(FamilyError::ParameterOutOfRange { name: "n", value: 1, requirement: "n ≥ 2" })
        );
    }

    #[test]
    fn llk_family_keeps_exponents_off_the_multiples() {
        let l = gen_llk(9, 7).unwrap();
        assert_eq!(l.ell(), 10);
        let lengths: Vec<usize> = l.words().iter().map(|w| w.len()).collect();
        assert_eq!(lengths, vec![2, 3, 4, 5, 6, 7, 9, 10]);
        assert!(l.contains("aaaaaaa"));
        assert!(!l.contains("aaaaaaaa"));
        assert!(!l.contains("a"));
    }

    #[test]
    fn llk_truncation_drops_the_longest_word() {
        let l = gen_llk_truncated(9, 7).unwrap();
        assert_eq!(l.ell(), 9);
        let lengths: Vec<usize> = l.words().iter().map(|w| w.len()).collect();
        assert_eq!(lengths, vec![2, 3, 4, 5, 6, 7, 9]);
    }

    #[test]
    fn llk_parameter_checks() {
        assert!(matches!(
            gen_llk(5, 1),
            Err(FamilyError::ParameterOutOfRange { name: "k", .. })
        ));
        assert!(matches!(
            gen_llk(5, 5),
            Err(FamilyError::ParameterOutOfRange { name: "l", .. })
        ));
        assert!(gen_llk(6, 5).is_ok());
    }

    #[test]
    fn family_params_dispatch() {
        assert_eq!(
            FamilyParams::Lf { m: 2, n: 4 }.generate(),
            gen_lf(2, 4)
        );
        assert_eq!(
            FamilyParams::Llk { l: 9, k: 7 }.generate(),
            gen_llk(9, 7)
        );
    }

    #[test]
    fn fig1_state_count_and_language() {
        let a = nfa_fig1(2, 4).unwrap();
        assert_eq!(a.state_count(), 6);
        assert!(a.accepts("aaa").unwrap());
        assert!(a.accepts("bbaba").unwrap());
        assert!(!a.accepts("bba").unwrap());
        assert!(!a.accepts("bbbabb").unwrap(), "u longer than m must be rejected");
    }

    #[test]
    fn fig2_covers_every_prefix_budget() {
        for n in [2, 3, 4] {
            let a = nfca_fig2(n).unwrap();
            assert_eq!(a.state_count(), n);
            for m in 0..=4 {
                let verdict = is_cover(&a, &gen_lf(m, n).unwrap());
                assert!(verdict.equal, "n = {n}, m = {m}: {:?}", verdict.witness);
            }
        }
    }

    #[test]
    fn ak_covers_the_unary_family_for_larger_bounds() {
        for k in [2, 3, 5] {
            let a = ak_automaton(k).unwrap();
            assert_eq!(a.state_count(), k + 1);
            for l in [k + 1, k + 2, 2 * k + 1] {
                let verdict = is_cover(&a, &gen_llk(l, k).unwrap());
                assert!(verdict.equal, "k = {k}, l = {l}: {:?}", verdict.witness);
            }
        }
    }

    #[test]
    fn fixtures_pass_their_gates() {
        let (a6, ell6) = fixture_fig6().unwrap();
        assert_eq!((a6.state_count(), ell6), (8, 14));
        let (a7, ell7) = fixture_fig7().unwrap();
        assert_eq!((a7.state_count(), ell7), (7, 4));
    }
}
