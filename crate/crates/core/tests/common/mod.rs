//! Seeded generators shared by the integration suites. Everything is
//! deterministic: the same seed always yields the same corpus.

use nfca_core::words::words_up_to;
use nfca_core::{FiniteLanguage, Nfa};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const SYMBOLS: [char; 2] = ['a', 'b'];

pub fn random_nfa(rng: &mut ChaCha8Rng, max_states: usize, max_symbols: usize) -> Nfa {
    let n = rng.gen_range(1..=max_states);
    let alphabet: Vec<char> = SYMBOLS[..rng.gen_range(1..=max_symbols)].to_vec();
    let initial = rng.gen_range(0..n);
    let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    let density = rng.gen_range(0.05..0.45);
    let mut transitions = Vec::new();
    for s in 0..n {
        for &c in &alphabet {
            for t in 0..n {
                if rng.gen_bool(density) {
                    transitions.push((s, c, t));
                }
            }
        }
    }
    Nfa::new(n, alphabet, initial, finals, transitions).expect("generated parts are in range")
}

/// A random automaton trimmed to a random bound, so that every state is
/// both reachable and productive within the bound.
pub fn random_trimmed_nfca(
    rng: &mut ChaCha8Rng,
    max_states: usize,
    max_symbols: usize,
    max_ell: usize,
) -> (Nfa, usize) {
    let ell = rng.gen_range(0..=max_ell);
    let a = random_nfa(rng, max_states, max_symbols);
    (a.trimmed(ell), ell)
}

pub fn random_language(rng: &mut ChaCha8Rng, max_symbols: usize, max_ell: usize) -> FiniteLanguage {
    let ell = rng.gen_range(0..=max_ell);
    let alphabet: Vec<char> = SYMBOLS[..rng.gen_range(1..=max_symbols)].to_vec();
    let density = rng.gen_range(0.05..0.6);
    let words: Vec<String> = words_up_to(&alphabet, ell)
        .into_iter()
        .filter(|_| rng.gen_bool(density))
        .collect();
    FiniteLanguage::new(alphabet, words, ell).expect("generated words fit the bound")
}
