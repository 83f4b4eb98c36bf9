//! Word ordering helpers.
//!
//! Throughout the crate words are compared in *shortlex* order: first by
//! length, then lexicographically with symbols ranked by their position in
//! the declared alphabet (not by their Unicode value).

use std::cmp::Ordering;

/// Rank of a symbol in the alphabet, or `None` if it does not occur.
pub fn symbol_index(alphabet: &[char], symbol: char) -> Option<usize> {
    alphabet.iter().position(|&c| c == symbol)
}

/// Shortlex comparison of two words over the given alphabet.
///
/// Symbols missing from the alphabet sort after all declared symbols; callers
/// validate words before relying on the order.
pub fn shortlex_cmp(alphabet: &[char], a: &str, b: &str) -> Ordering {
    let la = a.chars().count();
    let lb = b.chars().count();
    if la != lb {
        return la.cmp(&lb);
    }
    for (ca, cb) in a.chars().zip(b.chars()) {
        let ra = symbol_index(alphabet, ca).unwrap_or(usize::MAX);
        let rb = symbol_index(alphabet, cb).unwrap_or(usize::MAX);
        match ra.cmp(&rb) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// All words of length at most `max_len` over the alphabet, in shortlex
/// order. For an empty alphabet this is just the empty word.
pub fn words_up_to(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &c in alphabet {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    out
}

/// Number of words of length at most `len` over an alphabet of `k` symbols.
pub fn count_words_up_to(k: usize, len: usize) -> usize {
    let mut total = 1usize;
    let mut layer = 1usize;
    for _ in 0..len {
        layer *= k;
        total += layer;
    }
    total
}
