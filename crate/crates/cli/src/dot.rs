//! GraphViz export. One node per state, parallel transitions between the
//! same pair of states merged into a single edge with a comma-joined label.

use std::collections::BTreeMap;

use nfca_core::Nfa;

pub fn to_dot(a: &Nfa) -> String {
    let mut out = String::from("digraph nfca {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  entry [shape=none, label=\"\"];\n");
    for s in 0..a.state_count() {
        let shape = if a.is_final(s) { "doublecircle" } else { "circle" };
        out.push_str(&format!("  q{s} [shape={shape}, label=\"{s}\"];\n"));
    }
    out.push_str(&format!("  entry -> q{};\n", a.initial()));
    let mut labels: BTreeMap<(usize, usize), Vec<char>> = BTreeMap::new();
    for (src, sym, dst) in a.transitions() {
        labels.entry((src, dst)).or_default().push(sym);
    }
    for ((src, dst), symbols) in labels {
        let label: String = symbols
            .iter()
            .map(char::to_string)
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!("  q{src} -> q{dst} [label=\"{label}\"];\n"));
    }
    out.push_str("}\n");
    out
}
