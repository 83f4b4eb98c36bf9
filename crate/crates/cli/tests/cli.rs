use std::path::Path;

use nfca_core::families;
use nfca_cli::commands::run_command;
use nfca_cli::format::{parse_automaton, serialize_automaton, serialize_language};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("nfca")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn a_thousand_random_automata_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let symbols = ['a', 'b', 'c'];
    for _ in 0..1000 {
        let n = rng.gen_range(1..=6);
        let alphabet: Vec<char> = symbols[..rng.gen_range(1..=3)].to_vec();
        let initial = rng.gen_range(0..n);
        let finals: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let mut transitions = Vec::new();
        for s in 0..n {
            for &c in &alphabet {
                for t in 0..n {
                    if rng.gen_bool(0.25) {
                        transitions.push((s, c, t));
                    }
                }
            }
        }
        let a = nfca_core::Nfa::new(n, alphabet, initial, finals, transitions).unwrap();
        let text = serialize_automaton(&a);
        assert_eq!(parse_automaton(&text).unwrap(), a, "round trip failed for:\n{text}");
    }
}

#[test]
fn accept_distinguishes_the_fixture_words() {
    let dir = tempfile::tempdir().unwrap();
    let (fig7, _) = families::fixture_fig7().unwrap();
    let aut = write(dir.path(), "fig7.aut", &serialize_automaton(&fig7));

    let (code, out, _) = run(&["accept", &aut, "aa"]);
    assert_eq!((code, out.trim()), (0, "ACCEPT"));
    let (code, out, _) = run(&["accept", &aut, "aaa"]);
    assert_eq!((code, out.trim()), (1, "REJECT"));
}

#[test]
fn bad_transitions_name_their_line() {
    let dir = tempfile::tempdir().unwrap();
    let aut = write(
        dir.path(),
        "bad.aut",
        "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntransitions:\n0 b 0\n",
    );
    let (code, _, err) = run(&["accept", &aut, "a"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 6"), "stderr was: {err}");
}

#[test]
fn unknown_subcommands_are_usage_errors() {
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn cover_check_passes_the_known_cover_and_fails_a_broken_one() {
    let dir = tempfile::tempdir().unwrap();
    let aut = write(
        dir.path(),
        "fig2.aut",
        &serialize_automaton(&families::nfca_fig2(4).unwrap()),
    );
    let lang = write(
        dir.path(),
        "lf24.lang",
        &serialize_language(&families::gen_lf(2, 4).unwrap()),
    );
    let (code, out, _) = run(&["cover-check", &aut, &lang]);
    assert_eq!((code, out.trim()), (0, "COVER OK"));

    let other = write(
        dir.path(),
        "llk.lang",
        &serialize_language(&families::gen_llk(3, 2).unwrap()),
    );
    let (code, out, _) = run(&["cover-check", &aut, &other]);
    assert_eq!(code, 1);
    assert!(out.starts_with("COVER FAIL witness="), "output was: {out}");
}

#[test]
fn levels_prints_one_line_per_state() {
    let dir = tempfile::tempdir().unwrap();
    let (fig7, _) = families::fixture_fig7().unwrap();
    let aut = write(dir.path(), "fig7.aut", &serialize_automaton(&fig7));
    let (code, out, _) = run(&["levels", &aut]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 0\n1 1\n2 2\n3 3\n4 4\n5 1\n6 2\n");
}

#[test]
fn similar_lists_the_fixture_pair_and_answers_queries() {
    let dir = tempfile::tempdir().unwrap();
    let (fig7, ell) = families::fixture_fig7().unwrap();
    let aut = write(dir.path(), "fig7.aut", &serialize_automaton(&fig7));
    let ell = ell.to_string();

    let (code, out, _) = run(&["similar", &aut, "--ell", &ell]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "3 5"), "output was: {out}");

    let (code, out, _) = run(&["similar", &aut, "--ell", &ell, "3", "5"]);
    assert_eq!((code, out.trim()), (0, "SIMILAR"));
    let (code, out, _) = run(&["similar", &aut, "--ell", &ell, "0", "4"]);
    assert_eq!((code, out.trim()), (1, "DISSIMILAR"));
    let (code, _, _) = run(&["similar", &aut, "--ell", &ell, "3"]);
    assert_eq!(code, 2);
}

#[test]
fn reduce_shrinks_the_fixture_to_four_states() {
    let dir = tempfile::tempdir().unwrap();
    let (fig7, ell) = families::fixture_fig7().unwrap();
    let aut = write(dir.path(), "fig7.aut", &serialize_automaton(&fig7));
    let lang = write(
        dir.path(),
        "spaced.lang",
        &format!("alphabet: a\nell: {ell}\naa\naaaa\n"),
    );
    let (code, out, _) = run(&["reduce", &aut, &lang]);
    assert_eq!(code, 0);
    let reduced = parse_automaton(&out).unwrap();
    assert_eq!(reduced.state_count(), 4);
    assert!(out.contains("# strong merge:"));
}

#[test]
fn dfca_min_matches_the_known_size() {
    let dir = tempfile::tempdir().unwrap();
    let lang = write(
        dir.path(),
        "lf24.lang",
        &serialize_language(&families::gen_lf(2, 4).unwrap()),
    );
    let (code, out, _) = run(&["dfca-min", &lang]);
    assert_eq!(code, 0);
    assert_eq!(parse_automaton(&out).unwrap().state_count(), 8);
}

#[test]
fn exact_min_finds_the_three_state_cover_acceptor() {
    let dir = tempfile::tempdir().unwrap();
    let lang = write(dir.path(), "spaced.lang", "alphabet: a\nell: 4\naa\naaaa\n");
    let (code, out, _) = run(&["exact-min", &lang, "--mode", "nfca"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# minimal states: 3\n"), "output was: {out}");
    let witness = parse_automaton(&out).unwrap();
    assert_eq!(witness.state_count(), 3);

    let (code, out, _) = run(&["exact-min", &lang, "--mode", "nfa", "--max-n", "3"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "UNKNOWN lower=4 timed_out=false");
}

#[test]
fn fooling_verify_accepts_the_extended_set_and_rejects_it_in_plain_mode() {
    let dir = tempfile::tempdir().unwrap();
    let lang = write(
        dir.path(),
        "lf24.lang",
        &serialize_language(&families::gen_lf(2, 4).unwrap()),
    );
    let pairs = write(
        dir.path(),
        "six.pairs",
        "bba , bb\nbbab , b\nbbabb , _\n_ , bbabb\na , babb\naa , abb\n",
    );
    let (code, out, _) = run(&["fooling", "verify", &lang, &pairs, "--mode", "nfa-extended"]);
    assert_eq!((code, out.trim()), (0, "VALID bound=6"));

    let (code, out, _) = run(&["fooling", "verify", &lang, &pairs, "--mode", "nfa-plain"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("INVALID"), "output was: {out}");
}

#[test]
fn fooling_search_recovers_the_full_extended_bound() {
    let dir = tempfile::tempdir().unwrap();
    let lang = write(
        dir.path(),
        "lf24.lang",
        &serialize_language(&families::gen_lf(2, 4).unwrap()),
    );
    let (code, out, _) = run(&["fooling", "search", &lang, "--mode", "nfa-extended"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# size: 6\n"), "output was: {out}");
}

#[test]
fn report_emits_the_exact_quartet_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let lang = write(dir.path(), "spaced.lang", "alphabet: a\nell: 4\naa\naaaa\n");
    let (code, out, _) = run(&["report", &lang]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value, json!({ "sc": 6, "csc": 3, "nsc": 5, "ncsc": 3 }));
}

#[test]
fn gen_writes_language_files_that_parse_back() {
    let (code, out, _) = run(&["gen", "llk", "9", "5"]);
    assert_eq!(code, 0);
    let lang = nfca_cli::format::parse_language(&out).unwrap();
    assert_eq!(lang, families::gen_llk(9, 5).unwrap());

    let (code, out, _) = run(&["gen", "lf", "2", "4"]);
    assert_eq!(code, 0);
    let lang = nfca_cli::format::parse_language(&out).unwrap();
    assert_eq!(lang, families::gen_lf(2, 4).unwrap());

    let (code, out, _) = run(&["gen", "ak", "5"]);
    assert_eq!(code, 0);
    let a = parse_automaton(&out).unwrap();
    assert_eq!(a, families::ak_automaton(5).unwrap());

    let (code, _, err) = run(&["gen", "llk", "5", "9"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn fixture_output_reparses_to_the_library_fixture() {
    let (code, out, _) = run(&["fixture", "fig7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# ell: 4\n"));
    let a = parse_automaton(&out).unwrap();
    assert_eq!(a, families::fixture_fig7().unwrap().0);

    let (code, out, _) = run(&["fixture", "fig6"]);
    assert_eq!(code, 0);
    let a = parse_automaton(&out).unwrap();
    assert_eq!(a, families::fixture_fig6().unwrap().0);
}

#[test]
fn sat_reduce_builds_the_small_unsat_instance() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "unsat.cnf", "c x and not x\np cnf 1 2\n1 0\n-1 0\n");
    let (code, out, _) = run(&["sat-reduce", &cnf]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# ell: 2\n# primes: 2\n"), "output was: {out}");
    let a = parse_automaton(&out).unwrap();
    assert_eq!(a.state_count(), 7);
}

#[test]
fn dot_draws_the_fixture_with_seven_nodes_and_edges() {
    let dir = tempfile::tempdir().unwrap();
    let (fig7, _) = families::fixture_fig7().unwrap();
    let aut = write(dir.path(), "fig7.aut", &serialize_automaton(&fig7));
    let (code, out, _) = run(&["dot", &aut]);
    assert_eq!(code, 0);
    let nodes = out.matches("shape=circle").count() + out.matches("shape=doublecircle").count();
    assert_eq!(nodes, 7);
    assert_eq!(out.matches("label=\"a\"").count(), 7);
}

#[test]
fn language_lists_the_bounded_words_in_shortlex_order() {
    let dir = tempfile::tempdir().unwrap();
    let (fig7, _) = families::fixture_fig7().unwrap();
    let aut = write(dir.path(), "fig7.aut", &serialize_automaton(&fig7));
    let (code, out, _) = run(&["language", &aut, "--ell", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "aa\naaaa\n");
}

#[test]
fn help_is_not_an_error() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("cover-check"));
}
