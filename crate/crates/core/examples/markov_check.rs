// Markov invariance of both invariants on part of the built-in corpus.

use yh::corpus;
use yh::esystem::solve;
use yh::invariants::markov_test;

fn run_example() {
    let braids: Vec<_> = corpus::builtin().into_iter().filter(|b| b.len() <= 4).collect();
    let sol = solve(3, &[1, 2]).unwrap();
    let rows = markov_test(&braids, &sol, 3, corpus::CORPUS_SEED).unwrap();
    let passed = rows.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} moves preserve P and Delta_S", rows.len());
    assert_eq!(passed, rows.len());
}

fn main() {
    run_example();
}
