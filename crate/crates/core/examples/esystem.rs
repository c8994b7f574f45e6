// Solutions of the E-system for every subset S of Z/dZ.

use yh::esystem::{all_subsets, solve, verify};

fn run_example() {
    for d in 1..=4 {
        for s in all_subsets(d) {
            let sol = solve(d, &s).unwrap();
            assert!(verify(sol.values()));
            println!("{sol}");
        }
    }
}

fn main() {
    run_example();
}
