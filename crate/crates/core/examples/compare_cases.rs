// Comparing P and Delta_S under the rows of the parameter table.

use yh::braid::BraidWord;
use yh::corpus;
use yh::esystem::solve;
use yh::invariants::{compare, Target};

fn run_example() {
    let braids: Vec<BraidWord> = corpus::named().into_iter().map(|(_, b)| b).collect();
    let sol = solve(3, &[0, 2]).unwrap();
    for case in [1, 3, 7, 8] {
        let report = compare(&braids, &Target::Case(case), &sol).unwrap();
        println!("case {case}: all equal = {}", report.all_equal());
        assert!(report.all_equal());
    }
    let single = solve(3, &[1]).unwrap();
    let report = compare(&braids, &Target::Case(14), &single).unwrap();
    assert!(report.all_equal());

    let report = compare(&braids, &Target::Case(15), &sol).unwrap();
    let w = report.witness().unwrap();
    println!("case 15 witness: [{}]\n  P     = {}\n  Delta = {}", w.braid, w.p, w.delta);
    println!("diagnostic: {:?}", report.diagnostic);
}

fn main() {
    run_example();
}
