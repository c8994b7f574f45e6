// The invariants Delta_S for several solutions of the E-system.

use yh::braid::BraidWord;
use yh::esystem::{all_subsets, solve};
use yh::invariants::delta_s;

fn run_example() {
    let fig8 = BraidWord::parse("1 -2 1 -2", None).unwrap();
    for s in all_subsets(2) {
        let sol = solve(2, &s).unwrap();
        let v = delta_s(&fig8, &sol).unwrap();
        println!("Delta_{s:?}(figure eight) = {v}");
        assert!(v.value.odd.is_zero());
    }
}

fn main() {
    run_example();
}
