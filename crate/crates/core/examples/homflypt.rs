// The HOMFLYPT polynomial P of closed braids.

use yh::braid::BraidWord;
use yh::invariants::{homflypt, HomflyptEvaluator};
use yh::scalars::RatFun;

fn run_example() {
    for text in ["", "1 1", "1 1 1", "-1 -1 -1", "1 -2 1 -2"] {
        let alpha = BraidWord::parse(text, None).unwrap();
        println!("P([{alpha}]) = {}", homflypt(&alpha).unwrap());
    }
    let at = HomflyptEvaluator::new(&RatFun::int(2), &RatFun::frac(-1, 3));
    let trefoil = BraidWord::parse("1 1 1", None).unwrap();
    println!("P(trefoil) at q = 2, zeta = -1/3: {}", at.homflypt(&trefoil).unwrap());
    let stab = trefoil.markov_stabilize(true);
    assert_eq!(at.homflypt(&stab).unwrap().value, at.homflypt(&trefoil).unwrap().value);
}

fn main() {
    run_example();
}
