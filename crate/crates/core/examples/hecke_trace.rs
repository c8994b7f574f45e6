// The Hecke algebra H_n(q) and the Ocneanu trace.

use yh::braid::BraidWord;
use yh::hecke::OcneanuTrace;

fn run_example() {
    let tau = OcneanuTrace::generic();
    let h = tau.hecke();
    let g3 = h.power(2, 1, 3).unwrap();
    println!("G_1^3 = {g3}");
    let word = BraidWord::parse("1 1 1", None).unwrap();
    assert_eq!(h.from_braid(&word).unwrap(), g3);

    let fig8 = BraidWord::parse("1 -2 1 -2", None).unwrap();
    let x = h.from_braid(&fig8).unwrap();
    println!("pi(figure eight) has {} terms", x.len());
    println!("tau(pi(figure eight)) = {}", tau.trace(&x).unwrap());

    let showcase = BraidWord::parse("1 2 2 1 2 2", None).unwrap();
    println!("tau(G1 G2^2 G1 G2^2) = {}", tau.trace(&h.from_braid(&showcase).unwrap()).unwrap());
}

fn main() {
    run_example();
}
