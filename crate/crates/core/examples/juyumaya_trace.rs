// The Juyumaya trace, symbolic and specialized, with the maps phi and gamma.

use yh::braid::BraidWord;
use yh::esystem::solve;
use yh::yokonuma::{gamma, FramingCharacter, JuyumayaTrace, YElement};

fn run_example() {
    let sym = JuyumayaTrace::symbolic(3).unwrap();
    let e = sym.character().e();
    println!("E = tr(e_i) = {e}");
    let hopf = BraidWord::parse("1 1", None).unwrap();
    let y = sym.algebra().from_braid(&hopf).unwrap();
    let t = sym.trace(&y).unwrap();
    println!("tr(g_1^2) = {t}");

    let sol = solve(3, &[0, 1]).unwrap();
    let spec = JuyumayaTrace::specialized(&sol).unwrap();
    let ts = spec.trace(&spec.algebra().from_braid(&hopf).unwrap()).unwrap();
    println!("tr_S(g_1^2) for S = {{0,1}}: {ts}");
    assert_eq!(FramingCharacter::specialize(&t, &sol).unwrap(), ts);

    let t12 = YElement::t(2, 3, 2, 1).unwrap();
    let phi = spec.phi(&t12).unwrap();
    println!("phi(t_2) = {phi}");
    assert_eq!(spec.trace(&phi).unwrap(), FramingCharacter::specialize(&sym.trace(&t12).unwrap(), &sol).unwrap());

    let single = solve(3, &[1]).unwrap();
    let g = YElement::generator(2, 3, 1).unwrap();
    println!("gamma(t_2 g_1) = {}", gamma(&spec.algebra().mul(&t12, &g).unwrap(), &single).unwrap());
}

fn main() {
    run_example();
}
