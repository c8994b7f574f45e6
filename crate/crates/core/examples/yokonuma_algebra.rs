// Products in the Yokonuma-Hecke algebra Y_{d,n}(u).

use yh::yokonuma::{e_expand, YElement, Yokonuma};

fn run_example() {
    let alg = Yokonuma::generic(3);
    let g1 = YElement::generator(2, 3, 1).unwrap();
    let sq = alg.mul(&g1, &g1).unwrap();
    println!("g_1^2 in Y_(3,2) = {sq}");

    let e1 = e_expand(1, 2, 2, 3).unwrap();
    assert_eq!(alg.mul(&e1, &e1).unwrap(), e1);
    println!("e_1 = {e1}");

    let inv = alg.mul_gen_inv(&YElement::unit(2, 3), 1).unwrap();
    assert_eq!(alg.mul(&g1, &inv).unwrap(), YElement::unit(2, 3));
    println!("g_1^-1 = {inv}");

    let t = YElement::t(2, 3, 1, 1).unwrap();
    let moved = alg.mul(&t, &g1).unwrap();
    println!("t_1 g_1 = {moved}");
    assert_eq!(moved, alg.mul(&g1, &YElement::t(2, 3, 2, 1).unwrap()).unwrap());

    let basis = alg.inductive_basis(3).unwrap();
    println!("inductive basis of Y_(3,3): {} elements", basis.len());
}

fn main() {
    run_example();
}
