// Exact scalars: cyclotomic numbers, Laurent polynomials, rational functions
// and the quadratic extension by a square root.

use yh::scalars::{cyclotomic_polynomial, parse_ratfun, Cyclotomic, RatFun, SqrtExt};

fn run_example() {
    let phi12 = cyclotomic_polynomial(12);
    println!("Phi_12 coefficients: {phi12:?}");

    let w = Cyclotomic::root_of_unity(3, 1);
    let sum = &(&Cyclotomic::one() + &w) + &(&w * &w);
    println!("1 + w + w^2 in Q(zeta_3) = {sum}");
    assert!(sum.is_zero());
    println!("1/(1 - w) = {}", (&Cyclotomic::one() - &w).inv().unwrap());

    let f = parse_ratfun("(u^2 - 1)/(u + 1)").unwrap();
    let g = parse_ratfun("u - 1").unwrap();
    println!("(u^2 - 1)/(u + 1) == u - 1: {}", f == g);
    assert_eq!(f, g);

    let lam = parse_ratfun("(zeta + 1 - q)/(q*zeta)").unwrap();
    let r = SqrtExt::root(lam.clone());
    let r3 = r.pow(3).unwrap();
    println!("r^3 = {r3}");
    assert_eq!(r3.odd, lam);
    let back = r.pow(-1).unwrap().mul(&r).unwrap();
    assert_eq!(back, SqrtExt::one(lam));
    let half = RatFun::frac(1, 2);
    println!("1/2 as rational function: {half}");
}

fn main() {
    run_example();
}
