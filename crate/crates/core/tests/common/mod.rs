#![allow(dead_code)]

use yh::braid::{sandwich_rewrite, BraidWord};
use yh::corpus;
use yh::esystem::{all_subsets, e_from_values, solve, verify, ESolution};
use yh::hecke::{HElement, Hecke, OcneanuTrace};
use yh::invariants::{case_spec, compare, Evaluator, Target, EQUALITY_CASES};
use yh::scalars::{Bindings, Cyclotomic, Poly, RatFun, Symbol};
use yh::symgroup::{enumerate_d, w_mu};
use yh::yokonuma::{e_expand, FramingCharacter, JuyumayaTrace, YElement, Yokonuma};

pub type Check = Result<String, String>;

fn fail<T: std::fmt::Debug>(e: T) -> String {
    format!("{e:?}")
}

/// One factor of a monomial word in the generators of `Y_{d,n}`.
#[derive(Clone, Copy, Debug)]
pub enum Atom {
    G(usize),
    Ginv(usize),
    T(usize, i64),
    E(usize, usize),
}

impl Atom {
    fn inverted(self) -> Atom {
        match self {
            Atom::G(i) => Atom::Ginv(i),
            Atom::Ginv(i) => Atom::G(i),
            a => a,
        }
    }
}

pub fn eval(alg: &Yokonuma, n: usize, word: &[Atom]) -> YElement {
    let d = alg.d();
    let mut y = YElement::unit(n, d);
    for a in word {
        y = match *a {
            Atom::G(i) => alg.mul_gen(&y, i),
            Atom::Ginv(i) => alg.mul_gen_inv(&y, i),
            Atom::T(j, m) => alg.mul_t(&y, j, m),
            Atom::E(i, k) => alg.mul(&y, &e_expand(i, k, n, d).unwrap()),
        }
        .unwrap();
    }
    y
}

pub fn all_solutions(max_d: u32) -> Vec<ESolution> {
    (1..=max_d).flat_map(|d| all_subsets(d).into_iter().map(move |s| solve(d, &s).unwrap())).collect()
}

pub fn singletons(max_d: u32) -> Vec<ESolution> {
    all_solutions(max_d).into_iter().filter(|s| s.is_singleton()).collect()
}

fn rel(a: &[Atom], b: &[Atom]) -> (Vec<Atom>, Vec<Atom>) {
    (a.to_vec(), b.to_vec())
}

/// The relations of `Y_{d,n}`, the commutation rules for `e_i`, and `t_i e_{i,k} = t_k e_{i,k}`.
pub fn yokonuma_relations(n: usize) -> Vec<(Vec<Atom>, Vec<Atom>)> {
    use Atom::*;
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                out.push(rel(&[G(i), G(j)], &[G(j), G(i)]));
            }
            if i.abs_diff(j) == 1 {
                out.push(rel(&[G(i), G(j), G(i)], &[G(j), G(i), G(j)]));
            }
        }
        out.push(rel(&[G(i), Ginv(i)], &[]));
        out.push(rel(&[Ginv(i), G(i)], &[]));
    }
    for j in 1..=n {
        out.push(rel(&[T(j, 1); 3], &[T(j, 3)]));
        for k in 1..=n {
            out.push(rel(&[T(j, 1), T(k, 1)], &[T(k, 1), T(j, 1)]));
            out.push(rel(&[T(j, 1), E(j, k)], &[T(k, 1), E(j, k)]));
        }
        for i in 1..n {
            let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            out.push(rel(&[T(j, 1), G(i)], &[G(i), T(sj, 1)]));
        }
    }
    let mut edik = Vec::new();
    for i in 1..n {
        for j in 1..=n {
            edik.push(rel(&[T(j, 1), E(i, i + 1)], &[E(i, i + 1), T(j, 1)]));
        }
        for j in 1..n {
            edik.push(rel(&[E(j, j + 1), E(i, i + 1)], &[E(i, i + 1), E(j, j + 1)]));
            if j + 1 != i && i + 1 != j {
                edik.push(rel(&[G(j), E(i, i + 1)], &[E(i, i + 1), G(j)]));
            }
            if i.abs_diff(j) == 1 {
                edik.push(rel(&[E(j, j + 1), G(i), G(j)], &[G(i), G(j), E(i, i + 1)]));
            }
        }
        if i >= 2 {
            edik.push(rel(&[G(i - 1), E(i, i + 1)], &[E(i - 1, i + 1), G(i - 1)]));
            edik.push(rel(&[E(i, i + 1), G(i - 1)], &[G(i - 1), E(i - 1, i + 1)]));
        }
        if i + 2 <= n {
            edik.push(rel(&[G(i + 1), E(i, i + 1)], &[E(i, i + 2), G(i + 1)]));
            edik.push(rel(&[E(i, i + 1), G(i + 1)], &[G(i + 1), E(i, i + 2)]));
        }
    }
    let inverted: Vec<_> = edik
        .iter()
        .map(|(a, b)| (a.iter().map(|x| x.inverted()).collect(), b.iter().map(|x| x.inverted()).collect()))
        .collect();
    out.extend(edik);
    out.extend(inverted);
    out
}

/// Criterion 1.
pub fn relation_suites() -> Check {
    let mut count = 0;
    for n in 2..=4usize {
        let h = Hecke::generic();
        let q = Poly::symbol(Symbol::Q);
        let g = |i| HElement::generator(n, i).unwrap();
        for i in 1..n {
            let sq = h.mul(&g(i), &g(i)).map_err(fail)?;
            let expect = g(i).scale(&(&q - &Poly::one())).add(&HElement::unit(n).scale(&q));
            if sq != expect {
                return Err(format!("H_{n}: quadratic relation fails for G_{i}"));
            }
            if h.mul_gen_inv(&g(i), i).map_err(fail)? != HElement::unit(n) {
                return Err(format!("H_{n}: G_{i} G_{i}^-1 != 1"));
            }
            count += 2;
            for j in 1..n {
                let (lhs, rhs) = if i.abs_diff(j) > 1 {
                    (h.mul(&g(i), &g(j)), h.mul(&g(j), &g(i)))
                } else if i.abs_diff(j) == 1 {
                    (
                        h.mul(&h.mul(&g(i), &g(j)).unwrap(), &g(i)),
                        h.mul(&h.mul(&g(j), &g(i)).unwrap(), &g(j)),
                    )
                } else {
                    continue;
                };
                if lhs.map_err(fail)? != rhs.map_err(fail)? {
                    return Err(format!("H_{n}: braid relation fails for ({i},{j})"));
                }
                count += 1;
            }
        }
    }
    for d in 1..=3u32 {
        let alg = Yokonuma::generic(d);
        let u = Poly::symbol(Symbol::U);
        let um1 = &u - &Poly::one();
        for n in 2..=4usize {
            for i in 1..n {
                let g = YElement::generator(n, d, i).unwrap();
                let e = e_expand(i, i + 1, n, d).unwrap();
                let expect = YElement::unit(n, d).add(&e.scale(&um1)).add(&alg.mul(&e, &g).unwrap().scale(&um1));
                if alg.mul(&g, &g).map_err(fail)? != expect {
                    return Err(format!("Y_{{{d},{n}}}: quadratic relation fails for g_{i}"));
                }
                if alg.mul(&e, &e).map_err(fail)? != e {
                    return Err(format!("Y_{{{d},{n}}}: e_{i} is not idempotent"));
                }
                count += 2;
            }
            for (a, b) in yokonuma_relations(n) {
                if eval(&alg, n, &a) != eval(&alg, n, &b) {
                    return Err(format!("Y_{{{d},{n}}}: {a:?} != {b:?}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} identities"))
}

/// `(u^m ∓ 1)/(u + 1)` style coefficient `(x^m + s)/(x + 1)`.
fn power_coeff(x: &RatFun, m: u32, s: i64) -> RatFun {
    &(&x.pow(m) + &RatFun::int(s)) / &(x + &RatFun::one())
}

/// Criterion 2.
pub fn closed_form_traces() -> Check {
    let q = RatFun::symbol(Symbol::Q);
    let zeta = RatFun::symbol(Symbol::Zeta);
    let u = RatFun::symbol(Symbol::U);
    let z = RatFun::symbol(Symbol::Z);
    let ot = OcneanuTrace::generic();
    let mut count = 0;
    for n in 2..=3usize {
        for i in 1..n {
            for m in 1..=8u32 {
                let word = BraidWord::new(n, vec![i as i32; m as usize]).unwrap();
                let got: RatFun = ot.trace(&ot.hecke().from_braid(&word).unwrap()).map_err(fail)?.into();
                let expect = if m % 2 == 0 {
                    let c = power_coeff(&q, m, -1);
                    &(&(&c * &zeta) + &c) + &RatFun::one()
                } else {
                    let c = power_coeff(&q, m, 1);
                    &(&(&c * &zeta) + &c) - &RatFun::one()
                };
                if got != expect {
                    return Err(format!("tau(G_{i}^{m}) in H_{n}"));
                }
                count += 1;
            }
        }
    }
    for d in 1..=3u32 {
        let tr = JuyumayaTrace::symbolic(d).map_err(fail)?;
        let e: RatFun = tr.character().e().into();
        for n in 2..=3usize {
            for i in 1..n {
                for m in 1..=8u32 {
                    let word = BraidWord::new(n, vec![i as i32; m as usize]).unwrap();
                    let got: RatFun = tr.trace(&tr.algebra().from_braid(&word).unwrap()).map_err(fail)?.into();
                    let expect = if m % 2 == 0 {
                        let c = power_coeff(&u, m, -1);
                        &(&(&c * &z) + &(&c * &e)) + &RatFun::one()
                    } else {
                        let c = power_coeff(&u, m, 1);
                        &(&(&c * &z) + &(&c * &e)) - &e
                    };
                    if got != expect {
                        return Err(format!("tr(g_{i}^{m}) in Y_{{{d},{n}}}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} powers"))
}

pub fn showcase() -> BraidWord {
    BraidWord::new(3, vec![1, 2, 2, 1, 2, 2]).unwrap()
}

/// Criterion 3.
pub fn showcase_values() -> Check {
    let q = RatFun::symbol(Symbol::Q);
    let zeta = RatFun::symbol(Symbol::Zeta);
    let ot = OcneanuTrace::generic();
    let tau: RatFun = ot.trace(&ot.hecke().from_braid(&showcase()).unwrap()).map_err(fail)?.into();
    let two = RatFun::int(2);
    let q2 = &q * &q;
    let a = &(&(&q2 * &zeta) - &(&(&two * &q) * &zeta)) + &zeta;
    let b = &(&(&(&(&q2 * &zeta) - &(&q * &zeta)) + &zeta) + &q2) - &q;
    let c = &(&(&(&two * &q2) * &zeta) - &(&(&two * &q) * &zeta)) + &q2;
    let e = &(&(&q * &zeta) - &zeta) + &q;
    if tau != &(&a * &b) + &(&c * &e) {
        return Err("tau(G1 G2^2 G1 G2^2)".into());
    }
    let u = RatFun::symbol(Symbol::U);
    let z = RatFun::symbol(Symbol::Z);
    let one = RatFun::one();
    let um1 = &u - &one;
    let sols = all_solutions(4);
    for sol in &sols {
        let tr = JuyumayaTrace::specialized(sol).map_err(fail)?;
        let e: RatFun = Poly::rational(sol.e_value()).into();
        let got: RatFun = tr.trace(&tr.algebra().from_braid(&showcase()).unwrap()).map_err(fail)?.into();
        let b = &(&one + &(&um1 * &e)) + &(&um1 * &z);
        let t1 = &b * &(&(&two * &b) - &one);
        let t2 = &(&(&um1 * &um1) * &(&(&e + &(&u * &z)) + &z)) * &(&(&(&u * &e) + &(&u * &z)) - &z);
        let t3 = &(&(&u * &um1) * &um1) * &(&z * &z);
        if got != &(&t1 + &t2) + &t3 {
            return Err(format!("tr_S showcase for d={} S={:?}", sol.d(), sol.subset()));
        }
    }
    Ok(format!("tau and tr_S for {} solutions", sols.len()))
}

/// Criterion 4.
pub fn esystem_solutions() -> Check {
    let mut count = 0;
    for d in 1..=8u32 {
        for s in all_subsets(d) {
            let sol = solve(d, &s).map_err(fail)?;
            if !verify(sol.values()) {
                return Err(format!("verify fails for d={d} S={s:?}"));
            }
            let e = Cyclotomic::from_rational(sol.e_value());
            if e != e_from_values(sol.values()) || sol.e_value() != yh::scalars::Rational::new(1.into(), (s.len() as i64).into()) {
                return Err(format!("E != 1/|S| for d={d} S={s:?}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} subsets"))
}

/// Criterion 5.
pub fn phi_property() -> Check {
    let mut count = 0;
    for d in 1..=3u32 {
        let sym = JuyumayaTrace::symbolic(d).map_err(fail)?;
        let basis = sym.algebra().inductive_basis(3).map_err(fail)?;
        for s in all_subsets(d) {
            let sol = solve(d, &s).unwrap();
            let spec = JuyumayaTrace::specialized(&sol).map_err(fail)?;
            for y in &basis {
                let lhs = spec.trace(&spec.phi(y).map_err(fail)?).map_err(fail)?;
                let rhs = FramingCharacter::specialize(&sym.trace(y).map_err(fail)?, &sol).map_err(fail)?;
                if lhs != rhs {
                    return Err(format!("d={d} S={s:?} y={y}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} basis elements"))
}

/// Criterion 6.
pub fn e_equals_one() -> Check {
    let mut count = 0;
    for d in 1..=4u32 {
        let alg = Yokonuma::generic(d);
        for sol in singletons(d).into_iter().filter(|s| s.d() == d) {
            let tr = JuyumayaTrace::specialized(&sol).map_err(fail)?;
            for n in 1..=3usize {
                for beta in alg.inductive_basis(n + 1).map_err(fail)? {
                    let t = tr.trace(&beta).map_err(fail)?;
                    for j in 1..=n {
                        if tr.trace(&alg.mul_e(&beta, j).map_err(fail)?).map_err(fail)? != t {
                            return Err(format!("d={d} S={:?} n={n} j={j} beta={beta}", sol.subset()));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} products"))
}

/// Criterion 7.
pub fn traces_on_d() -> Check {
    let mut count = 0;
    for d in 1..=3u32 {
        let tr = JuyumayaTrace::symbolic(d).map_err(fail)?;
        for n in 1..=5usize {
            for w in enumerate_d(n) {
                let y = YElement::basis(d, yh::yokonuma::Framing::zero(n), w);
                let l = w_mu(&w.cycle_type()).length() as u32;
                if tr.trace(&y).map_err(fail)? != Poly::symbol(Symbol::Z).pow(l) {
                    return Err(format!("d={d} w={:?}", w.image()));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} elements"))
}

/// Criterion 8.
pub fn markov_invariance() -> Check {
    let corpus = corpus::builtin();
    let mut count = 0;
    for sol in all_solutions(3) {
        let rows = yh::invariants::markov_test(&corpus, &sol, 3, corpus::CORPUS_SEED).map_err(fail)?;
        if let Some(r) = rows.iter().find(|r| !r.passed()) {
            return Err(format!("d={} S={:?} braid [{}] {}", sol.d(), sol.subset(), r.braid, r.mv));
        }
        count += rows.len();
    }
    Ok(format!("{count} moves on {} braids", corpus.len()))
}

/// Distinct small rationals for `q, ζ, u, z`.
pub fn random_bindings(seed: u64) -> Bindings {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut used: Vec<(i64, i64)> = Vec::new();
    let mut b = Bindings::new();
    for s in [Symbol::Q, Symbol::Zeta, Symbol::U, Symbol::Z] {
        loop {
            let num = rng.gen_range(2..=40i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den = rng.gen_range(1..=9i64);
            let v = RatFun::frac(num, den);
            if !used.iter().any(|&(n, d)| RatFun::frac(n, d) == v) && v != RatFun::int(-1) {
                used.push((num, den));
                b.insert(s, v);
                break;
            }
        }
    }
    b
}

fn pairings() -> Vec<(u32, ESolution)> {
    let mut out = Vec::new();
    for case in EQUALITY_CASES {
        let spec = case_spec(case).unwrap();
        let sols = if spec.needs_singleton { singletons(3) } else { all_solutions(3) };
        out.extend(sols.into_iter().map(|s| (case, s)));
    }
    out
}

/// Criterion 9.
pub fn cases_one_to_fourteen() -> Check {
    let corpus = corpus::builtin();
    let pairs = pairings();
    for (case, sol) in &pairs {
        let report = compare(&corpus, &Target::Case(*case), sol).map_err(fail)?;
        if let Some(w) = report.witness() {
            return Err(format!("case {case} d={} S={:?}: unequal on [{}]", sol.d(), sol.subset(), w.braid));
        }
    }
    for seed in 0..4u64 {
        let sol = solve(3, &[0, 1]).unwrap();
        let report = compare(&corpus, &Target::Bindings(random_bindings(seed)), &sol).map_err(fail)?;
        if report.all_equal() {
            return Err(format!("no witness for random bindings, seed {seed}"));
        }
    }
    let beta = [showcase()];
    for case in [15, 16] {
        for (d, s) in [(2u32, vec![0u32, 1]), (3, vec![0, 2]), (3, vec![0, 1, 2])] {
            let sol = solve(d, &s).unwrap();
            let report = compare(&beta, &Target::Case(case), &sol).map_err(fail)?;
            if report.all_equal() {
                return Err(format!("case {case} d={d} S={s:?} gives no witness"));
            }
        }
    }
    Ok(format!("{} case/solution pairs equal on {} braids, witnesses found", pairs.len(), corpus.len()))
}

/// Criterion 10.
pub fn no_scalar_family() -> Check {
    for seed in 0..8u64 {
        for (d, s) in [(2u32, vec![0u32, 1]), (3, vec![1, 2]), (3, vec![0, 1, 2])] {
            let sol = solve(d, &s).unwrap();
            let ev = Evaluator::new(&random_bindings(seed), &sol).map_err(fail)?;
            let diag = ev.diagnostic().map_err(fail)?;
            if diag.d_equal || diag.inverse_ratio || diag.scalar_family_possible {
                return Err(format!("seed {seed} d={d} S={s:?}: {diag:?}"));
            }
        }
    }
    for (case, sol) in pairings() {
        let ev = Evaluator::new(&case_spec(case).unwrap().bindings, &sol).map_err(fail)?;
        let diag = ev.diagnostic().map_err(fail)?;
        if !diag.d_equal || !diag.inverse_ratio || !diag.c2_squared.is_one() {
            return Err(format!("case {case}: {diag:?}"));
        }
    }
    Ok("generic: D_H != D_Y and the inverse ratio fails; cases 1-14: c_n = 1".into())
}

/// Criterion 11.
pub fn degeneration() -> Check {
    let corpus = corpus::builtin();
    let swap = Bindings::new().with(Symbol::Q, RatFun::symbol(Symbol::U)).with(Symbol::Zeta, RatFun::symbol(Symbol::Z));
    let sol = solve(1, &[0]).unwrap();
    let report = compare(&corpus, &Target::Bindings(swap), &sol).map_err(fail)?;
    if let Some(w) = report.witness() {
        return Err(format!("d=1 unequal on [{}]", w.braid));
    }
    let second = case_spec(14).unwrap().bindings;
    for sol in singletons(3) {
        let report = compare(&corpus, &Target::Bindings(second.clone()), &sol).map_err(fail)?;
        if let Some(w) = report.witness() {
            return Err(format!("q=1/u d={} S={:?} unequal on [{}]", sol.d(), sol.subset(), w.braid));
        }
    }
    Ok(format!("{} braids", corpus.len()))
}

/// Criterion 12.
pub fn sandwich_rewriter() -> Check {
    let alg = Yokonuma::generic(2);
    let mut count = 0;
    for n in 1..=3usize {
        for alpha in corpus::positive_words(n, 6) {
            let rewritten = sandwich_rewrite(&alpha).map_err(fail)?;
            let out = BraidWord::new(n + 1, rewritten.word(n)).map_err(fail)?;
            let mut direct = vec![n as i32];
            direct.extend_from_slice(alpha.letters());
            direct.push(n as i32);
            let direct = BraidWord::new(n + 1, direct).unwrap();
            if !out.is_positive() || out.epsilon() != direct.epsilon() || out.permutation() != direct.permutation() {
                return Err(format!("[{alpha}] shape"));
            }
            if alg.from_braid(&out).map_err(fail)? != alg.from_braid(&direct).map_err(fail)? {
                return Err(format!("[{alpha}] image"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} positive words"))
}
