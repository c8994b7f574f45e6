//! The Yokonuma-Hecke algebra `Y_{d,n}(u)` on the split basis `t^k g_w`,
//! the Juyumaya trace, and the maps φ and γ.

use std::fmt;
use std::sync::RwLock;

use rustc_hash::FxHashMap;

use crate::braid::BraidWord;
use crate::esystem::ESolution;
use crate::hecke::HElement;
use crate::scalars::{Cyclotomic, Poly, Rational, Symbol, MAX_FRAMING_SYMBOL};
use crate::symgroup::{Permutation, MAX_N};
use crate::{Error, Result};

/// Exponents `(k_1, …, k_n)` of `t_1^{k_1} ⋯ t_n^{k_n}`, reduced mod `d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Framing {
    n: u8,
    k: [u8; MAX_N],
}

impl Framing {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N);
        Framing { n: n as u8, k: [0; MAX_N] }
    }

    pub fn from_slice(k: &[u32], d: u32) -> Self {
        let mut f = Framing::zero(k.len());
        for (j, &e) in k.iter().enumerate() {
            f.k[j] = (e % d) as u8;
        }
        f
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// `k_j` for `1 ≤ j ≤ n`.
    #[inline]
    pub fn get(&self, j: usize) -> u32 {
        self.k[j - 1] as u32
    }

    pub fn entries(&self) -> Vec<u32> {
        self.k[..self.n()].iter().map(|&e| e as u32).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.k[..self.n()].iter().all(|&e| e == 0)
    }

    /// Adds `m` to `k_j` mod `d`.
    #[inline]
    fn shift(&mut self, j: usize, m: u32, d: u32) {
        self.k[j - 1] = ((self.k[j - 1] as u32 + m) % d) as u8;
    }

    fn embed(&self) -> Framing {
        let mut f = *self;
        f.n += 1;
        f.k[self.n()] = 0;
        f
    }

    fn drop_last(&self) -> Framing {
        let mut f = *self;
        f.n -= 1;
        f.k[f.n()] = 0;
        f
    }
}

impl fmt::Display for Framing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries().iter().map(|e| e.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Framing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type YKey = (Framing, Permutation);

/// A sparse combination of split-basis elements `t^k g_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct YElement {
    n: usize,
    d: u32,
    terms: FxHashMap<YKey, Poly>,
}

impl YElement {
    pub fn zero(n: usize, d: u32) -> Self {
        assert!(d >= 1, "d must be positive");
        YElement { n, d, terms: FxHashMap::default() }
    }

    pub fn unit(n: usize, d: u32) -> Self {
        YElement::basis(d, Framing::zero(n), Permutation::identity(n))
    }

    pub fn basis(d: u32, k: Framing, w: Permutation) -> Self {
        assert_eq!(k.n(), w.n());
        let mut y = YElement::zero(w.n(), d);
        y.terms.insert((k, w), Poly::one());
        y
    }

    pub fn generator(n: usize, d: u32, i: usize) -> Result<Self> {
        check_index(n, i)?;
        Ok(YElement::basis(d, Framing::zero(n), Permutation::transposition(n, i)))
    }

    /// `t_j^m`.
    pub fn t(n: usize, d: u32, j: usize, m: i64) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::GeneratorOutOfRange { i: j, n });
        }
        let mut k = Framing::zero(n);
        k.shift(j, m.rem_euclid(d as i64) as u32, d);
        Ok(YElement::basis(d, k, Permutation::identity(n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &Framing, w: &Permutation) -> Poly {
        self.terms.get(&(*k, *w)).cloned().unwrap_or_default()
    }

    /// Terms sorted by permutation length, permutation, then framing.
    pub fn terms(&self) -> Vec<(Framing, Permutation, Poly)> {
        let mut v: Vec<(Framing, Permutation, Poly)> =
            self.terms.iter().map(|((k, w), c)| (*k, *w, c.clone())).collect();
        v.sort_by_key(|(k, w, _)| (w.length(), *w, *k));
        v
    }

    pub fn add_term(&mut self, key: YKey, c: &Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(x) => {
                x.add_assign(c);
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    fn add_scaled(&mut self, other: &YElement, k: &Poly) {
        for (key, c) in &other.terms {
            self.add_term(*key, &(c * k));
        }
    }

    pub fn add(&self, other: &YElement) -> YElement {
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(*key, c);
        }
        out
    }

    pub fn sub(&self, other: &YElement) -> YElement {
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(*key, &-c);
        }
        out
    }

    pub fn scale(&self, k: &Poly) -> YElement {
        let mut out = YElement::zero(self.n, self.d);
        out.add_scaled(self, k);
        out
    }

    /// Views the element inside `Y_{d,n+1}`.
    pub fn embed(&self) -> YElement {
        YElement {
            n: self.n + 1,
            d: self.d,
            terms: self.terms.iter().map(|((k, w), c)| ((k.embed(), w.embed()), c.clone())).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Result<Poly>) -> Result<YElement> {
        let mut out = YElement::zero(self.n, self.d);
        for (key, c) in &self.terms {
            out.add_term(*key, &f(c)?);
        }
        Ok(out)
    }

    fn same_algebra(&self, other: &YElement) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::Mismatch(format!("Y_{{{},{}}} vs Y_{{{},{}}}", self.d, self.n, other.d, other.n)));
        }
        Ok(())
    }
}

impl fmt::Display for YElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, w, c)) in self.terms().iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t{k}*g{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for YElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::GeneratorOutOfRange { i, n })
    } else {
        Ok(())
    }
}

/// `e_{i,k} = (1/d) Σ_s t_i^s t_k^{d−s}`.
pub fn e_expand(i: usize, k: usize, n: usize, d: u32) -> Result<YElement> {
    for j in [i, k] {
        if j == 0 || j > n {
            return Err(Error::GeneratorOutOfRange { i: j, n });
        }
    }
    let c = Poly::rational(Rational::new(1.into(), (d as i64).into()));
    let mut y = YElement::zero(n, d);
    for s in 0..d {
        let mut f = Framing::zero(n);
        f.shift(i, s, d);
        f.shift(k, d - s, d);
        y.add_term((f, Permutation::identity(n)), &c);
    }
    Ok(y)
}

/// Structure data of `Y_{d,n}(u)`.
#[derive(Clone, Debug)]
pub struct Yokonuma {
    d: u32,
    u: Poly,
    u_inv: Option<Poly>,
    /// (u − 1)/d
    cu: Poly,
    inv_d: Poly,
}

impl Yokonuma {
    pub fn new(d: u32, u: Poly) -> Self {
        assert!(d >= 1, "d must be positive");
        let inv_d = Poly::rational(Rational::new(1.into(), (d as i64).into()));
        let cu = &(&u - &Poly::one()) * &inv_d;
        let u_inv = u.try_inv().ok();
        Yokonuma { d, u, u_inv, cu, inv_d }
    }

    /// `u` left as the indeterminate.
    pub fn generic(d: u32) -> Self {
        Yokonuma::new(d, Poly::symbol(Symbol::U))
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    fn check(&self, y: &YElement) -> Result<()> {
        if y.d != self.d {
            return Err(Error::Mismatch(format!("element has d = {}, algebra has d = {}", y.d, self.d)));
        }
        Ok(())
    }

    /// `y · g_i`. A descent `w = v s_i` expands `g_v g_i²` by the quadratic relation,
    /// with the produced `e_i` moved left past `g_v` as `e_{v(i), v(i+1)}`.
    pub fn mul_gen(&self, y: &YElement, i: usize) -> Result<YElement> {
        self.check(y)?;
        check_index(y.n, i)?;
        let d = self.d;
        let mut out = YElement::zero(y.n, d);
        for ((k, w), c) in &y.terms {
            let ws = w.mul_s(i);
            if !w.has_right_descent(i) {
                out.add_term((*k, ws), c);
                continue;
            }
            out.add_term((*k, ws), c);
            let cc = c * &self.cu;
            if cc.is_zero() {
                continue;
            }
            let (a, b) = (w.apply(i + 1), w.apply(i));
            for s in 0..d {
                let mut f = *k;
                f.shift(a, s, d);
                f.shift(b, d - s, d);
                out.add_term((f, ws), &cc);
                out.add_term((f, *w), &cc);
            }
        }
        Ok(out)
    }

    /// `y · e_i`, using `g_w e_i = e_{w(i), w(i+1)} g_w`.
    pub fn mul_e(&self, y: &YElement, i: usize) -> Result<YElement> {
        self.check(y)?;
        check_index(y.n, i)?;
        let d = self.d;
        let mut out = YElement::zero(y.n, d);
        for ((k, w), c) in &y.terms {
            let cc = c * &self.inv_d;
            let (a, b) = (w.apply(i), w.apply(i + 1));
            for s in 0..d {
                let mut f = *k;
                f.shift(a, s, d);
                f.shift(b, d - s, d);
                out.add_term((f, *w), &cc);
            }
        }
        Ok(out)
    }

    /// `y · g_i^{-1}` with `g_i^{-1} = g_i + (u^{-1} − 1) e_i + (u^{-1} − 1) e_i g_i`.
    pub fn mul_gen_inv(&self, y: &YElement, i: usize) -> Result<YElement> {
        let ui = self
            .u_inv
            .as_ref()
            .ok_or_else(|| crate::scalars::ScalarError::NotInvertible(self.u.to_string()))?;
        let c = ui - &Poly::one();
        let mut out = self.mul_gen(y, i)?;
        let ye = self.mul_e(y, i)?;
        out.add_scaled(&ye, &c);
        out.add_scaled(&self.mul_gen(&ye, i)?, &c);
        Ok(out)
    }

    /// `y · t_j^m`, using `g_w t_j = t_{w(j)} g_w`.
    pub fn mul_t(&self, y: &YElement, j: usize, m: i64) -> Result<YElement> {
        self.check(y)?;
        if j == 0 || j > y.n {
            return Err(Error::GeneratorOutOfRange { i: j, n: y.n });
        }
        let m = m.rem_euclid(self.d as i64) as u32;
        let mut out = YElement::zero(y.n, self.d);
        for ((k, w), c) in &y.terms {
            let mut f = *k;
            f.shift(w.apply(j), m, self.d);
            out.add_term((f, *w), c);
        }
        Ok(out)
    }

    pub fn mul_letter(&self, y: &YElement, letter: i32) -> Result<YElement> {
        let i = letter.unsigned_abs() as usize;
        if letter > 0 {
            self.mul_gen(y, i)
        } else {
            self.mul_gen_inv(y, i)
        }
    }

    pub fn mul(&self, a: &YElement, b: &YElement) -> Result<YElement> {
        a.same_algebra(b)?;
        self.check(a)?;
        let mut out = YElement::zero(a.n, a.d);
        for ((k, w), c) in &b.terms {
            let mut acc = a.scale(c);
            for j in 1..=a.n {
                if k.get(j) != 0 {
                    acc = self.mul_t(&acc, j, k.get(j) as i64)?;
                }
            }
            for i in w.reduced_word() {
                acc = self.mul_gen(&acc, i)?;
            }
            out.add_scaled(&acc, &Poly::one());
        }
        Ok(out)
    }

    pub fn from_braid(&self, word: &BraidWord) -> Result<YElement> {
        let mut y = YElement::unit(word.n(), self.d);
        for &l in word.letters() {
            y = self.mul_letter(&y, l)?;
        }
        Ok(y)
    }

    /// The inductive basis of `Y_{d,n}`: products `b·g_m g_{m−1} ⋯ g_i t_i^k` and
    /// `b·t_{m+1}^k` with `b` in the basis one level down.
    pub fn inductive_basis(&self, n: usize) -> Result<Vec<YElement>> {
        if n == 0 {
            return Err(Error::Invalid("inductive basis needs n >= 1".into()));
        }
        let d = self.d;
        let mut level: Vec<YElement> = (0..d as i64).map(|k| YElement::t(1, d, 1, k)).collect::<Result<_>>()?;
        for m in 1..n {
            let mut next = Vec::with_capacity(level.len() * d as usize * (m + 1));
            for b in &level {
                let b = b.embed();
                for i in (1..=m).rev() {
                    let mut x = b.clone();
                    for j in (i..=m).rev() {
                        x = self.mul_gen(&x, j)?;
                    }
                    for k in 0..d as i64 {
                        next.push(self.mul_t(&x, i, k)?);
                    }
                }
                for k in 0..d as i64 {
                    next.push(self.mul_t(&b, m + 1, k)?);
                }
            }
            level = next;
        }
        Ok(level)
    }

    /// `g_i^m` from the closed formulas for even and odd `m`.
    pub fn power(&self, n: usize, i: usize, m: u32) -> Result<YElement> {
        check_index(n, i)?;
        let um = self.u.pow(m);
        let u1 = &self.u + &Poly::one();
        let (num, tail) = if m.is_multiple_of(2) {
            (&um - &Poly::one(), YElement::unit(n, self.d))
        } else {
            (&um - &self.u, YElement::generator(n, self.d, i)?)
        };
        let c = num
            .div_exact(&u1)
            .ok_or_else(|| Error::Invalid(format!("u + 1 = {u1} does not divide {num}")))?;
        let e = e_expand(i, i + 1, n, self.d)?;
        let eg = self.mul_gen(&e, i)?;
        Ok(eg.scale(&c).add(&e.scale(&c)).add(&tail))
    }
}

/// The values `m ↦ x_m` used by the trace on framings, with `x_0 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct FramingCharacter {
    values: Vec<Poly>,
    specialized: bool,
}

impl FramingCharacter {
    /// `x_m` kept as indeterminates.
    pub fn symbolic(d: u32) -> Result<Self> {
        if d == 0 || d - 1 > MAX_FRAMING_SYMBOL {
            return Err(Error::Invalid(format!("symbolic framing needs 1 <= d <= {}", MAX_FRAMING_SYMBOL + 1)));
        }
        let values = (0..d).map(|m| if m == 0 { Poly::one() } else { Poly::symbol(Symbol::x(m)) }).collect();
        Ok(FramingCharacter { values, specialized: false })
    }

    pub fn from_solution(sol: &ESolution) -> Self {
        let values = sol.values().iter().map(|x| Poly::constant(x.clone())).collect();
        FramingCharacter { values, specialized: true }
    }

    pub fn d(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn is_specialized(&self) -> bool {
        self.specialized
    }

    pub fn value(&self, m: u32) -> &Poly {
        &self.values[(m % self.d()) as usize]
    }

    /// `E = (1/d) Σ_s x_s x_{d−s}`.
    pub fn e(&self) -> Poly {
        let d = self.d();
        let mut acc = Poly::zero();
        for s in 0..d {
            acc.add_scaled(self.value(s), self.value(d - s));
        }
        acc.scale(&Cyclotomic::from_frac(1, d as i64))
    }

    /// Substitution `x_m ↦ sol.x_m` on a symbolic result.
    pub fn specialize(p: &Poly, sol: &ESolution) -> Result<Poly> {
        let binds: Vec<(Symbol, Poly)> =
            (1..sol.d()).map(|m| (Symbol::x(m), Poly::constant(sol.x(m as i64).clone()))).collect();
        Ok(p.substitute_poly(&binds)?)
    }
}

/// The Juyumaya trace with parameter `z` and a framing character, memoized on basis elements.
pub struct JuyumayaTrace {
    alg: Yokonuma,
    z: Poly,
    chi: FramingCharacter,
    memo: RwLock<FxHashMap<YKey, Poly>>,
    phi_memo: RwLock<FxHashMap<YKey, YElement>>,
}

impl JuyumayaTrace {
    pub fn new(alg: Yokonuma, z: Poly, chi: FramingCharacter) -> Result<Self> {
        if chi.d() != alg.d() {
            return Err(Error::Mismatch(format!("character for d = {}, algebra d = {}", chi.d(), alg.d())));
        }
        Ok(JuyumayaTrace {
            alg,
            z,
            chi,
            memo: RwLock::new(FxHashMap::default()),
            phi_memo: RwLock::new(FxHashMap::default()),
        })
    }

    /// `u`, `z` and every `x_m` indeterminate.
    pub fn symbolic(d: u32) -> Result<Self> {
        JuyumayaTrace::new(Yokonuma::generic(d), Poly::symbol(Symbol::Z), FramingCharacter::symbolic(d)?)
    }

    /// `u`, `z` indeterminate, framings specialized by a solution of the E-system.
    pub fn specialized(sol: &ESolution) -> Result<Self> {
        JuyumayaTrace::new(Yokonuma::generic(sol.d()), Poly::symbol(Symbol::Z), FramingCharacter::from_solution(sol))
    }

    pub fn algebra(&self) -> &Yokonuma {
        &self.alg
    }

    pub fn z(&self) -> &Poly {
        &self.z
    }

    pub fn character(&self) -> &FramingCharacter {
        &self.chi
    }

    pub fn trace(&self, y: &YElement) -> Result<Poly> {
        self.alg.check(y)?;
        let mut acc = Poly::zero();
        for (key, c) in &y.terms {
            acc.add_scaled(&self.trace_basis(key)?, c);
        }
        Ok(acc)
    }

    /// Writes `t^k g_w` as `x · g_{n−1} · y` with `x = t^{k'} g_v` and
    /// `y = g_{n−2} ⋯ g_i t_i^{k_n}` in `Y_{d,n−1}`, and returns `x·y`.
    /// When `w` fixes `n`, returns the lower term and `k_n` instead.
    fn split_top(&self, key: &YKey) -> Result<Split> {
        let (k, w) = key;
        let n = w.n();
        let kn = k.get(n);
        let lower = k.drop_last();
        Ok(match w.top_decompose() {
            (v, None) => Split::Fixed(YElement::basis(self.alg.d, lower, v), kn),
            (v, Some(i)) => {
                let mut xy = YElement::basis(self.alg.d, lower, v);
                for j in (i..n - 1).rev() {
                    xy = self.alg.mul_gen(&xy, j)?;
                }
                if kn != 0 {
                    xy = self.alg.mul_t(&xy, i, kn as i64)?;
                }
                Split::Moved(xy)
            }
        })
    }

    pub fn trace_basis(&self, key: &YKey) -> Result<Poly> {
        if let Some(v) = self.memo.read().expect("memo lock").get(key) {
            return Ok(v.clone());
        }
        let value = if key.1.n() == 1 {
            self.chi.value(key.0.get(1)).clone()
        } else {
            match self.split_top(key)? {
                Split::Fixed(lower, kn) => self.chi.value(kn) * &self.trace(&lower)?,
                Split::Moved(xy) => &self.z * &self.trace(&xy)?,
            }
        };
        self.memo.write().expect("memo lock").insert(*key, value.clone());
        Ok(value)
    }

    /// The linear map φ: `φ(x t_n^k) = x_k φ(x)` and `φ(x g_{n−1} y) = g_{n−1} φ(x y)`.
    /// The character must be specialized.
    pub fn phi(&self, y: &YElement) -> Result<YElement> {
        if !self.chi.is_specialized() {
            return Err(Error::SymbolicCharacter);
        }
        self.alg.check(y)?;
        let mut out = YElement::zero(y.n, y.d);
        for (key, c) in &y.terms {
            out.add_scaled(&self.phi_basis(key)?, c);
        }
        Ok(out)
    }

    fn phi_basis(&self, key: &YKey) -> Result<YElement> {
        if let Some(v) = self.phi_memo.read().expect("memo lock").get(key) {
            return Ok(v.clone());
        }
        let n = key.1.n();
        let d = self.alg.d;
        let value = if n == 1 {
            YElement::unit(1, d).scale(self.chi.value(key.0.get(1)))
        } else {
            match self.split_top(key)? {
                Split::Fixed(lower, kn) => self.phi(&lower)?.embed().scale(self.chi.value(kn)),
                Split::Moved(xy) => {
                    let inner = self.phi(&xy)?.embed();
                    self.alg.mul(&YElement::generator(n, d, n - 1)?, &inner)?
                }
            }
        };
        self.phi_memo.write().expect("memo lock").insert(*key, value.clone());
        Ok(value)
    }
}

enum Split {
    Fixed(YElement, u32),
    Moved(YElement),
}

/// γ: `t^k g_w ↦ (∏_j x_{k_j}) G_w`, a homomorphism onto `H_n(u)` only when `|S| = 1`.
pub fn gamma(y: &YElement, sol: &ESolution) -> Result<HElement> {
    if !sol.is_singleton() {
        return Err(Error::NotSingleton(sol.subset().len()));
    }
    if y.d != sol.d() {
        return Err(Error::Mismatch(format!("element has d = {}, solution has d = {}", y.d, sol.d())));
    }
    let mut h = HElement::zero(y.n);
    for ((k, w), c) in &y.terms {
        let mut x = Cyclotomic::one();
        for j in 1..=y.n {
            x = &x * sol.x(k.get(j) as i64);
        }
        h.add_term(*w, &c.scale(&x));
    }
    Ok(h)
}
