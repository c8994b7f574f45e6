//! The Iwahori-Hecke algebra `H_n(q)` on the standard basis `{G_w}` and its
//! Ocneanu trace.

use std::fmt;
use std::sync::RwLock;

use rustc_hash::FxHashMap;

use crate::braid::BraidWord;
use crate::scalars::{Poly, Symbol};
use crate::symgroup::Permutation;
use crate::{Error, Result};

/// A sparse combination of basis elements `G_w`, `w ∈ S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct HElement {
    n: usize,
    terms: FxHashMap<Permutation, Poly>,
}

impl HElement {
    pub fn zero(n: usize) -> Self {
        HElement { n, terms: FxHashMap::default() }
    }

    pub fn unit(n: usize) -> Self {
        HElement::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        let mut h = HElement::zero(w.n());
        h.terms.insert(w, Poly::one());
        h
    }

    pub fn generator(n: usize, i: usize) -> Result<Self> {
        check_index(n, i)?;
        Ok(HElement::basis(Permutation::transposition(n, i)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> Poly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms sorted by length, then one-line notation.
    pub fn terms(&self) -> Vec<(Permutation, Poly)> {
        let mut v: Vec<(Permutation, Poly)> = self.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        v.sort_by_key(|(w, _)| (w.length(), *w));
        v
    }

    pub fn add_term(&mut self, w: Permutation, c: &Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                x.add_assign(c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &HElement) -> HElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c);
        }
        out
    }

    pub fn scale(&self, k: &Poly) -> HElement {
        let mut out = HElement::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(*w, &(c * k));
        }
        out
    }

    /// Views the element inside `H_{n+1}`.
    pub fn embed(&self) -> HElement {
        HElement { n: self.n + 1, terms: self.terms.iter().map(|(w, c)| (w.embed(), c.clone())).collect() }
    }

    /// Substitutes into every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Result<Poly>) -> Result<HElement> {
        let mut out = HElement::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(*w, &f(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms().iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*G{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HElement {
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

/// Structure data of `H_n(q)`: the parameter and its inverse when it is a unit.
#[derive(Clone, Debug)]
pub struct Hecke {
    q: Poly,
    q_inv: Option<Poly>,
}

impl Hecke {
    pub fn new(q: Poly) -> Self {
        let q_inv = q.try_inv().ok();
        Hecke { q, q_inv }
    }

    /// `q` left as the indeterminate.
    pub fn generic() -> Self {
        Hecke::new(Poly::symbol(Symbol::Q))
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    fn q_inv(&self) -> Result<&Poly> {
        self.q_inv
            .as_ref()
            .ok_or_else(|| crate::scalars::ScalarError::NotInvertible(self.q.to_string()).into())
    }

    /// `h · G_i`.
    pub fn mul_gen(&self, h: &HElement, i: usize) -> Result<HElement> {
        check_index(h.n, i)?;
        let q_minus_1 = &self.q - &Poly::one();
        let mut out = HElement::zero(h.n);
        for (w, c) in &h.terms {
            let ws = w.mul_s(i);
            if w.has_right_descent(i) {
                out.add_term(ws, &(c * &self.q));
                out.add_term(*w, &(c * &q_minus_1));
            } else {
                out.add_term(ws, c);
            }
        }
        Ok(out)
    }

    /// `h · G_i^{-1}` with `G_i^{-1} = q^{-1} G_i + (q^{-1} − 1)`.
    pub fn mul_gen_inv(&self, h: &HElement, i: usize) -> Result<HElement> {
        let qi = self.q_inv()?;
        let hg = self.mul_gen(h, i)?;
        Ok(hg.scale(qi).add(&h.scale(&(qi - &Poly::one()))))
    }

    /// Right multiplication by a braid letter.
    pub fn mul_letter(&self, h: &HElement, letter: i32) -> Result<HElement> {
        let i = letter.unsigned_abs() as usize;
        if letter > 0 {
            self.mul_gen(h, i)
        } else {
            self.mul_gen_inv(h, i)
        }
    }

    pub fn mul(&self, a: &HElement, b: &HElement) -> Result<HElement> {
        if a.n != b.n {
            return Err(Error::Mismatch(format!("H_{} vs H_{}", a.n, b.n)));
        }
        let mut out = HElement::zero(a.n);
        for (w, c) in &b.terms {
            let mut acc = a.scale(c);
            for i in w.reduced_word() {
                acc = self.mul_gen(&acc, i)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// The image of a braid word.
    pub fn from_braid(&self, word: &BraidWord) -> Result<HElement> {
        let mut h = HElement::unit(word.n());
        for &l in word.letters() {
            h = self.mul_letter(&h, l)?;
        }
        Ok(h)
    }

    /// `G_i^m` from the closed formulas for even and odd `m`.
    pub fn power(&self, n: usize, i: usize, m: u32) -> Result<HElement> {
        check_index(n, i)?;
        let qm = self.q.pow(m);
        let q1 = &self.q + &Poly::one();
        let (num, shift) = if m.is_multiple_of(2) { (&qm - &Poly::one(), 1) } else { (&qm + &Poly::one(), -1) };
        let c = num
            .div_exact(&q1)
            .ok_or_else(|| Error::Invalid(format!("q + 1 = {q1} does not divide {num}")))?;
        let mut h = HElement::zero(n);
        h.add_term(Permutation::transposition(n, i), &c);
        h.add_term(Permutation::identity(n), &(&c + &Poly::int(shift)));
        Ok(h)
    }
}

/// The Ocneanu trace with parameter `ζ`, memoized on basis elements.
pub struct OcneanuTrace {
    hecke: Hecke,
    zeta: Poly,
    memo: RwLock<FxHashMap<Permutation, Poly>>,
}

impl OcneanuTrace {
    pub fn new(hecke: Hecke, zeta: Poly) -> Self {
        OcneanuTrace { hecke, zeta, memo: RwLock::new(FxHashMap::default()) }
    }

    /// `q` and `ζ` both indeterminates.
    pub fn generic() -> Self {
        OcneanuTrace::new(Hecke::generic(), Poly::symbol(Symbol::Zeta))
    }

    pub fn hecke(&self) -> &Hecke {
        &self.hecke
    }

    pub fn zeta(&self) -> &Poly {
        &self.zeta
    }

    pub fn trace(&self, h: &HElement) -> Result<Poly> {
        let mut acc = Poly::zero();
        for (w, c) in &h.terms {
            acc.add_scaled(&self.trace_basis(w)?, c);
        }
        Ok(acc)
    }

    /// `τ(G_w)`: peel off the top coset factor `G_{n−1}⋯G_i` and use
    /// `τ(x G_{n−1} y) = ζ τ(xy)` with `x = G_v`, `y = G_{n−2}⋯G_i`.
    pub fn trace_basis(&self, w: &Permutation) -> Result<Poly> {
        if let Some(v) = self.memo.read().expect("memo lock").get(w) {
            return Ok(v.clone());
        }
        let n = w.n();
        let value = if n <= 1 {
            Poly::one()
        } else {
            match w.top_decompose() {
                (v, None) => self.trace_basis(&v)?,
                (v, Some(i)) => {
                    let mut xy = HElement::basis(v);
                    for k in (i..n - 1).rev() {
                        xy = self.hecke.mul_gen(&xy, k)?;
                    }
                    &self.zeta * &self.trace(&xy)?
                }
            }
        };
        self.memo.write().expect("memo lock").insert(*w, value.clone());
        Ok(value)
    }
}
