use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::forward_owned_binop;
use super::{Cyclotomic, Poly, ScalarError, Symbol};

/// A quotient of Laurent polynomials.
///
/// Not kept in lowest terms: equality is decided by cross-multiplication.
/// Monomial denominators are folded into the numerator and other denominators
/// are made monic, which keeps coefficient growth in check.
#[derive(Clone)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RatFun { num, den }.normalized())
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: Poly::one(), den: Poly::one() }
    }

    pub fn int(n: i64) -> Self {
        Poly::int(n).into()
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Poly::frac(n, d).into()
    }

    pub fn symbol(s: Symbol) -> Self {
        Poly::symbol(s).into()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The value as a Laurent polynomial, when the denominator divides the numerator.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.div_exact(&self.den)
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = Poly::one();
            return self;
        }
        if let Ok(inv) = self.den.try_inv() {
            self.num = &self.num * &inv;
            self.den = Poly::one();
            return self;
        }
        if let Some((_, c)) = self.den.leading() {
            if !c.is_one() {
                let k = c.inv().expect("nonzero leading coefficient");
                self.num = self.num.scale(&k);
                self.den = self.den.scale(&k);
            }
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = Poly::one();
        }
        self
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RatFun { num: self.den.clone(), den: self.num.clone() }.normalized())
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun { num: self.num.pow(e), den: self.den.pow(e) }.normalized()
    }

    pub fn powi(&self, e: i32) -> Result<Self, ScalarError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Simultaneous substitution; unbound symbols are left alone.
    pub fn substitute(&self, bindings: &Bindings) -> Result<RatFun, ScalarError> {
        let num = self.num.substitute(bindings)?;
        let den = self.den.substitute(bindings)?;
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator(self.den.to_string()));
        }
        num.checked_div(&den)
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut s = self.num.symbols();
        s.extend(self.den.symbols());
        s.sort();
        s.dedup();
        s
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }
}

impl From<Cyclotomic> for RatFun {
    fn from(c: Cyclotomic) -> Self {
        Poly::constant(c).into()
    }
}

impl From<Symbol> for RatFun {
    fn from(s: Symbol) -> Self {
        RatFun::symbol(s)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &'a RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun { num: &self.num + &rhs.num, den: self.den.clone() }.normalized();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun { num, den: &self.den * &rhs.den }.normalized()
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &'a RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &'a RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.normalized()
    }
}

impl<'a> Div<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    /// Panics on division by zero; see [`RatFun::checked_div`].
    fn div(self, rhs: &'a RatFun) -> RatFun {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

forward_owned_binop!(RatFun, Add, add);
forward_owned_binop!(RatFun, Sub, sub);
forward_owned_binop!(RatFun, Mul, mul);
forward_owned_binop!(RatFun, Div, div);

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A symbol-to-value assignment used by [`RatFun::substitute`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Bindings {
    map: BTreeMap<Symbol, RatFun>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, s: Symbol, v: impl Into<RatFun>) -> Self {
        self.insert(s, v);
        self
    }

    pub fn insert(&mut self, s: Symbol, v: impl Into<RatFun>) {
        self.map.insert(s, v.into());
    }

    pub fn get(&self, s: Symbol) -> Option<&RatFun> {
        self.map.get(&s)
    }

    pub fn remove(&mut self, s: Symbol) -> Option<RatFun> {
        self.map.remove(&s)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &RatFun)> {
        self.map.iter()
    }

    /// Value of `s` after the bindings: the bound value or the symbol itself.
    pub fn value_of(&self, s: Symbol) -> RatFun {
        self.map.get(&s).cloned().unwrap_or_else(|| RatFun::symbol(s))
    }

    /// Substitutes bindings into each other until no bound symbol appears on a
    /// right-hand side, so that e.g. `{zeta ↦ -z, z ↦ u}` becomes `{zeta ↦ -u, z ↦ u}`.
    pub fn resolved(&self) -> Result<Bindings, ScalarError> {
        let mut cur = self.clone();
        for _ in 0..=self.map.len() {
            let bound: Vec<Symbol> = cur.map.keys().copied().collect();
            let dirty = cur.map.values().any(|v| v.symbols().iter().any(|s| bound.contains(s)));
            if !dirty {
                return Ok(cur);
            }
            let mut next = Bindings::new();
            for (s, v) in &cur.map {
                next.map.insert(*s, v.substitute(&cur)?);
            }
            cur = next;
        }
        Err(ScalarError::CyclicBindings)
    }
}
