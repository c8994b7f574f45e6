//! Sparse multivariate Laurent polynomials over a cyclotomic field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Cyclotomic, RatFun, Rational, ScalarError, Symbol, NUM_SYMBOLS};

/// Exponent vector, one slot per [`Symbol`]. Entries may be negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [i16; NUM_SYMBOLS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_SYMBOLS]);

    pub fn var(s: Symbol, e: i16) -> Self {
        let mut m = Monomial::ONE;
        m.0[s.index()] = e;
        m
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn exponent(&self, s: Symbol) -> i16 {
        self.0[s.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        out
    }

    pub fn inv(&self) -> Monomial {
        let mut out = *self;
        for a in out.0.iter_mut() {
            *a = -*a;
        }
        out
    }
}

// Graded lexicographic, largest first: BTreeMap iteration yields the leading term first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", Symbol::from_index(i))?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A Laurent polynomial: no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Poly::term(c, Monomial::ONE)
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Cyclotomic::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Poly::constant(Cyclotomic::from_frac(n, d))
    }

    pub fn rational(r: Rational) -> Self {
        Poly::constant(Cyclotomic::from_rational(r))
    }

    pub fn symbol(s: Symbol) -> Self {
        Poly::term(Cyclotomic::one(), Monomial::var(s, 1))
    }

    pub fn term(c: Cyclotomic, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Cyclotomic)> {
        self.terms.iter().next()
    }

    /// The constant value, if this polynomial has no symbols.
    pub fn as_constant(&self) -> Option<Cyclotomic> {
        match self.terms.len() {
            0 => Some(Cyclotomic::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Returns `(c, m)` when this is a single term `c·m`.
    pub fn as_monomial(&self) -> Option<(&Cyclotomic, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// Inverse inside the Laurent ring; only single terms are units.
    pub fn try_inv(&self) -> Result<Poly, ScalarError> {
        match self.as_monomial() {
            Some((c, m)) => Ok(Poly::term(c.inv()?, m.inv())),
            None if self.is_zero() => Err(ScalarError::DivisionByZero),
            None => Err(ScalarError::NotInvertible(self.to_string())),
        }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut seen = [false; NUM_SYMBOLS];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    seen[i] = true;
                }
            }
        }
        (0..NUM_SYMBOLS).filter(|&i| seen[i]).map(Symbol::from_index).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += other`.
    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(*m, c);
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Poly, k: &Poly) {
        if k.is_zero() {
            return;
        }
        if k.is_one() {
            return self.add_assign(other);
        }
        for (m1, c1) in &k.terms {
            for (m2, c2) in &other.terms {
                self.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, x)| (m.mul(mono), x.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need a unit.
    pub fn powi(&self, e: i32) -> Result<Poly, ScalarError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.try_inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if let Ok(inv) = divisor.try_inv() {
            return Some(self * &inv);
        }
        let (dm, dc) = divisor.leading()?;
        let dc_inv = dc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        // Laurent division by leading terms terminates when the division is exact;
        // the step cap bounds the non-exact case.
        let cap = 64 + 8 * self.len() * divisor.len();
        for _ in 0..cap {
            let Some((rm, rc)) = rem.leading() else {
                return Some(quot);
            };
            let qm = rm.mul(&dm.inv());
            let qc = rc * &dc_inv;
            let step = Poly::term(qc, qm);
            rem = &rem - &(&step * divisor);
            quot.add_assign(&step);
        }
        None
    }

    /// Simultaneous substitution of symbols by rational functions.
    pub fn substitute(&self, bindings: &super::Bindings) -> Result<RatFun, ScalarError> {
        if bindings.is_empty() {
            return Ok(RatFun::from(self.clone()));
        }
        // Split each monomial into a bound part (substituted) and a free part (kept).
        let mut grouped: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut bound = Monomial::ONE;
            let mut free = *m;
            for (s, _) in bindings.iter() {
                let i = s.index();
                bound.0[i] = m.0[i];
                free.0[i] = 0;
            }
            grouped.entry(bound).or_default().add_term(free, c);
        }
        let mut powers = PowerCache::new(bindings);
        let mut acc = RatFun::zero();
        for (bound, free_part) in grouped {
            let mut value = RatFun::from(free_part);
            for (i, &e) in bound.0.iter().enumerate() {
                if e != 0 {
                    value = &value * &powers.get(Symbol::from_index(i), e)?;
                }
            }
            acc = &acc + &value;
        }
        Ok(acc)
    }

    /// Substitution where every binding is itself a Laurent polynomial and only
    /// monomial bindings appear with negative exponents.
    pub fn substitute_poly(&self, bindings: &[(Symbol, Poly)]) -> Result<Poly, ScalarError> {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut free = *m;
            let mut value = Poly::constant(c.clone());
            for (s, p) in bindings {
                let e = m.exponent(*s);
                free.0[s.index()] = 0;
                if e != 0 {
                    value = &value * &p.powi(e as i32)?;
                }
            }
            acc.add_scaled(&value, &Poly::term(Cyclotomic::one(), free));
        }
        Ok(acc)
    }
}

struct PowerCache<'a> {
    bindings: &'a super::Bindings,
    cache: BTreeMap<(Symbol, i16), RatFun>,
}

impl<'a> PowerCache<'a> {
    fn new(bindings: &'a super::Bindings) -> Self {
        PowerCache { bindings, cache: BTreeMap::new() }
    }

    fn get(&mut self, s: Symbol, e: i16) -> Result<RatFun, ScalarError> {
        if let Some(v) = self.cache.get(&(s, e)) {
            return Ok(v.clone());
        }
        let base = self.bindings.get(s).expect("bound symbol");
        let v = base.powi(e as i32)?;
        self.cache.insert((s, e), v.clone());
        Ok(v)
    }
}

impl From<Cyclotomic> for Poly {
    fn from(c: Cyclotomic) -> Self {
        Poly::constant(c)
    }
}

impl From<Symbol> for Poly {
    fn from(s: Symbol) -> Self {
        Poly::symbol(s)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        out.add_assign(small);
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        out.add_scaled(rhs, self);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $tr:ident, $f:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                (&self).$f(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Poly, Add, add);
forward_owned_binop!(Poly, Sub, sub);
forward_owned_binop!(Poly, Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_rational();
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let coeff = if mag.is_rational() { mag.to_string() } else { format!("({mag})") };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
