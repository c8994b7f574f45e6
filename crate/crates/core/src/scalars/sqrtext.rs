use std::fmt;
use std::ops::Add;

use super::{RatFun, ScalarError};

/// `even + odd·r` in `K[r]/(r² − radicand)` where `K` is the rational function field.
#[derive(Clone, Debug)]
pub struct SqrtExt {
    pub even: RatFun,
    pub odd: RatFun,
    pub radicand: RatFun,
}

impl SqrtExt {
    pub fn new(even: RatFun, odd: RatFun, radicand: RatFun) -> Self {
        SqrtExt { even, odd, radicand }
    }

    pub fn scalar(v: RatFun, radicand: RatFun) -> Self {
        SqrtExt { even: v, odd: RatFun::zero(), radicand }
    }

    /// The formal root `r` itself.
    pub fn root(radicand: RatFun) -> Self {
        SqrtExt { even: RatFun::zero(), odd: RatFun::one(), radicand }
    }

    pub fn one(radicand: RatFun) -> Self {
        SqrtExt::scalar(RatFun::one(), radicand)
    }

    fn check_radicand(&self, other: &SqrtExt) -> Result<(), ScalarError> {
        if self.radicand == other.radicand {
            Ok(())
        } else {
            Err(ScalarError::RadicandMismatch(self.radicand.to_string(), other.radicand.to_string()))
        }
    }

    pub fn mul(&self, other: &SqrtExt) -> Result<SqrtExt, ScalarError> {
        self.check_radicand(other)?;
        let even = &(&self.even * &other.even) + &(&(&self.odd * &other.odd) * &self.radicand);
        let odd = &(&self.even * &other.odd) + &(&self.odd * &other.even);
        Ok(SqrtExt { even, odd, radicand: self.radicand.clone() })
    }

    pub fn scale(&self, k: &RatFun) -> SqrtExt {
        SqrtExt { even: &self.even * k, odd: &self.odd * k, radicand: self.radicand.clone() }
    }

    /// even² − λ·odd²
    pub fn norm(&self) -> RatFun {
        &(&self.even * &self.even) - &(&(&self.odd * &self.odd) * &self.radicand)
    }

    pub fn inv(&self) -> Result<SqrtExt, ScalarError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ScalarError::NotInvertible(self.to_string()));
        }
        let k = n.inv()?;
        Ok(SqrtExt { even: &self.even * &k, odd: -&(&self.odd * &k), radicand: self.radicand.clone() })
    }

    pub fn pow(&self, m: i32) -> Result<SqrtExt, ScalarError> {
        let base = if m < 0 { self.inv()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = SqrtExt::one(self.radicand.clone());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// `r^m` computed directly: `r^{2k} = λ^k`, `r^{2k+1} = λ^k·r`.
    pub fn root_pow(radicand: &RatFun, m: i32) -> Result<SqrtExt, ScalarError> {
        let k = m.div_euclid(2);
        let lam_k = radicand.powi(k)?;
        Ok(if m.rem_euclid(2) == 0 {
            SqrtExt::scalar(lam_k, radicand.clone())
        } else {
            SqrtExt::new(RatFun::zero(), lam_k, radicand.clone())
        })
    }

    /// Re-expresses this value over `new_radicand`, identifying the old root with
    /// `scale` times the new one. Requires `radicand = scale²·new_radicand`.
    pub fn rebase(&self, new_radicand: &RatFun, scale: &RatFun) -> Result<SqrtExt, ScalarError> {
        if self.radicand != &(scale * scale) * new_radicand {
            return Err(ScalarError::RadicandMismatch(self.radicand.to_string(), new_radicand.to_string()));
        }
        Ok(SqrtExt { even: self.even.clone(), odd: &self.odd * scale, radicand: new_radicand.clone() })
    }
}

impl PartialEq for SqrtExt {
    fn eq(&self, other: &Self) -> bool {
        self.radicand == other.radicand && self.even == other.even && self.odd == other.odd
    }
}

impl Add for &SqrtExt {
    type Output = SqrtExt;
    /// Panics on mismatched radicands.
    fn add(self, rhs: &SqrtExt) -> SqrtExt {
        self.check_radicand(rhs).expect("adding values over different radicands");
        SqrtExt { even: &self.even + &rhs.even, odd: &self.odd + &rhs.odd, radicand: self.radicand.clone() }
    }
}

impl fmt::Display for SqrtExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{}", self.even)?,
            (true, false) => write!(f, "({})*r", self.odd)?,
            (false, false) => write!(f, "{} + ({})*r", self.even, self.odd)?,
        }
        write!(f, "  [r^2 = {}]", self.radicand)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Symbol;

    fn lam() -> RatFun {
        RatFun::symbol(Symbol::Q) + RatFun::int(2)
    }

    #[test]
    fn defining_relation() {
        let r = SqrtExt::root(lam());
        let rr = r.mul(&r).unwrap();
        assert_eq!(rr, SqrtExt::scalar(lam(), lam()));
        let r3 = r.pow(3).unwrap();
        assert_eq!(r3, SqrtExt::new(RatFun::zero(), lam(), lam()));
        assert_eq!(r3, SqrtExt::root_pow(&lam(), 3).unwrap());
    }

    #[test]
    fn difference_of_squares() {
        let one = SqrtExt::one(lam());
        let r = SqrtExt::root(lam());
        let a = &one + &r;
        let b = &one + &r.scale(&RatFun::int(-1));
        let p = a.mul(&b).unwrap();
        assert_eq!(p, SqrtExt::scalar(RatFun::one() - lam(), lam()));
    }

    #[test]
    fn negative_powers_and_mismatch() {
        let r = SqrtExt::root(lam());
        let inv = r.pow(-1).unwrap();
        assert!(inv.mul(&r).unwrap() == SqrtExt::one(lam()));
        assert_eq!(inv, SqrtExt::root_pow(&lam(), -1).unwrap());
        let other = SqrtExt::root(RatFun::int(5));
        assert!(r.mul(&other).is_err());
        assert!(SqrtExt::scalar(RatFun::zero(), lam()).pow(-1).is_err());
    }
}
