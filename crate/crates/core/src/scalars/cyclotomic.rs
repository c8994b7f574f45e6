//! The cyclotomic field Q(ζ_d), stored as residues modulo Φ_d.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Rational, ScalarError};

/// Dense univariate polynomial with integer coefficients, lowest degree first.
pub type IntPoly = Vec<BigInt>;

/// Returns Φ_d by dividing x^d − 1 by every Φ_e with e | d, e < d.
pub fn cyclotomic_polynomial(d: u32) -> IntPoly {
    assert!(d >= 1, "cyclotomic polynomial needs d >= 1");
    field_data(d).phi.clone()
}

fn compute_phi(d: u32) -> IntPoly {
    let mut num: IntPoly = vec![BigInt::zero(); d as usize + 1];
    num[0] = -BigInt::one();
    num[d as usize] = BigInt::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            let phi_e = compute_phi(e);
            num = int_div_exact(&num, &phi_e);
        }
    }
    num
}

/// Exact division of integer polynomials by a monic divisor.
fn int_div_exact(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.clone();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[k + j] -= &c * dc;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

struct FieldData {
    phi: IntPoly,
    degree: usize,
    // x^j mod Φ_d for 0 <= j < 2*degree - 1, as integer vectors of length degree
    powers: Vec<Vec<BigInt>>,
}

type FieldTable = RwLock<HashMap<u32, Arc<FieldData>>>;

fn field_table() -> &'static FieldTable {
    static TABLE: OnceLock<FieldTable> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn field_data(d: u32) -> Arc<FieldData> {
    if let Some(f) = field_table().read().expect("field table poisoned").get(&d) {
        return f.clone();
    }
    let phi = compute_phi(d);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(2 * degree);
    let mut cur = vec![BigInt::zero(); degree];
    cur[0] = BigInt::one();
    for _ in 0..(2 * degree).saturating_sub(1).max(1) {
        powers.push(cur.clone());
        // multiply by x and reduce with x^degree = -Σ phi_j x^j
        let top = cur[degree - 1].clone();
        for j in (1..degree).rev() {
            cur[j] = cur[j - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for j in 0..degree {
                cur[j] -= &top * &phi[j];
            }
        }
    }
    let data = Arc::new(FieldData { phi, degree, powers });
    field_table()
        .write()
        .expect("field table poisoned")
        .entry(d)
        .or_insert(data)
        .clone()
}

/// Euler's totient via the degree of Φ_d.
pub fn totient(d: u32) -> usize {
    field_data(d).degree
}

/// An element of Q(ζ_d).
///
/// Values that happen to be rational are always stored with conductor 1, so
/// rationals from different fields compare equal and mix freely. Two
/// irrational values must share a conductor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    d: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { d: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n.into(), d.into()))
    }

    /// ζ_d^k.
    pub fn root_of_unity(d: u32, k: i64) -> Self {
        assert!(d >= 1);
        let k = k.rem_euclid(d as i64) as usize;
        let fd = field_data(d);
        // reduce x^k by repeated use of the power table
        let mut acc = vec![Rational::zero(); fd.degree];
        acc[0] = Rational::one();
        let mut v = Cyclotomic { d, coeffs: acc };
        let x = Cyclotomic::generator(d);
        for _ in 0..k {
            v = &v * &x;
        }
        v.normalized()
    }

    fn generator(d: u32) -> Self {
        let fd = field_data(d);
        let mut coeffs = vec![Rational::zero(); fd.degree];
        if fd.degree == 1 {
            // Φ_1 = x − 1, Φ_2 = x + 1
            coeffs[0] = Rational::from_integer(-fd.phi[0].clone());
        } else {
            coeffs[1] = Rational::one();
        }
        Cyclotomic { d, coeffs }
    }

    /// Builds an element from coefficients of 1, ζ_d, ζ_d², … (any length; reduced modulo Φ_d).
    pub fn from_coeffs(d: u32, coeffs: &[Rational]) -> Self {
        let x = Cyclotomic::generator(d);
        let mut acc = Cyclotomic::zero();
        let mut pow = Cyclotomic::one();
        for c in coeffs {
            if !c.is_zero() {
                acc = &acc + &(&pow * &Cyclotomic::from_rational(c.clone()));
            }
            pow = &pow * &x;
        }
        acc
    }

    pub fn conductor(&self) -> u32 {
        self.d
    }

    /// Coefficients on the power basis 1, ζ_d, …, ζ_d^{φ(d)−1}.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.d == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    fn normalized(mut self) -> Self {
        if self.d != 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.d = 1;
        }
        self
    }

    fn common_field(&self, other: &Self) -> u32 {
        match (self.d, other.d) {
            (a, b) if a == b => a,
            (1, b) => b,
            (a, 1) => a,
            (a, b) => panic!("mixed cyclotomic fields Q(zeta_{a}) and Q(zeta_{b})"),
        }
    }

    fn widened(&self, d: u32) -> std::borrow::Cow<'_, [Rational]> {
        if self.d == d {
            std::borrow::Cow::Borrowed(&self.coeffs)
        } else {
            let mut v = vec![Rational::zero(); totient(d)];
            v[0] = self.coeffs[0].clone();
            std::borrow::Cow::Owned(v)
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic { d: self.d, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo Φ_d.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyclotomic::from_rational(r.recip()));
        }
        let fd = field_data(self.d);
        let modulus: Vec<Rational> = fd.phi.iter().map(|c| Rational::from_integer(c.clone())).collect();
        let a = trim(self.coeffs.clone());
        let (g, s) = ext_gcd(&a, &modulus);
        // g is a nonzero constant because Φ_d is irreducible
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let coeffs: Vec<Rational> = s.iter().map(|c| c * &ginv).collect();
        Ok(Cyclotomic::from_coeffs(self.d, &coeffs))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclotomic::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign of the leading rational coefficient, used when rendering sums.
    pub(crate) fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_negative())
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        v.push(Rational::zero());
    }
    v
}

fn poly_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() && !poly_is_zero(&r) {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lead_inv;
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &c * bc;
        }
        q[k] = c;
        r = trim(r);
        if r.len() == 1 && db == 0 {
            break;
        }
    }
    (trim(q), r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// Returns (g, s) with s·a ≡ g (mod m).
fn ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0 = vec![Rational::zero()];
    let mut s1 = vec![Rational::one()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.d == 1 && rhs.d == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] + &rhs.coeffs[0]);
        }
        let d = self.common_field(rhs);
        let a = self.widened(d);
        let b = rhs.widened(d);
        let coeffs = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
        Cyclotomic { d, coeffs }.normalized()
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.d == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.d == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let d = self.common_field(rhs);
        let fd = field_data(d);
        let deg = fd.degree;
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut coeffs = vec![Rational::zero(); deg];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, p) in fd.powers[k].iter().enumerate() {
                if !p.is_zero() {
                    coeffs[j] += &c * Rational::from_integer(p.clone());
                }
            }
        }
        Cyclotomic { d, coeffs }.normalized()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { d: self.d, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Rationals print bare (`-3/7`); other values as a polynomial in `zeta_d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return fmt_rational(r, f);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            if k == 0 || !unit {
                fmt_rational(&mag, f)?;
            }
            if k > 0 {
                if !unit {
                    write!(f, "*")?;
                }
                write!(f, "zeta_{}", self.d)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn divisor_product_is_x_to_the_d_minus_one() {
        for d in 1..=12u32 {
            let mut prod = ints(&[1]);
            for e in 1..=d {
                if d % e == 0 {
                    let phi = cyclotomic_polynomial(e);
                    let mut out = vec![BigInt::zero(); prod.len() + phi.len() - 1];
                    for (i, a) in prod.iter().enumerate() {
                        for (j, b) in phi.iter().enumerate() {
                            out[i + j] += a * b;
                        }
                    }
                    prod = out;
                }
            }
            let mut expected = vec![BigInt::zero(); d as usize + 1];
            expected[0] = BigInt::from(-1);
            expected[d as usize] = BigInt::one();
            assert_eq!(prod, expected, "d = {d}");
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Cyclotomic::one().inv().unwrap(), Cyclotomic::one());
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.inv().unwrap(), -&i);
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(w.inv().unwrap(), w2);
        // ζ_3² = −1 − ζ_3
        let expected = &(-Cyclotomic::one()) - &w;
        assert_eq!(w2, expected);
        assert!(Cyclotomic::zero().inv().is_err());
    }

    #[test]
    fn roots_of_unity_have_order_d() {
        for d in 1..=12u32 {
            let z = Cyclotomic::root_of_unity(d, 1);
            assert!(z.pow(d).is_one(), "d = {d}");
            for k in 1..d {
                if k.gcd(&d) == 1 {
                    assert!(!z.pow(k).is_one());
                }
            }
        }
    }

    #[test]
    fn rationals_normalize_across_fields() {
        let w = Cyclotomic::root_of_unity(6, 1);
        let v = Cyclotomic::root_of_unity(6, 5);
        // ζ + ζ^{-1} = 1 for d = 6
        assert_eq!(&w + &v, Cyclotomic::one());
        assert_eq!((&w + &v).conductor(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::from_frac(-3, 7).to_string(), "-3/7");
        let w = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(w.to_string(), "-1 - zeta_3");
    }
}
