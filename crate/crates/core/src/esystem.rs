//! Solutions of the E-system, one for each non-empty subset `S ⊆ Z/dZ`.

use std::fmt;

use crate::scalars::{Cyclotomic, Rational};
use crate::{Error, Result};

/// A solution `(x_0 = 1, x_1, …, x_{d−1})` attached to a subset `S`.
#[derive(Clone, Debug, PartialEq)]
pub struct ESolution {
    d: u32,
    subset: Vec<u32>,
    x: Vec<Cyclotomic>,
}

impl ESolution {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn subset(&self) -> &[u32] {
        &self.subset
    }

    /// `x_m` for `m` taken mod `d`.
    pub fn x(&self, m: i64) -> &Cyclotomic {
        &self.x[m.rem_euclid(self.d as i64) as usize]
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.x
    }

    pub fn is_singleton(&self) -> bool {
        self.subset.len() == 1
    }

    /// `E = 1/|S|`.
    pub fn e_value(&self) -> Rational {
        Rational::new(1.into(), (self.subset.len() as i64).into())
    }
}

impl fmt::Display for ESolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.subset.iter().map(|k| k.to_string()).collect();
        write!(f, "d={} S={{{}}} E={}", self.d, s.join(","), self.e_value())?;
        for (m, x) in self.x.iter().enumerate().skip(1) {
            write!(f, " x_{m}={x}")?;
        }
        Ok(())
    }
}

/// Parses `0,2,3`: residues reduced mod `d`, duplicates rejected.
pub fn parse_subset(text: &str, d: u32) -> Result<Vec<u32>> {
    if d == 0 {
        return Err(Error::Subset("d must be positive".into()));
    }
    let mut out = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        let k: i64 = tok.parse().map_err(|_| Error::Subset(format!("bad residue `{tok}`")))?;
        let k = k.rem_euclid(d as i64) as u32;
        if out.contains(&k) {
            return Err(Error::Subset(format!("residue {k} repeated")));
        }
        out.push(k);
    }
    out.sort_unstable();
    Ok(out)
}

/// Every non-empty subset of `Z/dZ`, ordered by bitmask.
pub fn all_subsets(d: u32) -> Vec<Vec<u32>> {
    (1u32..1 << d).map(|mask| (0..d).filter(|k| mask >> k & 1 == 1).collect()).collect()
}

/// `x_m = (1/|S|) Σ_{k∈S} ζ_d^{km}`, returned only after [`verify`] accepts it.
pub fn solve(d: u32, subset: &[u32]) -> Result<ESolution> {
    if d == 0 {
        return Err(Error::Subset("d must be positive".into()));
    }
    let mut s: Vec<u32> = subset.iter().map(|k| k % d).collect();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() {
        return Err(Error::Subset("S must be non-empty".into()));
    }
    if s.len() != subset.len() {
        return Err(Error::Subset("residues repeated".into()));
    }
    let inv = Rational::new(1.into(), (s.len() as i64).into());
    let x: Vec<Cyclotomic> = (0..d as i64)
        .map(|m| {
            let mut acc = Cyclotomic::zero();
            for &k in &s {
                acc = &acc + &Cyclotomic::root_of_unity(d, k as i64 * m);
            }
            acc.scale(&inv)
        })
        .collect();
    if !verify(&x) {
        return Err(Error::Invalid(format!("candidate for S = {s:?} fails the E-system")));
    }
    Ok(ESolution { d, subset: s, x })
}

/// `E^{(m)} = Σ_s x_{m+s} x_{d−s}` for `m = 0..d−1`, indices mod `d`.
pub fn e_sums(x: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let d = x.len();
    (0..d)
        .map(|m| {
            let mut acc = Cyclotomic::zero();
            for s in 0..d {
                acc = &acc + &(&x[(m + s) % d] * &x[(d - s) % d]);
            }
            acc
        })
        .collect()
}

/// True iff `Σ_s x_{m+s} x_{d−s} = x_m Σ_s x_s x_{d−s}` for every `m = 1..d−1`.
pub fn verify(x: &[Cyclotomic]) -> bool {
    if x.is_empty() || !x[0].is_one() {
        return false;
    }
    let sums = e_sums(x);
    (1..x.len()).all(|m| sums[m] == &x[m] * &sums[0])
}

/// `(1/d) Σ_s x_s x_{d−s}`.
pub fn e_from_values(x: &[Cyclotomic]) -> Cyclotomic {
    let d = x.len() as i64;
    e_sums(x)[0].scale(&Rational::new(1.into(), d.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn small_cases() {
        let s = solve(1, &[0]).unwrap();
        assert_eq!(s.values(), &[Cyclotomic::one()]);
        assert_eq!(s.e_value(), frac(1, 1));
        let s = solve(2, &[0, 1]).unwrap();
        assert!(s.x(1).is_zero());
        assert_eq!(s.e_value(), frac(1, 2));
        for k in 0..5 {
            let s = solve(5, &[k]).unwrap();
            for m in 0..5 {
                assert_eq!(s.x(m as i64), &Cyclotomic::root_of_unity(5, (k * m) as i64));
            }
        }
    }

    #[test]
    fn verify_rejects_and_accepts() {
        // E = (1 + 25)/2 = 13, E^(1) = 5, x_1·E = 65
        assert!(!verify(&[Cyclotomic::one(), Cyclotomic::from_int(5)]));
        assert!(verify(&vec![Cyclotomic::one(); 3]));
    }

    #[test]
    fn e_values() {
        assert_eq!(solve(4, &[0, 1, 2, 3]).unwrap().e_value(), frac(1, 4));
        assert_eq!(solve(3, &[2]).unwrap().e_value(), frac(1, 1));
        let s = solve(6, &[1, 3]).unwrap();
        assert_eq!(s.e_value(), frac(1, 2));
        assert_eq!(e_from_values(s.values()), Cyclotomic::from_frac(1, 2));
    }

    #[test]
    fn every_subset_up_to_eight() {
        for d in 1..=8 {
            let subsets = all_subsets(d);
            assert_eq!(subsets.len(), (1 << d) - 1);
            for s in subsets {
                let sol = solve(d, &s).unwrap();
                assert!(verify(sol.values()));
                assert_eq!(e_from_values(sol.values()), Cyclotomic::from_rational(sol.e_value()));
            }
        }
    }

    #[test]
    fn multiplicativity_only_for_singletons() {
        for d in 2..=5 {
            for s in all_subsets(d) {
                let sol = solve(d, &s).unwrap();
                let mult = (0..d as i64).all(|k| (0..d as i64).all(|l| sol.x(k + l) == &(sol.x(k) * sol.x(l))));
                assert_eq!(mult, s.len() == 1, "d={d} S={s:?}");
            }
        }
    }

    #[test]
    fn subset_parsing() {
        assert_eq!(parse_subset("0,2,3", 4).unwrap(), vec![0, 2, 3]);
        assert_eq!(parse_subset("5, -1", 4).unwrap(), vec![1, 3]);
        assert!(parse_subset("1,5", 4).is_err());
        assert!(parse_subset("a", 4).is_err());
        assert!(solve(3, &[]).is_err());
    }
}
