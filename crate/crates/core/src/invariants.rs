//! Normalized invariants `P` and `Δ_S` of closed braids, the table of
//! parameter cases and the comparison harness.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::corpus::random_word;
use crate::esystem::ESolution;
use crate::hecke::{Hecke, OcneanuTrace};
use crate::scalars::{Bindings, Poly, RatFun, SqrtExt, Symbol};
use crate::yokonuma::{FramingCharacter, JuyumayaTrace, Yokonuma};
use crate::{Error, Result};

/// `λ_H = (ζ + 1 − q)/(qζ)`.
pub fn lambda_h(q: &RatFun, zeta: &RatFun) -> Result<RatFun> {
    let num = zeta + &(&RatFun::one() - q);
    Ok(num.checked_div(&(q * zeta))?)
}

/// `λ_Y = (z + (1 − u)E)/(uz)`.
pub fn lambda_y(u: &RatFun, z: &RatFun, e: &RatFun) -> Result<RatFun> {
    let num = z + &(&(&RatFun::one() - u) * e);
    Ok(num.checked_div(&(u * z))?)
}

/// `D = 1/(c·r) = r/(cλ)` where `r² = λ`.
fn d_value(c: &RatFun, lambda: RatFun) -> Result<SqrtExt> {
    let odd = (c * &lambda).inv()?;
    Ok(SqrtExt::new(RatFun::zero(), odd, lambda))
}

/// `D_H = 1/(ζ√λ_H)`.
pub fn d_h(q: &RatFun, zeta: &RatFun) -> Result<SqrtExt> {
    d_value(zeta, lambda_h(q, zeta)?)
}

/// `D_Y = 1/(z√λ_Y)`.
pub fn d_y(u: &RatFun, z: &RatFun, e: &RatFun) -> Result<SqrtExt> {
    d_value(z, lambda_y(u, z, e)?)
}

/// `D^{n−1}(√λ)^ε·t = c^{1−n}·r^{ε−n+1}·t`.
fn normalize(c: &RatFun, lambda: &RatFun, n: usize, epsilon: i64, t: &RatFun) -> Result<SqrtExt> {
    let shift = n as i64 - 1;
    let root = SqrtExt::root_pow(lambda, (epsilon - shift) as i32)?;
    Ok(root.scale(&(t * &c.powi(-shift as i32)?)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InvariantKind {
    #[serde(rename = "P")]
    Homflypt,
    #[serde(rename = "Delta")]
    Delta,
}

/// An invariant value together with the braid data it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    pub n: usize,
    pub epsilon: i64,
    pub value: SqrtExt,
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The five parameters after bindings, with `E` taken from a solution when one is given.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub q: RatFun,
    pub zeta: RatFun,
    pub u: RatFun,
    pub z: RatFun,
    pub e: RatFun,
}

impl Params {
    pub fn generic() -> Self {
        Params {
            q: Symbol::Q.into(),
            zeta: Symbol::Zeta.into(),
            u: Symbol::U.into(),
            z: Symbol::Z.into(),
            e: Symbol::E.into(),
        }
    }

    /// Resolves chained bindings, then fixes `E` to `e` if given.
    pub fn from_bindings(bindings: &Bindings, e: Option<RatFun>) -> Result<Self> {
        let mut b = bindings.resolved()?;
        if let Some(e) = e {
            if let Some(bound) = b.get(Symbol::E) {
                if bound != &e {
                    return Err(Error::Invalid(format!("E is bound to {bound} but the solution has E = {e}")));
                }
            }
            let fix = Bindings::new().with(Symbol::E, e.clone());
            let mut next = Bindings::new();
            for (s, v) in b.iter() {
                next.insert(*s, v.substitute(&fix)?);
            }
            next.insert(Symbol::E, e);
            b = next;
        }
        Ok(Params {
            q: b.value_of(Symbol::Q),
            zeta: b.value_of(Symbol::Zeta),
            u: b.value_of(Symbol::U),
            z: b.value_of(Symbol::Z),
            e: b.value_of(Symbol::E),
        })
    }

    pub fn lambda_h(&self) -> Result<RatFun> {
        lambda_h(&self.q, &self.zeta)
    }

    pub fn lambda_y(&self) -> Result<RatFun> {
        lambda_y(&self.u, &self.z, &self.e)
    }

    /// `ζ²λ_H = z²λ_Y`, equivalently `D_H² = D_Y²`.
    pub fn d_squares_equal(&self) -> Result<bool> {
        let lhs = &(&self.zeta * &self.zeta) * &self.lambda_h()?;
        let rhs = &(&self.z * &self.z) * &self.lambda_y()?;
        Ok(lhs == rhs)
    }

    /// `(D_H/D_Y)² = z²λ_Y/(ζ²λ_H)`.
    pub fn c2_squared(&self) -> Result<RatFun> {
        let num = &(&self.z * &self.z) * &self.lambda_y()?;
        let den = &(&self.zeta * &self.zeta) * &self.lambda_h()?;
        Ok(num.checked_div(&den)?)
    }
}

/// Evaluates `τ ∘ π` and `P` at given values of `q` and `ζ`.
///
/// When both values are Laurent polynomials with `q` invertible the algebra is
/// built over them directly, otherwise the trace is computed with `q, ζ`
/// indeterminate and specialized afterwards.
pub struct HomflyptEvaluator {
    q: RatFun,
    zeta: RatFun,
    trace: OcneanuTrace,
    post: Option<Bindings>,
}

impl HomflyptEvaluator {
    pub fn new(q: &RatFun, zeta: &RatFun) -> Self {
        let direct = match (q.as_poly(), zeta.as_poly()) {
            (Some(qp), Some(zp)) if qp.try_inv().is_ok() => Some(OcneanuTrace::new(Hecke::new(qp), zp)),
            _ => None,
        };
        let (trace, post) = match direct {
            Some(t) => (t, None),
            None => (
                OcneanuTrace::generic(),
                Some(Bindings::new().with(Symbol::Q, q.clone()).with(Symbol::Zeta, zeta.clone())),
            ),
        };
        HomflyptEvaluator { q: q.clone(), zeta: zeta.clone(), trace, post }
    }

    pub fn generic() -> Self {
        HomflyptEvaluator::new(&Symbol::Q.into(), &Symbol::Zeta.into())
    }

    pub fn tau(&self, alpha: &BraidWord) -> Result<RatFun> {
        let h = self.trace.hecke().from_braid(alpha)?;
        let t = self.trace.trace(&h)?;
        match &self.post {
            None => Ok(t.into()),
            Some(b) => Ok(t.substitute(b)?),
        }
    }

    pub fn lambda(&self) -> Result<RatFun> {
        lambda_h(&self.q, &self.zeta)
    }

    pub fn homflypt(&self, alpha: &BraidWord) -> Result<InvariantValue> {
        let t = self.tau(alpha)?;
        let value = normalize(&self.zeta, &self.lambda()?, alpha.n(), alpha.epsilon(), &t)?;
        Ok(InvariantValue { kind: InvariantKind::Homflypt, n: alpha.n(), epsilon: alpha.epsilon(), value })
    }
}

/// Evaluates `tr_S ∘ δ` and `Δ_S` at given values of `u` and `z`, framings specialized by a solution.
pub struct DeltaEvaluator {
    u: RatFun,
    z: RatFun,
    e: RatFun,
    trace: JuyumayaTrace,
    post: Option<Bindings>,
}

impl DeltaEvaluator {
    pub fn new(u: &RatFun, z: &RatFun, sol: &ESolution) -> Result<Self> {
        let d = sol.d();
        let chi = FramingCharacter::from_solution(sol);
        let e: RatFun = chi.e().into();
        let direct = match (u.as_poly(), z.as_poly()) {
            (Some(up), Some(zp)) if up.try_inv().is_ok() => Some(JuyumayaTrace::new(Yokonuma::new(d, up), zp, chi.clone())?),
            _ => None,
        };
        let (trace, post) = match direct {
            Some(t) => (t, None),
            None => (
                JuyumayaTrace::new(Yokonuma::generic(d), Poly::symbol(Symbol::Z), chi)?,
                Some(Bindings::new().with(Symbol::U, u.clone()).with(Symbol::Z, z.clone())),
            ),
        };
        Ok(DeltaEvaluator { u: u.clone(), z: z.clone(), e, trace, post })
    }

    pub fn generic(sol: &ESolution) -> Result<Self> {
        DeltaEvaluator::new(&Symbol::U.into(), &Symbol::Z.into(), sol)
    }

    pub fn tr(&self, alpha: &BraidWord) -> Result<RatFun> {
        let y = self.trace.algebra().from_braid(alpha)?;
        let t = self.trace.trace(&y)?;
        match &self.post {
            None => Ok(t.into()),
            Some(b) => Ok(t.substitute(b)?),
        }
    }

    pub fn lambda(&self) -> Result<RatFun> {
        lambda_y(&self.u, &self.z, &self.e)
    }

    pub fn delta_s(&self, alpha: &BraidWord) -> Result<InvariantValue> {
        let t = self.tr(alpha)?;
        let value = normalize(&self.z, &self.lambda()?, alpha.n(), alpha.epsilon(), &t)?;
        Ok(InvariantValue { kind: InvariantKind::Delta, n: alpha.n(), epsilon: alpha.epsilon(), value })
    }
}

/// `P(α̂)` with `q` and `ζ` indeterminate.
pub fn homflypt(alpha: &BraidWord) -> Result<InvariantValue> {
    HomflyptEvaluator::generic().homflypt(alpha)
}

/// `Δ_S(α̂)` with `u` and `z` indeterminate.
pub fn delta_s(alpha: &BraidWord, sol: &ESolution) -> Result<InvariantValue> {
    DeltaEvaluator::generic(sol)?.delta_s(alpha)
}

/// Decides `P = Δ_S` for values over `λ_H` and `λ_Y`.
///
/// When `ζ²λ_H = z²λ_Y` the root of `λ_H` is identified with `(z/ζ)` times the
/// root of `λ_Y`, the branch on which `D_H = D_Y`. Otherwise the values are
/// equal only if both lie in the base field and agree there.
pub fn values_equal(p: &SqrtExt, delta: &SqrtExt, zeta: &RatFun, z: &RatFun) -> Result<bool> {
    let lhs = &(zeta * zeta) * &p.radicand;
    let rhs = &(z * z) * &delta.radicand;
    if lhs == rhs {
        let scale = z.checked_div(zeta)?;
        Ok(&p.rebase(&delta.radicand, &scale)? == delta)
    } else {
        Ok(p.odd.is_zero() && delta.odd.is_zero() && p.even == delta.even)
    }
}

/// Both invariants of one braid under one set of parameters.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub p: InvariantValue,
    pub delta: InvariantValue,
    pub equal: bool,
}

/// `(D_H/D_Y)²` and the `σ₁⁻¹` ratio test that any family `P = c_n Δ_S` must pass.
#[derive(Clone, Debug, Serialize)]
pub struct ScalarDiagnostic {
    /// `D_H = D_Y` on the chosen branch, i.e. `ζ²λ_H = z²λ_Y`.
    pub d_equal: bool,
    #[serde(serialize_with = "display")]
    pub c2_squared: RatFun,
    /// `τ(G₁⁻¹)/tr(g₁⁻¹) = z/ζ`.
    pub inverse_ratio: bool,
    /// A scalar family exists only with `c_n = 1`, and only if this holds.
    pub scalar_family_possible: bool,
}

fn display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Both evaluators for one parameter point and one solution.
pub struct Evaluator {
    params: Params,
    hecke: HomflyptEvaluator,
    yoko: DeltaEvaluator,
}

impl Evaluator {
    pub fn new(bindings: &Bindings, sol: &ESolution) -> Result<Self> {
        let e: RatFun = Poly::rational(sol.e_value()).into();
        let params = Params::from_bindings(bindings, Some(e))?;
        let hecke = HomflyptEvaluator::new(&params.q, &params.zeta);
        let yoko = DeltaEvaluator::new(&params.u, &params.z, sol)?;
        Ok(Evaluator { params, hecke, yoko })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn tau(&self, alpha: &BraidWord) -> Result<RatFun> {
        self.hecke.tau(alpha)
    }

    pub fn tr(&self, alpha: &BraidWord) -> Result<RatFun> {
        self.yoko.tr(alpha)
    }

    pub fn homflypt(&self, alpha: &BraidWord) -> Result<InvariantValue> {
        self.hecke.homflypt(alpha)
    }

    pub fn delta_s(&self, alpha: &BraidWord) -> Result<InvariantValue> {
        self.yoko.delta_s(alpha)
    }

    pub fn compare(&self, alpha: &BraidWord) -> Result<Comparison> {
        let p = self.homflypt(alpha)?;
        let delta = self.delta_s(alpha)?;
        let equal = values_equal(&p.value, &delta.value, &self.params.zeta, &self.params.z)?;
        Ok(Comparison { p, delta, equal })
    }

    /// `τ(π(α))·z^ε = tr_S(δ(α))·ζ^ε`, sides swapped for negative `ε`.
    pub fn ratio_check(&self, alpha: &BraidWord) -> Result<bool> {
        let tau = self.tau(alpha)?;
        let tr = self.tr(alpha)?;
        if tr.is_zero() {
            return Err(Error::ZeroTrace(alpha.to_corpus_line()));
        }
        let eps = alpha.epsilon();
        let k = eps.unsigned_abs() as u32;
        let (zp, zetap) = (self.params.z.pow(k), self.params.zeta.pow(k));
        Ok(if eps >= 0 { &tau * &zp == &tr * &zetap } else { &tau * &zetap == &tr * &zp })
    }

    pub fn diagnostic(&self) -> Result<ScalarDiagnostic> {
        let d_equal = self.params.d_squares_equal()?;
        let c2_squared = self.params.c2_squared()?;
        let inverse_ratio = self.ratio_check(&BraidWord::new(2, vec![-1])?)?;
        Ok(ScalarDiagnostic { d_equal, c2_squared, inverse_ratio, scalar_family_possible: inverse_ratio && d_equal })
    }
}

/// One row of the parameter table.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseSpec {
    pub id: u32,
    pub bindings: Bindings,
    /// Rows with `E = 1`, realized by pairing with a singleton `S`.
    pub needs_singleton: bool,
}

/// Cases where the two invariants coincide.
pub const EQUALITY_CASES: std::ops::RangeInclusive<u32> = 1..=14;

pub fn case_spec(id: u32) -> Result<CaseSpec> {
    use Symbol::{Q, U, Z, Zeta, E};
    let one = RatFun::one;
    let s = RatFun::symbol;
    let neg = |r: RatFun| -r;
    let b = Bindings::new();
    let bindings = match id {
        1 => b.with(Q, one()).with(Zeta, s(Z)).with(U, one()),
        2 => b.with(Q, one()).with(Zeta, neg(s(Z))).with(U, one()),
        3 => b.with(Zeta, s(Q)).with(U, one()).with(Z, one()),
        4 => b.with(Zeta, s(Q)).with(U, one()).with(Z, RatFun::int(-1)),
        5 => b.with(Zeta, RatFun::int(-1)).with(U, one()).with(Z, one()),
        6 => b.with(Zeta, RatFun::int(-1)).with(U, one()).with(Z, RatFun::int(-1)),
        7 => b.with(Q, one()).with(Zeta, s(E)).with(Z, neg(s(E))),
        8 => b.with(Q, one()).with(Zeta, neg(s(E))).with(Z, neg(s(E))),
        9 => b.with(Zeta, s(Q)).with(Z, RatFun::int(-1)),
        10 => b.with(Zeta, s(Q)).with(Z, s(U)),
        11 => b.with(Zeta, RatFun::int(-1)).with(Z, RatFun::int(-1)),
        12 => b.with(Zeta, RatFun::int(-1)).with(Z, s(U)),
        13 => b.with(Q, s(U)).with(Zeta, s(Z)),
        14 => b.with(Q, s(U).inv()?).with(Zeta, neg(&s(Z) / &s(U))),
        15 | 16 => {
            let z = &(&(&(&one() - &s(E)) + &s(U)) + &(&s(U) * &s(E))) * &RatFun::frac(1, 2);
            if id == 15 {
                b.with(Q, neg(s(U))).with(Zeta, neg(s(Z))).with(Z, z)
            } else {
                b.with(Q, neg(s(U).inv()?)).with(Zeta, neg(&s(Z) / &s(U))).with(Z, z)
            }
        }
        _ => return Err(Error::UnknownCase(id)),
    };
    Ok(CaseSpec { id, bindings, needs_singleton: (9..=14).contains(&id) })
}

/// Either a table row or explicit bindings.
#[derive(Clone, Debug)]
pub enum Target {
    Case(u32),
    Bindings(Bindings),
}

impl Target {
    fn resolve(&self, sol: &ESolution) -> Result<(Option<u32>, Bindings)> {
        match self {
            Target::Case(id) => {
                let spec = case_spec(*id)?;
                if spec.needs_singleton && !sol.is_singleton() {
                    return Err(Error::CasePairing { case: *id, size: sol.subset().len() });
                }
                Ok((Some(*id), spec.bindings))
            }
            Target::Bindings(b) => Ok((None, b.clone())),
        }
    }
}

/// A report row; serialized with the keys `braid, n, epsilon, case, equal, P, Delta`.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub braid: String,
    pub n: usize,
    pub epsilon: i64,
    pub case: Option<u32>,
    pub equal: bool,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Delta")]
    pub delta: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub diagnostic: ScalarDiagnostic,
}

impl Report {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }

    /// The first braid on which the invariants differ.
    pub fn witness(&self) -> Option<&ReportRow> {
        self.rows.iter().find(|r| !r.equal)
    }
}

/// Compares `P` and `Δ_S` on every braid of the corpus. Rows keep corpus order.
pub fn compare(corpus: &[BraidWord], target: &Target, sol: &ESolution) -> Result<Report> {
    let (case, bindings) = target.resolve(sol)?;
    let ev = Evaluator::new(&bindings, sol)?;
    let rows = corpus
        .par_iter()
        .map(|alpha| {
            let c = ev.compare(alpha)?;
            Ok(ReportRow {
                braid: alpha.to_string(),
                n: alpha.n(),
                epsilon: alpha.epsilon(),
                case,
                equal: c.equal,
                p: c.p.value.to_string(),
                delta: c.delta.value.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report { rows, diagnostic: ev.diagnostic()? })
}

/// `P` on `H_n(q⁻¹)` with `ζ' = −q⁻¹ζ`, the image of the automorphism `G_i ↦ −q⁻¹G_i`,
/// agrees with `P` once `√λ'` is identified with `−q√λ_H`.
pub fn automorphism_check(alpha: &BraidWord) -> Result<bool> {
    let q = RatFun::symbol(Symbol::Q);
    let zeta = RatFun::symbol(Symbol::Zeta);
    let q_inv = q.inv()?;
    let zeta_new = -&(&zeta * &q_inv);
    let p = HomflyptEvaluator::new(&q, &zeta).homflypt(alpha)?;
    let p_new = HomflyptEvaluator::new(&q_inv, &zeta_new).homflypt(alpha)?;
    let moved = p_new.value.rebase(&p.value.radicand, &-q)?;
    Ok(moved == p.value)
}

/// Outcome of one Markov move on one braid.
#[derive(Clone, Debug, Serialize)]
pub struct MarkovRow {
    pub braid: String,
    pub n: usize,
    #[serde(rename = "move")]
    pub mv: String,
    pub p_invariant: bool,
    pub delta_invariant: bool,
}

impl MarkovRow {
    pub fn passed(&self) -> bool {
        self.p_invariant && self.delta_invariant
    }
}

/// The moves applied by [`markov_test`]: `conjugations` seeded conjugations
/// `βαβ⁻¹` with `|β| ≤ 3`, then `ασ_n` and `ασ_n⁻¹`.
pub fn markov_moves(alpha: &BraidWord, conjugations: usize, seed: u64) -> Result<Vec<(String, BraidWord)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..conjugations {
        let len = rand::Rng::gen_range(&mut rng, 1..=3);
        let beta = random_word(&mut rng, alpha.n(), len);
        out.push((format!("conjugate by [{beta}]"), alpha.markov_conjugate(&beta)?));
    }
    out.push(("stabilize +".to_string(), alpha.markov_stabilize(true)));
    out.push(("stabilize -".to_string(), alpha.markov_stabilize(false)));
    Ok(out)
}

/// Checks `P` and `Δ_S` (generic parameters) under the moves of [`markov_moves`].
pub fn markov_test(corpus: &[BraidWord], sol: &ESolution, conjugations: usize, seed: u64) -> Result<Vec<MarkovRow>> {
    let hecke = HomflyptEvaluator::generic();
    let yoko = DeltaEvaluator::generic(sol)?;
    let per_braid = corpus
        .par_iter()
        .enumerate()
        .map(|(k, alpha)| {
            let p0 = hecke.homflypt(alpha)?.value;
            let d0 = yoko.delta_s(alpha)?.value;
            markov_moves(alpha, conjugations, seed.wrapping_add(k as u64))?
                .into_iter()
                .map(|(mv, beta)| {
                    Ok(MarkovRow {
                        braid: alpha.to_string(),
                        n: alpha.n(),
                        mv,
                        p_invariant: hecke.homflypt(&beta)?.value == p0,
                        delta_invariant: yoko.delta_s(&beta)?.value == d0,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_braid.into_iter().flatten().collect())
}
