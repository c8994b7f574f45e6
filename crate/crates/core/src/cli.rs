//! Command-line front end. [`run`] takes the full argument vector and returns
//! the exit code with the text to print.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::braid::{parse_corpus, BraidError, BraidWord};
use crate::corpus;
use crate::esystem::{all_subsets, parse_subset, solve, verify, ESolution};
use crate::hecke::{HElement, Hecke};
use crate::invariants::{
    automorphism_check, case_spec, compare, markov_test, DeltaEvaluator, Evaluator, HomflyptEvaluator,
    InvariantValue, Params, Target, EQUALITY_CASES,
};
use crate::scalars::{parse_ratfun, Bindings, Poly, RatFun, ScalarError, Symbol};
use crate::yokonuma::{YElement, Yokonuma};
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "yh", version, about = "Hecke and Yokonuma-Hecke traces and the link invariants P and Delta_S")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// P of the closure of a braid.
    Homflypt {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        /// Strand count, by default one more than the largest generator.
        #[arg(long)]
        n: Option<usize>,
        /// Parameter values, e.g. `q=-3/7,zeta=2`.
        #[arg(long, allow_hyphen_values = true)]
        bind: Option<String>,
    },
    /// Delta_S of the closure of a braid.
    Delta {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: u32,
        /// Residues mod d, e.g. `0,2`.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long, allow_hyphen_values = true)]
        bind: Option<String>,
    },
    /// Solutions of the E-system.
    Esystem {
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "all")]
        subset: Option<String>,
        /// Every non-empty subset (the default without --subset).
        #[arg(long)]
        all: bool,
        /// Re-check every equation of the system.
        #[arg(long)]
        verify: bool,
    },
    /// Compare P and Delta_S on a corpus under a table case or explicit bindings.
    Compare {
        #[arg(long, conflicts_with = "bind", required_unless_present = "bind")]
        case: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        bind: Option<String>,
        /// Corpus file; the built-in corpus when absent.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        /// Wrap the rows together with the scalar-multiple diagnostic.
        #[arg(long)]
        with_diagnostic: bool,
    },
    /// Check both invariants under conjugations and stabilizations.
    MarkovTest {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        #[arg(long, default_value_t = 3)]
        conjugations: usize,
        #[arg(long, default_value_t = corpus::CORPUS_SEED)]
        seed: u64,
    },
    /// Run the built-in property suite.
    Selftest,
}

#[derive(Debug)]
struct CliError {
    kind: &'static str,
    message: String,
    position: Option<usize>,
}

impl CliError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into(), position: None }
    }

    fn render(&self) -> String {
        let mut e = json!({ "kind": self.kind, "message": self.message });
        if let Some(p) = self.position {
            e["position"] = json!(p);
        }
        json!({ "error": e }).to_string()
    }
}

fn braid_position(e: &BraidError) -> Option<usize> {
    match e {
        BraidError::Malformed { pos, .. } | BraidError::ZeroLetter { pos } | BraidError::OutOfRange { pos, .. } => Some(*pos),
        _ => None,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        let (kind, position) = match &e {
            Error::Braid(b) => ("parse", braid_position(b)),
            Error::Scalar(ScalarError::Parse { pos, .. }) => ("parse", Some(*pos)),
            Error::Scalar(ScalarError::DivisionByZero | ScalarError::ZeroDenominator(_) | ScalarError::NotInvertible(_)) => {
                ("zero-denominator", None)
            }
            Error::Scalar(ScalarError::UnknownSymbol(_)) => ("parse", None),
            Error::CasePairing { .. } => ("pairing", None),
            Error::UnknownCase(_) | Error::Subset(_) => ("invalid-option", None),
            Error::ZeroTrace(_) => ("zero-denominator", None),
            _ => ("invalid", None),
        };
        CliError { kind, message, position }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        Error::from(e).into()
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        Error::from(e).into()
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `sym=value,sym=value`. Positions in errors are byte offsets into `text`.
fn parse_bindings(text: &str) -> CliResult<Bindings> {
    let mut b = Bindings::new();
    let mut offset = 0;
    for item in text.split(',') {
        let start = offset;
        offset += item.len() + 1;
        if item.trim().is_empty() {
            continue;
        }
        let (key, value) = item.split_once('=').ok_or_else(|| CliError {
            kind: "parse",
            message: format!("binding `{}` lacks `=`", item.trim()),
            position: Some(start),
        })?;
        let sym: Symbol = key.trim().parse().map_err(|e: ScalarError| CliError {
            kind: "parse",
            message: e.to_string(),
            position: Some(start),
        })?;
        let v = parse_ratfun(value).map_err(|e| {
            let mut c = CliError::from(e);
            c.position = c.position.map(|p| p + start + key.len() + 1);
            c
        })?;
        if b.get(sym).is_some() {
            return Err(CliError { kind: "parse", message: format!("{sym} bound twice"), position: Some(start) });
        }
        b.insert(sym, v);
    }
    Ok(b)
}

fn parse_braid(text: &str, n: Option<usize>) -> CliResult<BraidWord> {
    Ok(BraidWord::parse(text, n)?)
}

fn solution(d: u32, subset: &str) -> CliResult<ESolution> {
    let s = parse_subset(subset, d)?;
    Ok(solve(d, &s)?)
}

fn read_corpus(path: &PathBuf) -> CliResult<Vec<BraidWord>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
    Ok(parse_corpus(&text)?)
}

/// Text rendering: the bare base-field value when no root is involved.
fn short(v: &InvariantValue) -> String {
    if v.value.odd.is_zero() {
        v.value.even.to_string()
    } else {
        v.value.to_string()
    }
}

fn value_json(braid: &BraidWord, v: &InvariantValue) -> serde_json::Value {
    json!({
        "braid": braid.to_string(),
        "n": v.n,
        "epsilon": v.epsilon,
        "invariant": v.kind,
        "value": v.value.to_string(),
        "even": v.value.even.to_string(),
        "odd": v.value.odd.to_string(),
        "radicand": v.value.radicand.to_string(),
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn threads() -> CliResult<Option<usize>> {
    match std::env::var("YH_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(CliError::new("invalid-option", format!("YH_THREADS must be a positive integer, got `{v}`"))),
        },
    }
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (2, CliError::new("usage", e.render().to_string().trim_end()).render()),
            };
        }
    };
    let result = threads().and_then(|t| match t {
        None => execute(&cli),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| CliError::new("invalid-option", e.to_string()))
            .and_then(|pool| pool.install(|| execute(&cli))),
    });
    match result {
        Ok(out) => out,
        Err(e) => (1, e.render()),
    }
}

fn execute(cli: &Cli) -> CliResult<(i32, String)> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Homflypt { braid, n, bind } => {
            let alpha = parse_braid(braid, *n)?;
            let b = bind.as_deref().map(parse_bindings).transpose()?.unwrap_or_default();
            let p = Params::from_bindings(&b, None)?;
            let v = HomflyptEvaluator::new(&p.q, &p.zeta).homflypt(&alpha)?;
            Ok((0, if json { to_json(&value_json(&alpha, &v)) } else { short(&v) }))
        }
        Command::Delta { braid, n, d, subset, bind } => {
            let alpha = parse_braid(braid, *n)?;
            let sol = solution(*d, subset)?;
            let b = bind.as_deref().map(parse_bindings).transpose()?.unwrap_or_default();
            let e: RatFun = Poly::rational(sol.e_value()).into();
            let p = Params::from_bindings(&b, Some(e))?;
            let v = DeltaEvaluator::new(&p.u, &p.z, &sol)?.delta_s(&alpha)?;
            Ok((0, if json { to_json(&value_json(&alpha, &v)) } else { short(&v) }))
        }
        Command::Esystem { d, subset, all: _, verify: check } => {
            let subsets = match subset {
                Some(s) => vec![parse_subset(s, *d)?],
                None => {
                    if *d == 0 {
                        return Err(CliError::new("invalid-option", "d must be positive"));
                    }
                    all_subsets(*d)
                }
            };
            let sols = subsets.iter().map(|s| solve(*d, s)).collect::<Result<Vec<_>, _>>()?;
            if json {
                let rows: Vec<_> = sols
                    .iter()
                    .map(|s| {
                        let mut row = json!({
                            "d": s.d(),
                            "subset": s.subset(),
                            "E": s.e_value().to_string(),
                            "x": s.values().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        });
                        if *check {
                            row["verified"] = json!(verify(s.values()));
                        }
                        row
                    })
                    .collect();
                Ok((0, to_json(&rows)))
            } else {
                let lines: Vec<String> = sols
                    .iter()
                    .map(|s| if *check { format!("{s} verified={}", verify(s.values())) } else { s.to_string() })
                    .collect();
                Ok((0, lines.join("\n")))
            }
        }
        Command::Compare { case, bind, corpus: file, d, subset, with_diagnostic } => {
            let target = match (case, bind) {
                (Some(c), _) => {
                    case_spec(*c)?;
                    Target::Case(*c)
                }
                (None, Some(b)) => Target::Bindings(parse_bindings(b)?),
                (None, None) => return Err(CliError::new("usage", "either --case or --bind is required")),
            };
            let sol = solution(*d, subset)?;
            let braids = match file {
                Some(f) => read_corpus(f)?,
                None => corpus::builtin(),
            };
            let report = compare(&braids, &target, &sol)?;
            if json {
                Ok((0, if *with_diagnostic { to_json(&report) } else { to_json(&report.rows) }))
            } else {
                let mut out: Vec<String> = report
                    .rows
                    .iter()
                    .map(|r| format!("{}  n={} eps={}  [{}]", if r.equal { "equal  " } else { "UNEQUAL" }, r.n, r.epsilon, r.braid))
                    .collect();
                let unequal = report.rows.iter().filter(|r| !r.equal).count();
                out.push(format!("{} braids, {} unequal", report.rows.len(), unequal));
                let dg = &report.diagnostic;
                out.push(format!(
                    "D_H = D_Y: {}  (D_H/D_Y)^2 = {}  inverse ratio: {}",
                    dg.d_equal, dg.c2_squared, dg.inverse_ratio
                ));
                Ok((0, out.join("\n")))
            }
        }
        Command::MarkovTest { corpus: file, d, subset, conjugations, seed } => {
            let sol = solution(*d, subset)?;
            let braids = read_corpus(file)?;
            let rows = markov_test(&braids, &sol, *conjugations, *seed)?;
            let code = if rows.iter().all(|r| r.passed()) { 0 } else { 1 };
            if json {
                Ok((code, to_json(&rows)))
            } else {
                let lines: Vec<String> = rows
                    .iter()
                    .map(|r| format!("{}  [{}] {}", if r.passed() { "PASS" } else { "FAIL" }, r.braid, r.mv))
                    .collect();
                Ok((code, lines.join("\n")))
            }
        }
        Command::Selftest => {
            let results = selftest();
            let code = if results.iter().all(|(_, ok)| *ok) { 0 } else { 1 };
            if json {
                let rows: Vec<_> = results.iter().map(|(name, ok)| json!({ "check": name, "pass": ok })).collect();
                Ok((code, to_json(&rows)))
            } else {
                let lines: Vec<String> =
                    results.iter().map(|(name, ok)| format!("{}  {name}", if *ok { "PASS" } else { "FAIL" })).collect();
                Ok((code, lines.join("\n")))
            }
        }
    }
}

fn check(f: impl FnOnce() -> crate::Result<bool>) -> bool {
    f().unwrap_or(false)
}

/// A fast property suite over small algebras and the named braids.
fn selftest() -> Vec<(String, bool)> {
    let named: Vec<BraidWord> = corpus::named().into_iter().map(|(_, b)| b).collect();
    let mut out = Vec::new();
    out.push((
        "Hecke quadratic and braid relations, n = 3".to_string(),
        check(|| {
            let h = Hecke::generic();
            let g = |i| HElement::generator(3, i);
            let q = Poly::symbol(Symbol::Q);
            let sq = h.mul(&g(1)?, &g(1)?)?;
            let quad = sq == g(1)?.scale(&(&q - &Poly::one())).add(&HElement::unit(3).scale(&q));
            let l = h.mul(&h.mul(&g(1)?, &g(2)?)?, &g(1)?)?;
            let r = h.mul(&h.mul(&g(2)?, &g(1)?)?, &g(2)?)?;
            Ok(quad && l == r)
        }),
    ));
    out.push((
        "Yokonuma braid relation and inverse, d = 3, n = 3".to_string(),
        check(|| {
            let y = Yokonuma::generic(3);
            let g = |i| YElement::generator(3, 3, i);
            let l = y.mul(&y.mul(&g(1)?, &g(2)?)?, &g(1)?)?;
            let r = y.mul(&y.mul(&g(2)?, &g(1)?)?, &g(2)?)?;
            Ok(l == r && y.mul_gen_inv(&g(2)?, 2)? == YElement::unit(3, 3))
        }),
    ));
    out.push((
        "E-system solutions, d <= 6".to_string(),
        (1..=6u32).all(|d| all_subsets(d).iter().all(|s| solve(d, s).map(|x| verify(x.values())).unwrap_or(false))),
    ));
    let sol2 = solve(2, &[0, 1]).expect("valid subset");
    let single = solve(3, &[1]).expect("valid subset");
    out.push((
        "Markov moves on the named braids, d = 2, S = {0,1}".to_string(),
        check(|| Ok(markov_test(&named, &sol2, 2, corpus::CORPUS_SEED)?.iter().all(|r| r.passed()))),
    ));
    for case in EQUALITY_CASES {
        let sol = if case_spec(case).map(|c| c.needs_singleton).unwrap_or(false) { &single } else { &sol2 };
        out.push((
            format!("case {case}: P = Delta_S on the named braids"),
            check(|| Ok(compare(&named, &Target::Case(case), sol)?.all_equal())),
        ));
    }
    out.push((
        "case 15 is dismissed by the showcase braid".to_string(),
        check(|| {
            let beta = corpus::named().into_iter().find(|(k, _)| *k == "showcase").map(|(_, b)| b);
            let beta = beta.ok_or_else(|| Error::Invalid("missing showcase".into()))?;
            Ok(!compare(&[beta], &Target::Case(15), &sol2)?.all_equal())
        }),
    ));
    out.push((
        "generic bindings: sigma_1^-1 rules out a scalar family".to_string(),
        check(|| {
            let b = Bindings::new()
                .with(Symbol::Q, RatFun::frac(3, 2))
                .with(Symbol::Zeta, RatFun::frac(-5, 7))
                .with(Symbol::U, RatFun::int(4))
                .with(Symbol::Z, RatFun::frac(2, 9));
            let dg = Evaluator::new(&b, &sol2)?.diagnostic()?;
            Ok(!dg.d_equal && !dg.inverse_ratio)
        }),
    ));
    out.push((
        "automorphism G_i -> -q^-1 G_i leaves P unchanged".to_string(),
        named.iter().all(|b| check(|| automorphism_check(b))),
    ));
    out.push((
        "odd part vanishes iff epsilon = n - 1 mod 2".to_string(),
        check(|| {
            let hp = HomflyptEvaluator::generic();
            let dl = DeltaEvaluator::generic(&sol2)?;
            for b in &named {
                let parity = (b.epsilon() - b.n() as i64 + 1).rem_euclid(2) == 0;
                if hp.homflypt(b)?.value.odd.is_zero() != parity || dl.delta_s(b)?.value.odd.is_zero() != parity {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        run(std::iter::once("yh").chain(args.iter().copied()))
    }

    #[test]
    fn unknot_prints_one() {
        assert_eq!(call(&["homflypt", "--braid", ""]), (0, "1".to_string()));
    }

    #[test]
    fn esystem_d2() {
        let (code, out) = call(&["esystem", "--d", "2", "--subset", "0,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "d=2 S={0,1} E=1/2 x_1=0");
    }

    #[test]
    fn bindings_with_positions() {
        let b = parse_bindings("q=-3/7,zeta=2").unwrap();
        assert_eq!(b.get(Symbol::Q).unwrap(), &RatFun::frac(-3, 7));
        let e = parse_bindings("q=1,w=2").unwrap_err();
        assert_eq!((e.kind, e.position), ("parse", Some(4)));
        let e = parse_bindings("q=1,zeta=2+").unwrap_err();
        assert_eq!(e.kind, "parse");
        assert!(e.position.unwrap() >= 9);
    }

    #[test]
    fn errors_are_json() {
        let (code, out) = call(&["homflypt", "--braid", "1 x"]);
        assert_eq!(code, 1);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["kind"], "parse");
        assert_eq!(v["error"]["position"], 2);
        let (code, out) = call(&["compare", "--case", "13", "--d", "2", "--subset", "0,1"]);
        assert_eq!(code, 1);
        assert!(out.contains("pairing"));
        let (code, out) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(out.contains("usage"));
    }
}
