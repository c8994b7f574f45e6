//! Exact scalars: rationals, cyclotomic numbers, Laurent polynomials in the
//! parameter symbols, their fraction field and a formal square root.

mod cyclotomic;
mod parse;
mod poly;
mod ratfun;
mod sqrtext;
mod symbol;

pub use cyclotomic::{cyclotomic_polynomial, totient, Cyclotomic, IntPoly};
pub use parse::{parse_ratfun, parse_sqrtext};
pub use poly::{Monomial, Poly};
pub use ratfun::{Bindings, RatFun};
pub use sqrtext::SqrtExt;
pub use symbol::{Symbol, MAX_FRAMING_SYMBOL, NUM_SYMBOLS};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not invertible in the Laurent ring: {0}")]
    NotInvertible(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("radicands differ: {0} vs {1}")]
    RadicandMismatch(String, String),
    #[error("substitution makes the denominator {0} vanish")]
    ZeroDenominator(String),
    #[error("bindings refer to each other cyclically")]
    CyclicBindings,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
