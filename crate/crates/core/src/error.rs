use crate::braid::BraidError;
use crate::scalars::ScalarError;
use crate::symgroup::PermError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generator index {i} out of range for {n} strands")]
    GeneratorOutOfRange { i: usize, n: usize },
    #[error("elements live in different algebras: {0}")]
    Mismatch(String),
    #[error("framing character must be specialized")]
    SymbolicCharacter,
    #[error("the map needs a singleton subset, got {0} elements")]
    NotSingleton(usize),
    #[error("invalid subset: {0}")]
    Subset(String),
    #[error("case {0} does not exist (expected 1..=16)")]
    UnknownCase(u32),
    #[error("case {case} needs a singleton subset (E = 1), got |S| = {size}")]
    CasePairing { case: u32, size: usize },
    #[error("trace of {0} vanishes, ratio undefined")]
    ZeroTrace(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
