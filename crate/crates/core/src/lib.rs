//! Exact arithmetic in Hecke and Yokonuma-Hecke algebras, their Markov traces,
//! and the link invariants obtained from them.

pub mod braid;
pub mod cli;
pub mod corpus;
mod error;
pub mod esystem;
pub mod hecke;
pub mod invariants;
pub mod scalars;
pub mod symgroup;
pub mod yokonuma;

pub use error::{Error, Result};
