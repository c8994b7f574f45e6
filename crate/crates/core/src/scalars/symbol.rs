use std::fmt;
use std::str::FromStr;

use super::ScalarError;

/// Number of exponent slots in a monomial: u, z, q, zeta, E and x_1..x_11.
pub const NUM_SYMBOLS: usize = 16;

/// Largest framing index that has its own `x_m` symbol.
pub const MAX_FRAMING_SYMBOL: u32 = (NUM_SYMBOLS - 5) as u32;

/// A parameter indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    U,
    Z,
    Q,
    Zeta,
    E,
    /// Framing parameter x_m, 1 <= m <= 11.
    X(u8),
}

impl Symbol {
    pub fn index(self) -> usize {
        match self {
            Symbol::U => 0,
            Symbol::Z => 1,
            Symbol::Q => 2,
            Symbol::Zeta => 3,
            Symbol::E => 4,
            Symbol::X(m) => 4 + m as usize,
        }
    }

    pub fn from_index(i: usize) -> Symbol {
        match i {
            0 => Symbol::U,
            1 => Symbol::Z,
            2 => Symbol::Q,
            3 => Symbol::Zeta,
            4 => Symbol::E,
            i if i < NUM_SYMBOLS => Symbol::X((i - 4) as u8),
            _ => panic!("symbol index {i} out of range"),
        }
    }

    pub fn x(m: u32) -> Symbol {
        assert!(
            (1..=MAX_FRAMING_SYMBOL).contains(&m),
            "framing symbol x_{m} out of range"
        );
        Symbol::X(m as u8)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::U => write!(f, "u"),
            Symbol::Z => write!(f, "z"),
            Symbol::Q => write!(f, "q"),
            Symbol::Zeta => write!(f, "zeta"),
            Symbol::E => write!(f, "E"),
            Symbol::X(m) => write!(f, "x_{m}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "u" => Ok(Symbol::U),
            "z" => Ok(Symbol::Z),
            "q" => Ok(Symbol::Q),
            "zeta" => Ok(Symbol::Zeta),
            "E" => Ok(Symbol::E),
            _ => {
                let m = s
                    .strip_prefix("x_")
                    .and_then(|t| t.parse::<u32>().ok())
                    .filter(|m| (1..=MAX_FRAMING_SYMBOL).contains(m))
                    .ok_or_else(|| ScalarError::UnknownSymbol(s.to_string()))?;
                Ok(Symbol::X(m as u8))
            }
        }
    }
}
