//! The fixed symbol universe.
//!
//! Symbols fall into three blocks. PARAM holds the central-ish parameters
//! `q, h1, h2, e1..e11` together with a handful of free central constants;
//! TAU holds `σ1, σ2, τ1..τ11`; POS holds the two position variables.
//! Block-local integer ids are what exponent vectors store.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Largest point count of any supported group type (E8 uses 11 points).
pub const MAX_POINTS: u8 = 11;

/// Names of the declared central constants, in id order.
pub const CONSTANT_NAMES: [&str; 5] = ["c0", "c1", "c2", "c3", "c"];

const CONST_BASE: u8 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    Param,
    Tau,
    Pos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Q,
    /// `h1` or `h2`.
    H(u8),
    /// `e1..e11`.
    E(u8),
    /// Index into [`CONSTANT_NAMES`].
    Const(u8),
    /// `σ1` or `σ2`, serialized as `s1`, `s2`.
    Sigma(u8),
    /// `τ1..τ11`, serialized as `t1..t11`.
    Tau(u8),
    X,
    Y,
}

impl Symbol {
    pub fn block(self) -> Block {
        match self {
            Symbol::Q | Symbol::H(_) | Symbol::E(_) | Symbol::Const(_) => Block::Param,
            Symbol::Sigma(_) | Symbol::Tau(_) => Block::Tau,
            Symbol::X | Symbol::Y => Block::Pos,
        }
    }

    /// Block-local id used inside exponent vectors.
    pub fn id(self) -> u8 {
        match self {
            Symbol::Q => 0,
            Symbol::H(i) => i,
            Symbol::E(k) => 2 + k,
            Symbol::Const(c) => CONST_BASE + c,
            Symbol::Sigma(i) => i - 1,
            Symbol::Tau(k) => 1 + k,
            Symbol::X => 0,
            Symbol::Y => 1,
        }
    }

    pub fn param_from_id(id: u8) -> Symbol {
        match id {
            0 => Symbol::Q,
            1 | 2 => Symbol::H(id),
            3..=13 => Symbol::E(id - 2),
            _ => Symbol::Const(id - CONST_BASE),
        }
    }

    pub fn tau_from_id(id: u8) -> Symbol {
        match id {
            0 | 1 => Symbol::Sigma(id + 1),
            _ => Symbol::Tau(id - 1),
        }
    }

    /// Point index (`e_k` or `τ_k`), if any.
    pub fn point(self) -> Option<u8> {
        match self {
            Symbol::E(k) | Symbol::Tau(k) => Some(k),
            _ => None,
        }
    }

    pub fn name(self) -> String {
        match self {
            Symbol::Q => "q".into(),
            Symbol::H(i) => format!("h{i}"),
            Symbol::E(k) => format!("e{k}"),
            Symbol::Const(c) => CONSTANT_NAMES[c as usize].into(),
            Symbol::Sigma(i) => format!("s{i}"),
            Symbol::Tau(k) => format!("t{k}"),
            Symbol::X => "x".into(),
            Symbol::Y => "y".into(),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::UnknownSymbol(s.to_string());
        if let Some(i) = CONSTANT_NAMES.iter().position(|&c| c == s) {
            return Ok(Symbol::Const(i as u8));
        }
        match s {
            "q" => return Ok(Symbol::Q),
            "x" => return Ok(Symbol::X),
            "y" => return Ok(Symbol::Y),
            _ => {}
        }
        let (head, tail) = s.split_at(1);
        let idx: u8 = tail.parse().map_err(|_| bad())?;
        match head {
            "h" if idx == 1 || idx == 2 => Ok(Symbol::H(idx)),
            "s" if idx == 1 || idx == 2 => Ok(Symbol::Sigma(idx)),
            "e" if (1..=MAX_POINTS).contains(&idx) => Ok(Symbol::E(idx)),
            "t" if (1..=MAX_POINTS).contains(&idx) => Ok(Symbol::Tau(idx)),
            _ => Err(bad()),
        }
    }
}

/// The symbols available to one group type: `N` points plus the constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolTable {
    pub points: u8,
}

impl SymbolTable {
    pub fn new(points: u8) -> Self {
        assert!(points <= MAX_POINTS);
        SymbolTable { points }
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        sym.point().is_none_or(|k| k >= 1 && k <= self.points)
    }
}

impl Default for SymbolTable {
    fn default() -> Self {
        SymbolTable::new(MAX_POINTS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for k in 1..=MAX_POINTS {
            let e = Symbol::E(k);
            assert_eq!(Symbol::param_from_id(e.id()), e);
            let t = Symbol::Tau(k);
            assert_eq!(Symbol::tau_from_id(t.id()), t);
        }
        for c in 0..CONSTANT_NAMES.len() as u8 {
            assert_eq!(Symbol::param_from_id(Symbol::Const(c).id()), Symbol::Const(c));
        }
        assert_eq!(Symbol::tau_from_id(0), Symbol::Sigma(1));
    }

    #[test]
    fn parse_names() {
        for name in ["q", "h1", "h2", "e1", "e11", "s1", "s2", "t7", "x", "y", "c0", "c"] {
            let sym: Symbol = name.parse().unwrap();
            assert_eq!(sym.name(), name);
        }
        assert!("e12".parse::<Symbol>().is_err());
        assert!("h3".parse::<Symbol>().is_err());
        assert!("w".parse::<Symbol>().is_err());
    }
}
