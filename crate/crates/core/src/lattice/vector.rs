use std::fmt;

use serde_json::{json, Value};

use crate::coeffring::{ExponentVector, Symbol};
use crate::error::{Error, Result};

/// `λ = d1 H1 + d2 H2 - Σ m_k E_k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    pub d1: i32,
    pub d2: i32,
    pub m: Vec<i32>,
}

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector { d1: 0, d2: 0, m: vec![0; n] }
    }

    pub fn new(d1: i32, d2: i32, m: Vec<i32>) -> Self {
        LatticeVector { d1, d2, m }
    }

    pub fn h1(n: usize) -> Self {
        LatticeVector { d1: 1, ..Self::zero(n) }
    }

    pub fn h2(n: usize) -> Self {
        LatticeVector { d2: 1, ..Self::zero(n) }
    }

    /// The exceptional class `E_k` (1-based), which has `m_k = -1`.
    pub fn e(n: usize, k: usize) -> Self {
        let mut v = Self::zero(n);
        v.m[k - 1] = -1;
        v
    }

    /// `2H1 + 2H2 - Σ E_k`.
    pub fn delta_red(n: usize) -> Self {
        LatticeVector { d1: 2, d2: 2, m: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    /// Multiplicity `m_k`, 1-based.
    pub fn mk(&self, k: usize) -> i32 {
        self.m[k - 1]
    }

    pub fn set_mk(&mut self, k: usize, v: i32) {
        self.m[k - 1] = v;
    }

    pub fn pairing(&self, o: &LatticeVector) -> i32 {
        assert_eq!(self.n(), o.n());
        self.d1 * o.d2 + self.d2 * o.d1 - self.m.iter().zip(&o.m).map(|(a, b)| a * b).sum::<i32>()
    }

    pub fn add(&self, o: &LatticeVector) -> LatticeVector {
        LatticeVector {
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
            m: self.m.iter().zip(&o.m).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &LatticeVector) -> LatticeVector {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i32) -> LatticeVector {
        LatticeVector { d1: self.d1 * k, d2: self.d2 * k, m: self.m.iter().map(|a| a * k).collect() }
    }

    /// `(d1+1)(d2+1) - Σ m(m+1)/2`.
    pub fn dimension_count(&self) -> i32 {
        (self.d1 + 1) * (self.d2 + 1) - self.m.iter().map(|m| m * (m + 1) / 2).sum::<i32>()
    }

    /// Exponents of `e^λ = h1^d1 h2^d2 / Π e_k^m_k`.
    pub fn param_vec(&self) -> ExponentVector {
        let mut v = ExponentVector::new();
        v.set(Symbol::H(1).id(), self.d1);
        v.set(Symbol::H(2).id(), self.d2);
        for (k, &m) in self.m.iter().enumerate() {
            v.set(Symbol::E(k as u8 + 1).id(), -m);
        }
        v
    }

    /// Exponents of `τ^λ = σ1^d1 σ2^d2 / Π τ_k^m_k`.
    pub fn tau_vec(&self) -> ExponentVector {
        let mut v = ExponentVector::new();
        v.set(Symbol::Sigma(1).id(), self.d1);
        v.set(Symbol::Sigma(2).id(), self.d2);
        for (k, &m) in self.m.iter().enumerate() {
            v.set(Symbol::Tau(k as u8 + 1).id(), -m);
        }
        v
    }

    pub fn from_tau_vec(v: &ExponentVector, n: usize) -> Result<LatticeVector> {
        let mut out = Self::zero(n);
        for (id, k) in v.iter() {
            match Symbol::tau_from_id(id) {
                Symbol::Sigma(1) => out.d1 = k,
                Symbol::Sigma(2) => out.d2 = k,
                Symbol::Tau(j) if (j as usize) <= n => out.m[j as usize - 1] = -k,
                s => return Err(Error::SymbolOutOfTable(s.name())),
            }
        }
        Ok(out)
    }

    pub fn from_param_vec(v: &ExponentVector, n: usize) -> Result<LatticeVector> {
        let mut out = Self::zero(n);
        for (id, k) in v.iter() {
            match Symbol::param_from_id(id) {
                Symbol::H(1) => out.d1 = k,
                Symbol::H(2) => out.d2 = k,
                Symbol::E(j) if (j as usize) <= n => out.m[j as usize - 1] = -k,
                s => return Err(Error::Invalid(format!("`{s}` in a lattice monomial"))),
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({ "d": [self.d1, self.d2], "m": self.m })
    }

    pub fn from_json(v: &Value) -> Result<LatticeVector> {
        let bad = || Error::Parse(format!("bad lattice vector {v}"));
        let d = v["d"].as_array().filter(|d| d.len() == 2).ok_or_else(bad)?;
        let m = v["m"].as_array().ok_or_else(bad)?;
        let int = |x: &Value| x.as_i64().map(|k| k as i32).ok_or_else(bad);
        Ok(LatticeVector { d1: int(&d[0])?, d2: int(&d[1])?, m: m.iter().map(int).collect::<Result<_>>()? })
    }

    /// Parse `d1,d2;m1,...,mN` (spaces allowed).
    pub fn parse(s: &str, n: usize) -> Result<LatticeVector> {
        let bad = || Error::Parse(format!("expected `d1,d2;m1,...` but got `{s}`"));
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (d, m) = s.split_once(';').ok_or_else(bad)?;
        let nums = |t: &str| -> Result<Vec<i32>> {
            t.split([',', ' ']).filter(|p| !p.is_empty()).map(|p| p.trim().parse().map_err(|_| bad())).collect()
        };
        let d = nums(d)?;
        let mut m = nums(m)?;
        if d.len() != 2 || m.len() > n {
            return Err(bad());
        }
        m.resize(n, 0);
        Ok(LatticeVector { d1: d[0], d2: d[1], m })
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(|k| k.to_string()).collect();
        write!(f, "({},{};{})", self.d1, self.d2, m.join(","))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
