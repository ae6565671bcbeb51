use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::upoly::UPoly;
use super::SkewElement;
use crate::coeffring::{fmt_monomial, tau_param_pairing, Coefficient, ExponentVector, MonomialMap, Rat, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

/// `1 + c·var` with `c` a single PARAM monomial; any `q^t` shift is folded
/// into `c`, so two factors are equal exactly when their keys are.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearFactor {
    pub var: Var,
    pub scale: ExponentVector,
}

impl LinearFactor {
    pub fn new(var: Var, scale: ExponentVector, shift: i32) -> Self {
        let mut scale = scale;
        scale.add_at(Symbol::Q.id(), shift);
        LinearFactor { var, scale }
    }

    pub fn shift(&self) -> i32 {
        self.scale.get(Symbol::Q.id())
    }

    pub fn shifted(&self, t: i32) -> Self {
        Self::new(self.var, self.scale.clone(), t)
    }

    pub fn scale_coeff(&self) -> Coefficient {
        Coefficient::monomial(self.scale.clone(), Rat::from_integer(1.into()))
    }

    /// The factor as it appears after being moved from the right of `τ^tau`
    /// to its left.
    pub fn twisted(&self, tau: &ExponentVector) -> Self {
        self.shifted(tau_param_pairing(tau, &self.scale))
    }

    pub fn mapped(&self, map: &MonomialMap) -> Self {
        LinearFactor { var: self.var, scale: map.apply(&self.scale) }
    }

    pub fn classical(&self) -> Self {
        LinearFactor { var: self.var, scale: self.scale.without(Symbol::Q.id()) }
    }

    pub fn to_upoly(&self) -> UPoly {
        UPoly::linear(self.scale_coeff())
    }

    pub fn to_skew(&self) -> SkewElement {
        let mut s = SkewElement::one();
        let c = self.scale_coeff();
        s = &s
            + &match self.var {
                Var::X => SkewElement::monomial(c, ExponentVector::new(), 1, 0),
                Var::Y => SkewElement::monomial(c, ExponentVector::new(), 0, 1),
            };
        s
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(1 + ")?;
        let mut first = true;
        fmt_monomial(f, &self.scale, Symbol::param_from_id, &mut first)?;
        if !first {
            f.write_str("*")?;
        }
        f.write_str(match self.var {
            Var::X => "x)",
            Var::Y => "y)",
        })
    }
}

impl fmt::Debug for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Signed multiset of commuting linear factors (all in the same variable).
/// Positive counts multiply, negative counts are pending inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorBag {
    counts: BTreeMap<LinearFactor, i32>,
}

impl FactorBag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, f: LinearFactor, k: i32) {
        if k == 0 {
            return;
        }
        let e = self.counts.entry(f.clone()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.counts.remove(&f);
        }
    }

    pub fn extend(&mut self, other: &FactorBag, sign: i32) {
        for (f, &k) in &other.counts {
            self.add(f.clone(), sign * k);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LinearFactor, i32)> {
        self.counts.iter().map(|(f, &k)| (f, k))
    }

    pub fn positives(&self) -> impl Iterator<Item = (&LinearFactor, i32)> {
        self.iter().filter(|(_, k)| *k > 0)
    }

    pub fn negatives(&self) -> impl Iterator<Item = (&LinearFactor, i32)> {
        self.iter().filter(|(_, k)| *k < 0).map(|(f, k)| (f, -k))
    }

    /// Rebuild with every key transformed; counts of colliding keys merge.
    pub fn map_keys(&self, f: impl Fn(&LinearFactor) -> LinearFactor) -> FactorBag {
        let mut out = FactorBag::new();
        for (k, &n) in &self.counts {
            out.add(f(k), n);
        }
        out
    }

    pub fn twisted(&self, tau: &ExponentVector) -> FactorBag {
        self.map_keys(|f| f.twisted(tau))
    }

    pub fn q_shifted(&self, t: i32) -> FactorBag {
        self.map_keys(|f| f.shifted(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bag_cancels_by_key() {
        let f = LinearFactor::new(Var::Y, ExponentVector::unit(Symbol::E(11).id()), 0);
        let g = LinearFactor::new(Var::Y, ExponentVector::new(), 1);
        let mut b = FactorBag::new();
        b.add(f.clone(), 2);
        b.add(g.clone(), -1);
        b.add(f.clone(), -2);
        assert_eq!(b.iter().count(), 1);
        assert_eq!(b.negatives().next().unwrap(), (&g, 1));
    }

    #[test]
    fn shift_is_folded() {
        let f = LinearFactor::new(Var::X, ExponentVector::unit(Symbol::E(1).id()), 0);
        assert_eq!(f.shifted(2).shifted(-2), f);
        assert_eq!(f.shifted(3).shift(), 3);
    }
}
