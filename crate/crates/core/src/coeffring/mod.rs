//! Exact coefficient layer: symbols, sparse exponents, Laurent coefficients
//! and the `q`-power twist that encodes every commutation relation.

mod coefficient;
mod exponent;
mod monomial;
mod symbols;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use coefficient::Coefficient;
pub(crate) use coefficient::{exponents_from_json, exponents_json, fmt_monomial};
pub use exponent::ExponentVector;
pub use monomial::{monomial_multiply, monomial_multiply_in, tau_param_pairing, TwistedMonomial};
pub use symbols::{Block, Symbol, SymbolTable, CONSTANT_NAMES, MAX_POINTS};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact values for PARAM symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<u8, Rat>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, sym: Symbol, v: Rat) {
        assert_eq!(sym.block(), Block::Param, "only parameters can be specialized");
        self.values.insert(sym.id(), v);
    }

    pub fn with(mut self, sym: Symbol, v: Rat) -> Self {
        self.set(sym, v);
        self
    }

    pub fn get(&self, sym: Symbol) -> Option<&Rat> {
        self.values.get(&sym.id())
    }

    pub fn contains_id(&self, id: u8) -> bool {
        self.values.contains_key(&id)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, &Rat)> {
        self.values.iter().map(|(&id, v)| (Symbol::param_from_id(id), v))
    }

    pub fn eval_monomial(&self, e: &ExponentVector) -> Result<Rat> {
        let mut acc = Rat::one();
        for (id, k) in e.iter() {
            let v = self.values.get(&id).ok_or_else(|| Error::MissingAssignment(Symbol::param_from_id(id).name()))?;
            if v.is_zero() {
                if k < 0 {
                    return Err(Error::ZeroToNegativePower(Symbol::param_from_id(id).name()));
                }
                return Ok(Rat::zero());
            }
            acc *= num_traits::Pow::pow(v, k);
        }
        Ok(acc)
    }
}

/// An integer-linear map on PARAM exponents, given by the images of the
/// symbols it moves. Unlisted symbols are fixed, and `q` is always fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialMap {
    images: BTreeMap<u8, ExponentVector>,
}

impl MonomialMap {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn set(&mut self, sym: Symbol, image: ExponentVector) {
        assert!(sym != Symbol::Q && sym.block() == Block::Param);
        self.images.insert(sym.id(), image);
    }

    pub fn with(mut self, sym: Symbol, image: ExponentVector) -> Self {
        self.set(sym, image);
        self
    }

    pub fn image(&self, sym: Symbol) -> ExponentVector {
        self.images.get(&sym.id()).cloned().unwrap_or_else(|| ExponentVector::unit(sym.id()))
    }

    pub fn apply(&self, e: &ExponentVector) -> ExponentVector {
        if self.images.is_empty() {
            return e.clone();
        }
        let mut out = ExponentVector::new();
        for (id, k) in e.iter() {
            match self.images.get(&id) {
                Some(img) => out = out.combine(img, k),
                None => out.add_at(id, k),
            }
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MonomialMap) -> MonomialMap {
        let mut out = MonomialMap::identity();
        let ids: std::collections::BTreeSet<u8> = self.images.keys().chain(other.images.keys()).copied().collect();
        for id in ids {
            let img = self.apply(&other.image(Symbol::param_from_id(id)));
            if img != ExponentVector::unit(id) {
                out.images.insert(id, img);
            }
        }
        out
    }
}

/// Convenience: build a PARAM exponent vector from `(symbol, power)` pairs.
pub fn params(pairs: &[(Symbol, i32)]) -> ExponentVector {
    ExponentVector::from_pairs(pairs.iter().map(|&(s, k)| {
        debug_assert_eq!(s.block(), Block::Param);
        (s.id(), k)
    }))
}

/// Convenience: build a TAU exponent vector from `(symbol, power)` pairs.
pub fn taus(pairs: &[(Symbol, i32)]) -> ExponentVector {
    ExponentVector::from_pairs(pairs.iter().map(|&(s, k)| {
        debug_assert_eq!(s.block(), Block::Tau);
        (s.id(), k)
    }))
}

/// Coefficient `r · Π s^k`.
pub fn mono(r: Rat, pairs: &[(Symbol, i32)]) -> Coefficient {
    Coefficient::monomial(params(pairs), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Symbol::*;

    fn s0_map() -> MonomialMap {
        MonomialMap::identity()
            .with(E(10), params(&[(H(2), 1), (E(11), -1)]))
            .with(E(11), params(&[(H(2), 1), (E(10), -1)]))
            .with(H(1), params(&[(H(1), 1), (H(2), 1), (E(10), -1), (E(11), -1)]))
    }

    #[test]
    fn substitute_examples() {
        let m = s0_map();
        let c = Coefficient::sym(E(10)).map_monomials(&m);
        assert_eq!(c, mono(rat(1, 1), &[(H(2), 1), (E(11), -1)]));
        let c = Coefficient::sym(H(1)).map_monomials(&m);
        assert_eq!(c, mono(rat(1, 1), &[(H(1), 1), (H(2), 1), (E(10), -1), (E(11), -1)]));
        let any = mono(rat(3, 7), &[(Q, -2), (E(4), 3), (H(2), -1)]);
        assert_eq!(any.map_monomials(&MonomialMap::identity()), any);
    }

    #[test]
    fn substitution_merges_duplicates() {
        let m = s0_map();
        // e10 + h2/e11 maps to h2/e11 + e10: the same set, so no change.
        let c = &Coefficient::sym(E(10)) + &mono(rat(1, 1), &[(H(2), 1), (E(11), -1)]);
        assert_eq!(c.map_monomials(&m), c);
        // A map collapsing two monomials merges their coefficients.
        let collapse = MonomialMap::identity().with(E(2), params(&[(E(1), 1)]));
        let c = &Coefficient::sym(E(1)) + &Coefficient::sym(E(2));
        assert_eq!(c.map_monomials(&collapse), mono(rat(2, 1), &[(E(1), 1)]));
    }

    #[test]
    fn involution_and_compose() {
        let m = s0_map();
        let id = m.compose(&m);
        assert_eq!(id, MonomialMap::identity());
    }
}
