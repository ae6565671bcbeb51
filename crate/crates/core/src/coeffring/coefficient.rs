use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::exponent::ExponentVector;
use super::monomial::tau_param_pairing;
use super::symbols::Symbol;
use super::{Assignment, MonomialMap, Rat};
use crate::error::{Error, Result};

/// Laurent polynomial in the PARAM block with exact rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coefficient {
    terms: BTreeMap<ExponentVector, Rat>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        Self::monomial(ExponentVector::new(), r)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::from_integer(BigInt::from(n)))
    }

    pub fn monomial(exps: ExponentVector, r: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(exps, r);
        }
        Coefficient { terms }
    }

    /// `sym^k` for a PARAM symbol.
    pub fn sym_pow(sym: Symbol, k: i32) -> Self {
        Self::monomial(ExponentVector::single(sym.id(), k), Rat::one())
    }

    pub fn sym(sym: Symbol) -> Self {
        Self::sym_pow(sym, 1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::sym_pow(Symbol::Q, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(e, r)| e.is_zero() && r.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rat)> {
        self.terms.iter()
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, Rat)>>(it: I) -> Self {
        let mut c = Self::zero();
        for (e, r) in it {
            c.add_term(e, r);
        }
        c
    }

    pub fn add_term(&mut self, exps: ExponentVector, r: Rat) {
        if r.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(r);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + r;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Coefficient) {
        for (e, r) in &other.terms {
            self.add_term(e.clone(), r.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Coefficient) {
        for (e, r) in &other.terms {
            self.add_term(e.clone(), -r.clone());
        }
    }

    pub fn scale(&self, r: &Rat) -> Coefficient {
        if r.is_zero() {
            return Self::zero();
        }
        Coefficient { terms: self.terms.iter().map(|(e, c)| (e.clone(), c * r)).collect() }
    }

    /// Multiply by the monomial `exps`.
    pub fn mul_monomial(&self, exps: &ExponentVector) -> Coefficient {
        if exps.is_zero() {
            return self.clone();
        }
        Coefficient { terms: self.terms.iter().map(|(e, c)| (e.add(exps), c.clone())).collect() }
    }

    pub fn shift_q(&self, k: i32) -> Coefficient {
        self.mul_monomial(&ExponentVector::single(Symbol::Q.id(), k))
    }

    pub fn pow(&self, n: u32) -> Coefficient {
        let mut acc = Coefficient::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The pair (exponents, rational) when this is a single term.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Inverse of a single-term coefficient.
    pub fn monomial_inverse(&self) -> Option<Coefficient> {
        let (e, r) = self.as_monomial()?;
        Some(Coefficient::monomial(e.neg(), r.recip()))
    }

    /// Constant term (exponent vector zero).
    pub fn constant_term(&self) -> Rat {
        self.terms.get(&ExponentVector::new()).cloned().unwrap_or_else(Rat::zero)
    }

    /// Move this coefficient from the right of `τ^tau` to its left:
    /// each monomial `e^μ` picks up `q^{tau·μ}`.
    pub fn twist_by_tau(&self, tau: &ExponentVector) -> Coefficient {
        if tau.is_zero() {
            return self.clone();
        }
        let q = Symbol::Q.id();
        Coefficient {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.add_at(q, tau_param_pairing(tau, e));
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    pub fn map_monomials(&self, map: &MonomialMap) -> Coefficient {
        Coefficient::from_terms(self.terms.iter().map(|(e, c)| (map.apply(e), c.clone())))
    }

    /// Set `q = 1`.
    pub fn classical_limit(&self) -> Coefficient {
        let q = Symbol::Q.id();
        Coefficient::from_terms(self.terms.iter().map(|(e, c)| (e.without(q), c.clone())))
    }

    pub fn q_degree_range(&self) -> Option<(i32, i32)> {
        let q = Symbol::Q.id();
        let mut it = self.terms.keys().map(|e| e.get(q));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn specialize(&self, a: &Assignment) -> Result<Rat> {
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            total += c * a.eval_monomial(e)?;
        }
        Ok(total)
    }

    /// Substitute only the symbols present in `a`, leaving the rest symbolic.
    pub fn specialize_partial(&self, a: &Assignment) -> Result<Coefficient> {
        let mut out = Coefficient::zero();
        for (e, c) in &self.terms {
            let mut rest = ExponentVector::new();
            let mut fixed = ExponentVector::new();
            for (id, k) in e.iter() {
                if a.contains_id(id) {
                    fixed.set(id, k);
                } else {
                    rest.set(id, k);
                }
            }
            out.add_term(rest, c * a.eval_monomial(&fixed)?);
        }
        Ok(out)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        let mut ids: Vec<u8> = self.terms.keys().flat_map(|e| e.ids()).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter().map(Symbol::param_from_id)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, r)| {
                    json!({
                        "exponents": exponents_json(e, Symbol::param_from_id),
                        "numerator": r.numer().to_string(),
                        "denominator": r.denom().to_string(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Coefficient> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("coefficient must be a list".into()))?;
        let mut c = Coefficient::zero();
        for t in arr {
            let exps = exponents_from_json(&t["exponents"], |s| {
                let sym: Symbol = s.parse()?;
                if sym.block() != super::symbols::Block::Param {
                    return Err(Error::Parse(format!("`{s}` is not a parameter")));
                }
                Ok(sym.id())
            })?;
            let num: BigInt = parse_int(&t["numerator"])?;
            let den: BigInt = parse_int(&t["denominator"])?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            c.add_term(exps, Rat::new(num, den));
        }
        Ok(c)
    }
}

fn parse_int(v: &Value) -> Result<BigInt> {
    v.as_str()
        .ok_or_else(|| Error::Parse("expected decimal string".into()))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {v}")))
}

pub(crate) fn exponents_json(e: &ExponentVector, name: fn(u8) -> Symbol) -> Value {
    let mut m = serde_json::Map::new();
    for (id, k) in e.iter() {
        m.insert(name(id).name(), json!(k));
    }
    Value::Object(m)
}

pub(crate) fn exponents_from_json(v: &Value, id_of: impl Fn(&str) -> Result<u8>) -> Result<ExponentVector> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("exponents must be an object".into()))?;
    let mut e = ExponentVector::new();
    for (k, val) in obj {
        let n = val.as_i64().ok_or_else(|| Error::Parse(format!("exponent of {k} must be an integer")))?;
        e.add_at(id_of(k)?, n as i32);
    }
    Ok(e)
}

pub(crate) fn fmt_monomial(
    f: &mut fmt::Formatter<'_>,
    e: &ExponentVector,
    name: fn(u8) -> Symbol,
    first: &mut bool,
) -> fmt::Result {
    for (id, k) in e.iter() {
        if !*first {
            f.write_str("*")?;
        }
        *first = false;
        write!(f, "{}", name(id))?;
        if k != 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, r)) in self.terms.iter().enumerate() {
            let neg = r.is_negative();
            if n > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let a = r.abs();
            let mut first = true;
            if !a.is_one() || e.is_zero() {
                write!(f, "{a}")?;
                first = false;
            }
            fmt_monomial(f, e, Symbol::param_from_id, &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coefficient({self})")
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient { terms: self.terms.iter().map(|(e, r)| (e.clone(), -r.clone())).collect() }
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut out = Coefficient::zero();
        for (ea, ra) in &self.terms {
            for (eb, rb) in &rhs.terms {
                out.add_term(ea.add(eb), ra * rb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: Coefficient) -> Coefficient {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::int(n)
    }
}

impl From<Symbol> for Coefficient {
    fn from(s: Symbol) -> Self {
        Coefficient::sym(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::rat;
    use proptest::prelude::*;

    fn e(k: u8) -> Coefficient {
        Coefficient::sym(Symbol::E(k))
    }

    fn arb_coeff() -> impl Strategy<Value = Coefficient> {
        let term = (proptest::collection::vec((0u8..6, -2i32..=2), 0..3), -5i64..=5, 1i64..=4);
        proptest::collection::vec(term, 0..4).prop_map(|ts| {
            Coefficient::from_terms(ts.into_iter().map(|(ev, n, d)| (ExponentVector::from_pairs(ev), rat(n, d))))
        })
    }

    fn assignment() -> Assignment {
        let mut a = Assignment::new();
        for id in 0u8..6 {
            a.set(Symbol::param_from_id(id), rat(id as i64 + 2, 3));
        }
        a
    }

    #[test]
    fn direct_evaluation() {
        let c = &Coefficient::sym(Symbol::H(1)) * &Coefficient::sym_pow(Symbol::E(1), -1);
        let mut a = Assignment::new();
        a.set(Symbol::H(1), rat(3, 1));
        a.set(Symbol::E(1), rat(2, 1));
        assert_eq!(c.specialize(&a).unwrap(), rat(3, 2));
        assert_eq!(Coefficient::one().specialize(&Assignment::new()).unwrap(), rat(1, 1));
    }

    #[test]
    fn specialize_errors() {
        let c = Coefficient::sym_pow(Symbol::E(1), -1);
        assert_eq!(c.specialize(&Assignment::new()), Err(Error::MissingAssignment("e1".into())));
        let mut a = Assignment::new();
        a.set(Symbol::E(1), rat(0, 1));
        assert_eq!(c.specialize(&a), Err(Error::ZeroToNegativePower("e1".into())));
    }

    #[test]
    fn cancellation_prunes() {
        let c = &e(1) - &e(1);
        assert!(c.is_zero());
        assert_eq!(c, Coefficient::zero());
    }

    #[test]
    fn json_round_trip() {
        let c = &(&e(3) * &Coefficient::q_pow(-2)) + &Coefficient::constant(rat(-7, 5));
        let back = Coefficient::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    proptest! {
        #[test]
        fn specialize_is_ring_homomorphism(a in arb_coeff(), b in arb_coeff()) {
            let s = assignment();
            prop_assert_eq!(
                (&a * &b).specialize(&s).unwrap(),
                a.specialize(&s).unwrap() * b.specialize(&s).unwrap()
            );
            prop_assert_eq!(
                (&a + &b).specialize(&s).unwrap(),
                a.specialize(&s).unwrap() + b.specialize(&s).unwrap()
            );
        }

        #[test]
        fn ring_laws(a in arb_coeff(), b in arb_coeff(), c in arb_coeff()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn no_zero_terms(a in arb_coeff(), b in arb_coeff()) {
            let p = &a * &b;
            prop_assert!(p.terms().all(|(_, r)| !r.is_zero()));
        }
    }
}
