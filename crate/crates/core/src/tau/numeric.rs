//! Commutative specializations: fit `x, y, σ, τ` to prescribed seed values
//! and evaluate tau functions as numbers.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Seed;
use crate::coeffring::{Assignment, Rat, Symbol};
use crate::error::{Error, Result};
use crate::skew::SkewElement;

#[derive(Clone, Debug, PartialEq)]
pub struct SeedFit {
    pub params: Assignment,
    pub taus: BTreeMap<Symbol, Rat>,
    pub x: Rat,
    pub y: Rat,
}

fn pow(v: &Rat, k: i32) -> Rat {
    num_traits::pow::pow(if k >= 0 { v.clone() } else { v.recip() }, k.unsigned_abs() as usize)
}

/// Solve for the fifteen variables from the fifteen seed values. The
/// parameters must have `q = 1`.
pub fn fit_seeds(params: Assignment, values: &BTreeMap<Seed, Rat>) -> Result<SeedFit> {
    if params.get(Symbol::Q) != Some(&Rat::one()) {
        return Err(Error::Invalid("seed fitting needs q = 1".into()));
    }
    let v = |s: Seed| -> Result<Rat> {
        match values.get(&s) {
            Some(r) if !r.is_zero() => Ok(r.clone()),
            _ => Err(Error::MissingAssignment(format!("{s:?}"))),
        }
    };
    let mut taus = BTreeMap::new();
    for k in 1..=11 {
        taus.insert(Symbol::Tau(k as u8), v(Seed::E(k))?);
    }
    let t = |k: u8| taus[&Symbol::Tau(k)].clone();
    let s2 = v(Seed::H2E7)? * t(7);
    let s1 = v(Seed::H1E10)? * t(10);
    let y = v(Seed::H2E1)? * t(1) / &s2;
    let x = v(Seed::H1E11)? * t(11) / &s1;
    taus.insert(Symbol::Sigma(1), s1);
    taus.insert(Symbol::Sigma(2), s2);
    Ok(SeedFit { params, taus, x, y })
}

/// The value of an element at a fitted point.
pub fn numeric_value(e: &SkewElement, fit: &SeedFit) -> Result<Rat> {
    let mut total = Rat::zero();
    for (k, c) in e.terms() {
        let mut v = c.specialize(&fit.params)? * pow(&fit.x, k.x) * pow(&fit.y, k.y);
        for (id, p) in k.tau.iter() {
            let s = Symbol::tau_from_id(id);
            let b = fit.taus.get(&s).ok_or_else(|| Error::MissingAssignment(s.name()))?;
            v *= pow(b, p);
        }
        total += v;
    }
    Ok(total)
}
