//! The reflections `s_i` of x- and y-type as conjugation by ratios of
//! q-factorials: `s_i(X) = G_i⁻¹ r_i(X) G_i`, where `r_i(X)` is `s_i(X)` at
//! `x = y = 0`.

use num_traits::One;
use serde::Serialize;

use super::identities::{mono_name, ratio_plus};
use super::{SVar, Series};
use crate::coeffring::{params, tau_param_pairing, taus, Assignment, ExponentVector, Rat, Symbol};
use crate::error::{Error, Result};
use crate::fpoly::Sampler;
use crate::lattice::Generator;
use crate::skew::{SkewElement, Var};
use crate::tau::strip_tau;
use crate::weyl::WeylAction;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointReport {
    pub generator: usize,
    pub symbol: String,
    pub order: u32,
    pub trials: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

/// `(numerator, denominator, variable)` of `G_g = (num·v)^+ / (den·v)^+`.
fn g_factors(gen: Generator) -> Option<(ExponentVector, ExponentVector, SVar)> {
    use Symbol::{E, H};
    match gen {
        Generator::Swap(..) => None,
        Generator::X(a, b) => Some((params(&[(H(2), 1), (E(a as u8), -1)]), params(&[(E(b as u8), 1)]), SVar::Y)),
        Generator::Y(a, b) => Some((params(&[(E(a as u8), -1)]), params(&[(E(b as u8), 1), (H(1), -1)]), SVar::X)),
    }
}

/// `G_g` with its parameters moved to the left of `τ^tau`.
pub fn g_series(gen: Generator, p: &Assignment, tau: &ExponentVector, order: u32) -> Result<Series> {
    let (num, den, v) = g_factors(gen).ok_or_else(|| Error::Invalid("a swap has no q-factorial form".into()))?;
    let q = p.get(Symbol::Q).ok_or_else(|| Error::MissingAssignment("q".into()))?.clone();
    let value = |m: &ExponentVector| -> Result<Rat> {
        let k = tau_param_pairing(tau, m);
        let s = if k >= 0 { q.clone() } else { q.recip() };
        Ok(p.eval_monomial(m)? * num_traits::pow::pow(s, k.unsigned_abs() as usize))
    };
    let one = Series::one(q.clone(), order);
    Ok(ratio_plus(&one, &value(&num)?, &value(&den)?, v, &q))
}

fn to_series(f: &SkewElement, p: &Assignment, q: &Rat, order: u32) -> Result<Series> {
    let mut s = Series::zero(q.clone(), order);
    for (k, c) in f.terms() {
        if k.x < 0 || k.y < 0 {
            return Err(Error::Invalid("negative power in a polynomial image".into()));
        }
        s.add_term([k.x as u32, k.y as u32, 0, 0], c.specialize(p)?);
    }
    Ok(s)
}

/// The engine's image of `x` or `y` as a series.
fn position_image(a: &WeylAction, g: usize, sym: Symbol, p: &Assignment, order: u32) -> Result<Series> {
    let q = p.get(Symbol::Q).ok_or_else(|| Error::MissingAssignment("q".into()))?.clone();
    let one = Series::one(q.clone(), order);
    let (num, den) = a.position_factors(g).ok_or_else(|| Error::Invalid("a swap has no position factors".into()))?;
    let lin = |f: &crate::skew::LinearFactor| -> Result<Series> {
        let v = if f.var == Var::X { SVar::X } else { SVar::Y };
        Ok(&one + &one.var(p.eval_monomial(&f.scale)?, v))
    };
    let ratio = &lin(&num)? * &lin(&den)?.inverse()?;
    let moved = if num.var == Var::Y { Symbol::X } else { Symbol::Y };
    Ok(match (sym == moved, sym) {
        (false, Symbol::X) => one.var(Rat::one(), SVar::X),
        (false, _) => one.var(Rat::one(), SVar::Y),
        (true, Symbol::X) => &one.var(Rat::one(), SVar::X) * &ratio,
        (true, _) => &ratio * &one.var(Rat::one(), SVar::Y),
    })
}

/// Compare `G⁻¹ r(X) G` with the engine image of `X` at one specialization.
pub fn adjoint_mismatch(a: &WeylAction, g: usize, sym: Symbol, p: &Assignment, order: u32) -> Result<Option<String>> {
    let gen = a.spec.gens[g];
    let q = p.get(Symbol::Q).ok_or_else(|| Error::MissingAssignment("q".into()))?.clone();
    let (expected, conj) = match sym {
        Symbol::X | Symbol::Y => {
            let gs = g_series(gen, p, &ExponentVector::new(), order)?;
            let v = if sym == Symbol::X { SVar::X } else { SVar::Y };
            let r = Series::monomial(q.clone(), order, Rat::one(), v, 1);
            let conj = super::product(&gs.inverse()?, [&r, &gs]);
            (position_image(a, g, sym, p, order)?, conj)
        }
        _ => {
            let img = a.act_on_element(g, &SkewElement::tau(taus(&[(sym, 1)])))?;
            let (t2, f) = strip_tau(&img)?;
            // r(τ) = c τ^{t2}, and τ^{t2} G = G^{t2} τ^{t2}.
            let c = f.coeff_xy(0, 0).specialize(p)?;
            let gs = g_series(gen, p, &ExponentVector::new(), order)?;
            let gt = g_series(gen, p, &t2, order)?;
            let conj = (&gs.inverse()? * &gt).scale(&c);
            (to_series(&f, p, &q, order)?, conj)
        }
    };
    Ok(expected.first_difference(&conj).map(|(m, e, c)| format!("{}: engine {e} vs adjoint {c}", mono_name(&m))))
}

/// The adjoint check for `s_g` on `sym` over `trials` random specializations.
pub fn verify_adjoint_realization(
    a: &WeylAction,
    g: usize,
    sym: Symbol,
    order: u32,
    trials: usize,
    seed: u64,
) -> Result<AdjointReport> {
    if order == 0 {
        return Err(Error::Invalid("truncation order must be at least 1".into()));
    }
    let mut s = Sampler::new(seed);
    let mut witness = None;
    for _ in 0..trials {
        let p = s.assignment(a.spec.n, &[], None);
        if let Some(w) = adjoint_mismatch(a, g, sym, &p, order)? {
            witness = Some(w);
            break;
        }
    }
    Ok(AdjointReport { generator: g, symbol: sym.name(), order, trials, passed: witness.is_none(), witness })
}

/// `x`, `y`, `σ1`, `σ2` and `τ1..τn`.
pub fn adjoint_symbols(n: usize) -> Vec<Symbol> {
    let mut v = vec![Symbol::X, Symbol::Y, Symbol::Sigma(1), Symbol::Sigma(2)];
    v.extend((1..=n as u8).map(Symbol::Tau));
    v
}

/// All non-swap generators against all symbols.
pub fn adjoint_suite(a: &WeylAction, order: u32, trials: usize, seed: u64) -> Result<Vec<AdjointReport>> {
    let mut out = Vec::new();
    for g in 0..a.spec.rank() {
        if matches!(a.spec.gens[g], Generator::Swap(..)) {
            continue;
        }
        for sym in adjoint_symbols(a.spec.n) {
            out.push(verify_adjoint_realization(a, g, sym, order, trials, seed)?);
        }
    }
    Ok(out)
}
