//! Human-readable rendering. Linear factors `(1 + c·v)` are pulled out of each
//! `y`-slice when they divide it exactly, so printed products stay products.

use std::fmt::Write;

use super::{LinearFactor, SkewElement, UPoly, Var};
use crate::coeffring::{Coefficient, ExponentVector, Symbol};

fn power(out: &mut String, name: &str, k: i32) {
    match k {
        0 => {}
        1 => {
            let _ = write!(out, "*{name}");
        }
        _ => {
            let _ = write!(out, "*{name}^{k}");
        }
    }
}

fn tau_suffix(tau: &ExponentVector) -> String {
    let mut s = String::new();
    for (id, k) in tau.iter() {
        power(&mut s, &Symbol::tau_from_id(id).name(), k);
    }
    s
}

fn coeff_str(c: &Coefficient) -> String {
    if c.len() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// Fully expanded `Σ (coeff)*x^i*y^j*τ...`.
pub(super) fn expanded(p: &SkewElement) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (k, c) in p.terms() {
        let mut s = coeff_str(c);
        power(&mut s, "x", k.x);
        power(&mut s, "y", k.y);
        s.push_str(&tau_suffix(&k.tau));
        parts.push(s);
    }
    parts.join(" + ")
}

/// Repeatedly divide out factors `(1 + c v)` whose `c` is suggested by the
/// two lowest coefficients.
fn peel(poly: &UPoly) -> (Vec<LinearFactor>, UPoly) {
    let mut found = Vec::new();
    let mut p = poly.clone();
    'outer: loop {
        let lo = p.low();
        let Some((e0, _)) = p.coeff(lo).as_monomial().map(|(e, r)| (e.clone(), r.clone())) else {
            break;
        };
        let c1 = p.coeff(lo + 1);
        let candidates: Vec<ExponentVector> = c1.terms().map(|(e, _)| e.sub(&e0)).collect();
        for cand in candidates {
            let shifted = UPoly::from_vec(0, (lo..=p.high().unwrap()).map(|k| p.coeff(k)).collect());
            let f = LinearFactor::new(Var::X, cand, 0);
            if let Some(qt) = shifted.div_linear(&f.scale_coeff()) {
                found.push(f);
                p = UPoly::from_vec(lo, (0..=qt.high().unwrap_or(0)).map(|k| qt.coeff(k)).collect());
                continue 'outer;
            }
        }
        break;
    }
    (found, p)
}

fn upoly_str(p: &UPoly, var: &str) -> String {
    let mut parts = Vec::new();
    for (k, c) in p.iter() {
        let mut s = coeff_str(c);
        power(&mut s, var, k);
        parts.push(s);
    }
    match parts.len() {
        0 => "0".into(),
        1 => parts.pop().unwrap(),
        _ => format!("({})", parts.join(" + ")),
    }
}

/// Sum over `y`-slices, each written as `rest * Π(1 + c x) * y^j * τ`.
pub(super) fn pretty(p: &SkewElement) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (tau, part) in p.by_tau() {
        for (j, slice) in part.slices(Var::Y) {
            let (factors, rest) = peel(&slice);
            let mut s = upoly_str(&rest, "x");
            for f in &factors {
                s.push('*');
                s.push_str(&f.to_string());
            }
            power(&mut s, "y", j);
            s.push_str(&tau_suffix(&tau));
            parts.push(s);
        }
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_are_detected() {
        let a = LinearFactor::new(Var::X, ExponentVector::single(Symbol::E(1).id(), -1), -1);
        let b = LinearFactor::new(Var::X, ExponentVector::unit(Symbol::E(7).id()), 0);
        let p = &a.to_skew() * &b.to_skew();
        let s = p.pretty();
        assert!(s.contains("(1 + q^-1*e1^-1*x)"), "{s}");
        assert!(s.contains("(1 + e7*x)"), "{s}");
    }
}
