//! Normal-ordered skew Laurent polynomials `Σ c · τ^λ x^i y^j` with `yx = qxy`
//! and the parameter/tau twist folded into the coefficients.

mod factor;
mod pretty;
mod upoly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

pub use factor::{FactorBag, LinearFactor, Var};
pub use upoly::UPoly;

use crate::coeffring::{
    exponents_from_json, exponents_json, Assignment, Coefficient, ExponentVector, MonomialMap, Symbol,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewKey {
    pub tau: ExponentVector,
    pub x: i32,
    pub y: i32,
}

impl SkewKey {
    pub fn xy(x: i32, y: i32) -> Self {
        SkewKey { tau: ExponentVector::new(), x, y }
    }
}

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewElement {
    terms: BTreeMap<SkewKey, Coefficient>,
}

impl SkewElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        Self::monomial(c, ExponentVector::new(), 0, 0)
    }

    pub fn monomial(c: Coefficient, tau: ExponentVector, x: i32, y: i32) -> Self {
        let mut s = Self::zero();
        s.add_term(SkewKey { tau, x, y }, c);
        s
    }

    pub fn x_pow(i: i32) -> Self {
        Self::monomial(Coefficient::one(), ExponentVector::new(), i, 0)
    }

    pub fn y_pow(j: i32) -> Self {
        Self::monomial(Coefficient::one(), ExponentVector::new(), 0, j)
    }

    pub fn x() -> Self {
        Self::x_pow(1)
    }

    pub fn y() -> Self {
        Self::y_pow(1)
    }

    pub fn tau(tau: ExponentVector) -> Self {
        Self::monomial(Coefficient::one(), tau, 0, 0)
    }

    pub fn add_term(&mut self, k: SkewKey, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SkewKey, &Coefficient)> {
        self.terms.iter()
    }

    pub fn from_terms<I: IntoIterator<Item = (SkewKey, Coefficient)>>(it: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in it {
            s.add_term(k, c);
        }
        s
    }

    pub fn coeff(&self, tau: &ExponentVector, x: i32, y: i32) -> Coefficient {
        self.terms.get(&SkewKey { tau: tau.clone(), x, y }).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^i y^j` in a tau-free element.
    pub fn coeff_xy(&self, x: i32, y: i32) -> Coefficient {
        self.coeff(&ExponentVector::new(), x, y)
    }

    pub fn has_tau(&self) -> bool {
        self.terms.keys().any(|k| !k.tau.is_zero())
    }

    /// Split into tau-free parts keyed by tau monomial: `Σ_T F_T · τ^T`.
    pub fn by_tau(&self) -> BTreeMap<ExponentVector, SkewElement> {
        let mut out: BTreeMap<ExponentVector, SkewElement> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.tau.clone()).or_default().add_term(SkewKey::xy(k.x, k.y), c.clone());
        }
        out
    }

    /// `c · self` for a PARAM coefficient `c` (no twist on the left).
    pub fn left_mul_coeff(&self, c: &Coefficient) -> SkewElement {
        Self::from_terms(self.terms.iter().map(|(k, a)| (k.clone(), c * a)))
    }

    /// `self · c` for a PARAM coefficient `c`.
    pub fn right_mul_coeff(&self, c: &Coefficient) -> SkewElement {
        Self::from_terms(self.terms.iter().map(|(k, a)| (k.clone(), a * &c.twist_by_tau(&k.tau))))
    }

    /// `self · τ^tau`; tau variables commute with `x`, `y`.
    pub fn right_mul_tau(&self, tau: &ExponentVector) -> SkewElement {
        Self::from_terms(self.terms.iter().map(|(k, a)| (SkewKey { tau: k.tau.add(tau), x: k.x, y: k.y }, a.clone())))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coefficient) -> Coefficient) -> SkewElement {
        Self::from_terms(self.terms.iter().map(|(k, a)| (k.clone(), f(a))))
    }

    pub fn map_params(&self, map: &MonomialMap) -> SkewElement {
        self.map_coeffs(|c| c.map_monomials(map))
    }

    /// Set `q = 1` everywhere.
    pub fn classical_limit(&self) -> SkewElement {
        self.map_coeffs(Coefficient::classical_limit)
    }

    pub fn specialize(&self, a: &Assignment) -> Result<SkewElement> {
        let mut out = SkewElement::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), Coefficient::constant(c.specialize(a)?));
        }
        Ok(out)
    }

    pub fn specialize_partial(&self, a: &Assignment) -> Result<SkewElement> {
        let mut out = SkewElement::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.specialize_partial(a)?);
        }
        Ok(out)
    }

    fn require_tau_free(&self, what: &str) -> Result<()> {
        if self.has_tau() {
            return Err(Error::Invalid(format!("{what} needs an element without tau part")));
        }
        Ok(())
    }

    /// `A_i(y)` for `var = X` (the coefficient of `x^i`), or `B_i(x)` for
    /// `var = Y`, returned as an element in the other variable.
    pub fn coefficient_slice(&self, var: Var, power: i32) -> SkewElement {
        Self::from_terms(self.terms.iter().filter_map(|(k, c)| {
            let (p, other) = match var {
                Var::X => (k.x, SkewKey { tau: k.tau.clone(), x: 0, y: k.y }),
                Var::Y => (k.y, SkewKey { tau: k.tau.clone(), x: k.x, y: 0 }),
            };
            (p == power).then(|| (other, c.clone()))
        }))
    }

    /// All slices along `var` as univariate polynomials in the other variable.
    pub fn slices(&self, var: Var) -> BTreeMap<i32, UPoly> {
        let mut maps: BTreeMap<i32, BTreeMap<i32, Coefficient>> = BTreeMap::new();
        for (k, c) in &self.terms {
            let (p, o) = match var {
                Var::X => (k.x, k.y),
                Var::Y => (k.y, k.x),
            };
            maps.entry(p).or_default().insert(o, c.clone());
        }
        maps.into_iter().map(|(p, m)| (p, UPoly::from_map(&m))).collect()
    }

    pub fn from_slices(var: Var, slices: &BTreeMap<i32, UPoly>) -> SkewElement {
        let mut out = SkewElement::zero();
        for (&p, poly) in slices {
            for (o, c) in poly.iter() {
                let key = match var {
                    Var::X => SkewKey::xy(p, o),
                    Var::Y => SkewKey::xy(o, p),
                };
                out.add_term(key, c.clone());
            }
        }
        out
    }

    /// `(min, max)` exponent of `var`, `None` for zero.
    pub fn degree_range(&self, var: Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|k| match var {
            Var::X => k.x,
            Var::Y => k.y,
        });
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    /// The constant term `F(0,0)` of a tau-free element.
    pub fn origin_value(&self) -> Coefficient {
        self.coeff_xy(0, 0)
    }

    /// `Q` with `Q · f = self`.
    pub fn right_divide_exact(&self, f: &LinearFactor) -> Result<SkewElement> {
        self.require_tau_free("division")?;
        let var = f.var;
        let c = f.scale_coeff();
        self.divide_slices(
            var.other(),
            |p| match var {
                Var::Y => c.clone(),
                Var::X => c.shift_q(p),
            },
            f,
        )
    }

    /// `Q` with `f · Q = self`.
    pub fn left_divide_exact(&self, f: &LinearFactor) -> Result<SkewElement> {
        self.require_tau_free("division")?;
        let var = f.var;
        let c = f.scale_coeff();
        self.divide_slices(
            var.other(),
            |p| match var {
                Var::Y => c.shift_q(p),
                Var::X => c.clone(),
            },
            f,
        )
    }

    fn divide_slices(
        &self,
        slice_var: Var,
        scale_for: impl Fn(i32) -> Coefficient,
        f: &LinearFactor,
    ) -> Result<SkewElement> {
        let mut out = BTreeMap::new();
        for (p, poly) in self.slices(slice_var) {
            let qt = poly.div_linear(&scale_for(p)).ok_or_else(|| Error::NotDivisible(format!("slice {p} by {f}")))?;
            out.insert(p, qt);
        }
        Ok(Self::from_slices(slice_var, &out))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| {
                    json!({
                        "tau": exponents_json(&k.tau, Symbol::tau_from_id),
                        "x": k.x,
                        "y": k.y,
                        "coeff": c.to_json(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<SkewElement> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("skew element must be a list".into()))?;
        let mut out = SkewElement::zero();
        for t in arr {
            let tau = match t.get("tau") {
                Some(tv) => exponents_from_json(tv, |s| {
                    let sym: Symbol = s.parse()?;
                    if sym.block() != crate::coeffring::Block::Tau {
                        return Err(Error::Parse(format!("`{s}` is not a tau variable")));
                    }
                    Ok(sym.id())
                })?,
                None => ExponentVector::new(),
            };
            let get_int = |name: &str| -> Result<i32> { Ok(t.get(name).and_then(Value::as_i64).unwrap_or(0) as i32) };
            let key = SkewKey { tau, x: get_int("x")?, y: get_int("y")? };
            out.add_term(key, Coefficient::from_json(&t["coeff"])?);
        }
        Ok(out)
    }

    pub fn pretty(&self) -> String {
        pretty::pretty(self)
    }
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty::expanded(self))
    }
}

impl fmt::Debug for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewElement({self})")
    }
}

impl Add for &SkewElement {
    type Output = SkewElement;
    fn add(self, rhs: &SkewElement) -> SkewElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SkewElement {
    type Output = SkewElement;
    fn sub(self, rhs: &SkewElement) -> SkewElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl Neg for &SkewElement {
    type Output = SkewElement;
    fn neg(self) -> SkewElement {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &SkewElement {
    type Output = SkewElement;
    fn mul(self, rhs: &SkewElement) -> SkewElement {
        let mut out = SkewElement::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let mut c = ca * &cb.twist_by_tau(&ka.tau);
                let k = ka.y * kb.x;
                if k != 0 {
                    c = c.shift_q(k);
                }
                out.add_term(SkewKey { tau: ka.tau.add(&kb.tau), x: ka.x + kb.x, y: ka.y + kb.y }, c);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SkewElement {
            type Output = SkewElement;
            fn $m(self, rhs: SkewElement) -> SkewElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Coefficient> for SkewElement {
    fn from(c: Coefficient) -> Self {
        SkewElement::constant(c)
    }
}

/// Product of elements, left to right.
pub fn product<'a>(items: impl IntoIterator<Item = &'a SkewElement>) -> SkewElement {
    items.into_iter().fold(SkewElement::one(), |acc, e| &acc * e)
}

#[cfg(test)]
mod tests;
