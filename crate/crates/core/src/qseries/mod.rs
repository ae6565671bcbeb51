//! Truncated formal power series with exact rational coefficients in
//! `x, y` (with `yx = qc·xy`) and two central variables `u, w`.
//!
//! Coefficients are numbers: the infinite q-factorials have coefficients
//! rational in `q`, so `q` and all parameters are specialized first.

pub mod adjoint;
pub mod identities;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::coeffring::Rat;
use crate::error::{Error, Result};

/// Series variables in normal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SVar {
    X = 0,
    Y = 1,
    U = 2,
    W = 3,
}

pub type Mono = [u32; 4];

fn degree(m: &Mono) -> u32 {
    m.iter().sum()
}

/// `Σ c · x^a y^b u^c w^d`, discarding total degree above `order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    /// Commutation constant: `y x = qc x y`.
    pub qc: Rat,
    pub order: u32,
    terms: BTreeMap<Mono, Rat>,
}

impl Series {
    pub fn zero(qc: Rat, order: u32) -> Self {
        Series { qc, order, terms: BTreeMap::new() }
    }

    pub fn constant(qc: Rat, order: u32, c: Rat) -> Self {
        let mut s = Self::zero(qc, order);
        s.add_term([0; 4], c);
        s
    }

    pub fn one(qc: Rat, order: u32) -> Self {
        Self::constant(qc, order, Rat::one())
    }

    /// `c · v^k`.
    pub fn monomial(qc: Rat, order: u32, c: Rat, v: SVar, k: u32) -> Self {
        let mut m = [0; 4];
        m[v as usize] = k;
        let mut s = Self::zero(qc, order);
        s.add_term(m, c);
        s
    }

    /// A series with the same ring data as `self`.
    pub fn like(&self, c: Rat) -> Self {
        Self::constant(self.qc.clone(), self.order, c)
    }

    pub fn var(&self, c: Rat, v: SVar) -> Self {
        Self::monomial(self.qc.clone(), self.order, c, v, 1)
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if degree(&m) > self.order || c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, order: u32) -> Series {
        let mut s = Series::zero(self.qc.clone(), order.min(self.order));
        for (m, c) in &self.terms {
            s.add_term(*m, c.clone());
        }
        s
    }

    pub fn scale(&self, r: &Rat) -> Series {
        let mut s = Series::zero(self.qc.clone(), self.order);
        for (m, c) in &self.terms {
            s.add_term(*m, c * r);
        }
        s
    }

    fn check(&self, o: &Series) {
        assert_eq!(self.qc, o.qc, "series over different commutation constants");
    }

    /// Formal inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = self.coeff(&[0; 4]);
        if c0.is_zero() {
            return Err(Error::Invalid("series without constant term is not invertible".into()));
        }
        let inv0 = c0.recip();
        // self = c0 (1 - t), inverse = Σ t^k / c0.
        let t = &self.like(Rat::one()) - &self.scale(&inv0);
        let mut acc = self.like(Rat::one());
        let mut pow = self.like(Rat::one());
        for _ in 0..self.order {
            pow = &pow * &t;
            if pow.is_zero() {
                break;
            }
            acc = &acc + &pow;
        }
        Ok(acc.scale(&inv0))
    }

    /// The first monomial where two series differ.
    pub fn first_difference(&self, o: &Series) -> Option<(Mono, Rat, Rat)> {
        let d = self - o;
        d.terms.iter().next().map(|(m, _)| (*m, self.coeff(m), o.coeff(m)))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{m:?}")).collect();
        write!(f, "Series[{}; O({})]", parts.join(" + "), self.order + 1)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        self.check(o);
        let mut s = Series { order: self.order.min(o.order), ..self.clone() }.truncate(self.order.min(o.order));
        for (m, c) in &o.terms {
            s.add_term(*m, c.clone());
        }
        s
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&-Rat::one())
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        self + &(-o)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        self.check(o);
        let order = self.order.min(o.order);
        let mut s = Series::zero(self.qc.clone(), order);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if degree(a) + degree(b) > order {
                    continue;
                }
                // y^{a1} x^{b0} = qc^{a1 b0} x^{b0} y^{a1}
                let k = a[1] * b[0];
                let twist = num_traits::pow::pow(self.qc.clone(), k as usize);
                let m = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
                s.add_term(m, ca * cb * twist);
            }
        }
        s
    }
}

/// Product of series, left to right.
pub fn product<'a>(first: &Series, rest: impl IntoIterator<Item = &'a Series>) -> Series {
    rest.into_iter().fold(first.clone(), |acc, s| &acc * s)
}

/// `(q; q)_k = Π_{i=1}^{k} (1 - q^i)`.
pub fn q_poch_q(q: &Rat, k: u32) -> Rat {
    (1..=k).fold(Rat::one(), |acc, i| acc * (Rat::one() - num_traits::pow::pow(q.clone(), i as usize)))
}

/// `(a; q)_n = Π_{i<n} (1 - a q^i)` for a number `a`.
pub fn poch(a: &Rat, q: &Rat, n: u32) -> Rat {
    (0..n).fold(Rat::one(), |acc, i| acc * (Rat::one() - a * num_traits::pow::pow(q.clone(), i as usize)))
}

/// `(κ v; q)^+_∞ = Π_{i≥0} (1 + q^i κ v) = Σ_k q^{k(k-1)/2} κ^k / (q;q)_k v^k`.
pub fn q_factorial_plus(like: &Series, kappa: &Rat, v: SVar, q: &Rat) -> Series {
    let mut s = like.like(Rat::zero());
    for k in 0..=like.order {
        let c = num_traits::pow::pow(q.clone(), (k * k.saturating_sub(1) / 2) as usize)
            * num_traits::pow::pow(kappa.clone(), k as usize)
            / q_poch_q(q, k);
        s = &s + &Series::monomial(like.qc.clone(), like.order, c, v, k);
    }
    s
}

/// The conventional `(κ v; q)_∞ = Π (1 - q^i κ v)`.
pub fn q_factorial(like: &Series, kappa: &Rat, v: SVar, q: &Rat) -> Series {
    q_factorial_plus(like, &-kappa.clone(), v, q)
}

/// `Π_{i<n} (1 + q^i κ v)`, a polynomial.
pub fn q_factorial_plus_finite(like: &Series, kappa: &Rat, v: SVar, q: &Rat, n: u32) -> Series {
    (0..n).fold(like.like(Rat::one()), |acc, i| {
        let c = kappa * num_traits::pow::pow(q.clone(), i as usize);
        &acc * &(&like.like(Rat::one()) + &like.var(c, v))
    })
}

#[cfg(test)]
mod tests;
