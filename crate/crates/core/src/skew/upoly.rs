use std::collections::BTreeMap;

use crate::coeffring::Coefficient;

/// Commutative Laurent polynomial in one variable over [`Coefficient`].
///
/// `coeffs[k]` is the coefficient of `v^(low + k)`. Both ends are nonzero,
/// and the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UPoly {
    low: i32,
    coeffs: Vec<Coefficient>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Coefficient) -> Self {
        Self::from_vec(0, vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    /// `1 + c v`.
    pub fn linear(c: Coefficient) -> Self {
        Self::from_vec(0, vec![Coefficient::one(), c])
    }

    pub fn from_vec(low: i32, coeffs: Vec<Coefficient>) -> Self {
        let mut p = UPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_map(m: &BTreeMap<i32, Coefficient>) -> Self {
        let Some((&lo, _)) = m.iter().next() else {
            return Self::zero();
        };
        let hi = *m.keys().next_back().unwrap();
        let coeffs = (lo..=hi).map(|k| m.get(&k).cloned().unwrap_or_default()).collect();
        Self::from_vec(lo, coeffs)
    }

    pub fn to_map(&self) -> BTreeMap<i32, Coefficient> {
        self.iter().map(|(k, c)| (k, c.clone())).collect()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent; `None` for zero.
    pub fn high(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> Coefficient {
        let idx = k - self.low;
        if idx < 0 {
            return Coefficient::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &Coefficient)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(other.low);
        let hi = self.high().unwrap().max(other.high().unwrap());
        let coeffs = (lo..=hi).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        UPoly::from_vec(lo, coeffs)
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Coefficient::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j].add_assign_ref(&(a * b));
                }
            }
        }
        UPoly::from_vec(self.low + other.low, out)
    }

    pub fn mul_coeff(&self, c: &Coefficient) -> UPoly {
        UPoly::from_vec(self.low, self.coeffs.iter().map(|a| c * a).collect())
    }

    /// Multiply by `1 + c v`.
    pub fn mul_linear(&self, c: &Coefficient) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut t = if k < n { self.coeffs[k].clone() } else { Coefficient::zero() };
            if k > 0 {
                t.add_assign_ref(&(c * &self.coeffs[k - 1]));
            }
            out.push(t);
        }
        UPoly::from_vec(self.low, out)
    }

    /// Exact quotient by `1 + c v`, or `None` if the remainder is nonzero.
    ///
    /// Works upward from the lowest coefficient: `r_k = p_k - c r_{k-1}`,
    /// so no coefficient division is needed.
    pub fn div_linear(&self, c: &Coefficient) -> Option<UPoly> {
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        let n = self.coeffs.len();
        if n == 1 {
            return None;
        }
        let mut r: Vec<Coefficient> = Vec::with_capacity(n - 1);
        for k in 0..n - 1 {
            let mut t = self.coeffs[k].clone();
            if k > 0 {
                t.sub_assign_ref(&(c * &r[k - 1]));
            }
            r.push(t);
        }
        let rem = &self.coeffs[n - 1] - &(c * &r[n - 2]);
        rem.is_zero().then(|| UPoly::from_vec(self.low, r))
    }

    /// Substitute `v -> q^k v`.
    pub fn q_shift(&self, k: i32) -> UPoly {
        if k == 0 {
            return self.clone();
        }
        UPoly {
            low: self.low,
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c.shift_q(k * (self.low + n as i32))).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coefficient) -> Coefficient) -> UPoly {
        UPoly::from_vec(self.low, self.coeffs.iter().map(f).collect())
    }
}
