use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeffring::{params, Assignment, ExponentVector, Rat, Symbol};
use crate::error::Result;
use crate::lattice::{GroupSpec, LatticeVector};
use crate::skew::{LinearFactor, SkewElement, UPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    XZero,
    XInf,
    YZero,
    YInf,
}

impl Boundary {
    pub const ALL: [Boundary; 4] = [Boundary::XZero, Boundary::XInf, Boundary::YZero, Boundary::YInf];

    /// The variable whose slices carry the run.
    fn sliced(self) -> Var {
        match self {
            Boundary::XZero | Boundary::XInf => Var::X,
            Boundary::YZero | Boundary::YInf => Var::Y,
        }
    }
}

/// A run of `m` successive exponents at a boundary, in factor form: the
/// boundary slice contains `Π_t (1 + q^t c v)` over the prescribed `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonLogQuery {
    pub d: SkewElement,
    pub boundary: Boundary,
    pub scale: ExponentVector,
    pub m: i32,
    /// Top degree in the sliced variable; used at infinity.
    pub top: i32,
}

impl NonLogQuery {
    pub fn new(d: SkewElement, boundary: Boundary, scale: ExponentVector, m: i32) -> Self {
        let top = d.degree_range(boundary.sliced()).map_or(0, |r| r.1);
        NonLogQuery { d, boundary, scale, m, top }
    }

    pub fn with_top(mut self, top: i32) -> Self {
        self.top = top;
        self
    }

    /// `(slice index, shifts)` pairs: slice `index` must be divisible by
    /// `Π_{t ∈ shifts} (1 + q^t c v)`.
    fn requirements(&self) -> Vec<(i32, std::ops::Range<i32>)> {
        let m = self.m;
        (0..m)
            .map(|i| match self.boundary {
                Boundary::XZero => (i, i..m),
                Boundary::XInf => (self.top - i, 0..m - i),
                Boundary::YZero => (i, i - m..0),
                Boundary::YInf => (self.top - i, 0..m - i),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonLogReport {
    pub boundary: Boundary,
    pub m: i32,
    /// `(slice index, divisible)` in the engine's `(1 + c v)` convention.
    pub slices: Vec<(i32, bool)>,
}

impl NonLogReport {
    pub fn passed(&self) -> bool {
        self.slices.iter().all(|s| s.1)
    }
}

/// Check the factorization pattern of the boundary slices.
pub fn check_nonlog(query: &NonLogQuery) -> NonLogReport {
    let var = query.boundary.sliced();
    let polys = query.d.slices(var);
    let other = var.other();
    let slices = query
        .requirements()
        .into_iter()
        .map(|(idx, ts)| {
            let mut p = Some(polys.get(&idx).cloned().unwrap_or_else(UPoly::zero));
            for t in ts {
                let f = LinearFactor::new(other, query.scale.clone(), t);
                p = p.and_then(|p| p.div_linear(&f.scale_coeff()));
            }
            (idx, p.is_some_and(|u| u.is_zero() || u.low() >= 0))
        })
        .collect();
    NonLogReport { boundary: query.boundary, m: query.m, slices }
}

/// The runs prescribed by the boundary conditions of `λ`.
pub fn boundary_runs(spec: &GroupSpec, l: &LatticeVector) -> Vec<(Boundary, ExponentVector, i32, i32)> {
    use Symbol::{E, H, Q};
    let mut out = Vec::new();
    for &k in &spec.x_template.j {
        out.push((Boundary::XZero, params(&[(E(k as u8), 1)]), l.mk(k), l.d1));
    }
    for &k in &spec.x_template.i {
        let m = l.mk(k);
        out.push((Boundary::XInf, params(&[(Q, l.d1 - m), (H(2), 1), (E(k as u8), -1)]), m, l.d1));
    }
    for &k in &spec.y_template.i {
        out.push((Boundary::YZero, params(&[(E(k as u8), -1)]), l.mk(k), l.d2));
    }
    for &k in &spec.y_template.j {
        out.push((Boundary::YInf, params(&[(E(k as u8), 1), (H(1), -1)]), l.mk(k), l.d2));
    }
    out.retain(|r| r.2 > 0);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesCase {
    /// `c_k` is determined.
    Case1,
    /// Resonance with nonzero obstruction: no power series solution.
    Case2a,
    /// Resonance with vanishing obstruction: `c_k` is free.
    Case2b,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub boundary: Boundary,
    /// Whether the starting exponent is a root of the leading coefficient.
    pub exponent_ok: bool,
    pub steps: Vec<(i32, SeriesCase)>,
    /// The depth did not reach the last expected resonance.
    pub inconclusive: bool,
}

impl SeriesReport {
    pub fn resonances(&self) -> impl Iterator<Item = &(i32, SeriesCase)> {
        self.steps.iter().filter(|s| s.1 != SeriesCase::Case1)
    }

    /// Every resonance is of type 2b.
    pub fn non_logarithmic(&self) -> bool {
        self.exponent_ok && !self.inconclusive && self.resonances().all(|s| s.1 == SeriesCase::Case2b)
    }
}

fn eval(p: &BTreeMap<i32, Rat>, v: &Rat) -> Rat {
    p.iter().fold(Rat::zero(), |acc, (&k, c)| acc + c * pow(v, k))
}

fn pow(v: &Rat, k: i32) -> Rat {
    num_traits::pow::pow(if k >= 0 { v.clone() } else { v.recip() }, k.unsigned_abs() as usize)
}

/// Run the power-series recursion `Σ_{i+j=k} C_i(r q'^j) c_j = 0` from the
/// first exponent of the run, at an exact specialization.
pub fn series_solution_oracle(query: &NonLogQuery, a: &Assignment, depth: i32) -> Result<SeriesReport> {
    let var = query.boundary.sliced();
    let q = a.eval_monomial(&params(&[(Symbol::Q, 1)]))?;
    let c = a.eval_monomial(&query.scale)?;
    let mut slices: BTreeMap<i32, BTreeMap<i32, Rat>> = BTreeMap::new();
    for (i, poly) in query.d.slices(var) {
        let mut m = BTreeMap::new();
        for (k, co) in poly.iter() {
            m.insert(k, co.specialize(a)?);
        }
        slices.insert(i, m);
    }
    let m = query.m;
    let top = query.top;
    let (qq, r) = match query.boundary {
        Boundary::XZero | Boundary::YInf => (q.clone(), -pow(&q, 1 - m) / &c),
        Boundary::XInf => (q.recip(), -c.recip()),
        Boundary::YZero => (q.recip(), -pow(&q, m) / &c),
    };
    let empty = BTreeMap::new();
    let coeff = |i: i32, v: &Rat| -> Rat {
        let (idx, arg) = match query.boundary {
            Boundary::XZero => (i, v.clone()),
            Boundary::XInf => (top - i, v.clone()),
            Boundary::YZero => (i, v * pow(&q, -i)),
            Boundary::YInf => (top - i, v * pow(&q, i)),
        };
        if i < 0 {
            return Rat::zero();
        }
        eval(slices.get(&idx).unwrap_or(&empty), &arg)
    };
    let exponent_ok = coeff(0, &r).is_zero();
    let mut cs = vec![Rat::one()];
    let mut steps = Vec::new();
    for k in 1..=depth {
        let x: Rat = (1..=k)
            .map(|i| coeff(i, &(&r * pow(&qq, k - i))) * &cs[(k - i) as usize])
            .fold(Rat::zero(), |acc, v| acc + v);
        let a0 = coeff(0, &(&r * pow(&qq, k)));
        if a0.is_zero() {
            if x.is_zero() {
                steps.push((k, SeriesCase::Case2b));
                cs.push(Rat::one());
            } else {
                steps.push((k, SeriesCase::Case2a));
                break;
            }
        } else {
            steps.push((k, SeriesCase::Case1));
            cs.push(-x / a0);
        }
    }
    Ok(SeriesReport { boundary: query.boundary, exponent_ok, steps, inconclusive: depth < m - 1 })
}
