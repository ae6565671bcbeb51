use serde::Serialize;

use crate::coeffring::{params, MonomialMap, Symbol};
use crate::lattice::{GroupSpec, LatticeVector};
use crate::skew::{LinearFactor, SkewElement, UPoly, Var};

fn pos(v: i32) -> i32 {
    v.max(0)
}

/// Prescribed boundary factors and free-part degree of one slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceTemplate {
    /// Power of the sliced variable.
    pub index: i32,
    /// Factors in the other variable.
    pub factors: Vec<LinearFactor>,
    /// Degree of the free cofactor; negative means the slice vanishes.
    pub degree: i32,
}

/// The boundary conditions of a class `λ`: `x`-slices `A_i(y)` and
/// `y`-slices `B_j(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionTemplate {
    pub lambda: LatticeVector,
    pub x_slices: Vec<SliceTemplate>,
    pub y_slices: Vec<SliceTemplate>,
}

impl ConditionTemplate {
    pub fn new(spec: &GroupSpec, l: &LatticeVector) -> Self {
        use Symbol::{E, H};
        let (d1, d2) = (l.d1, l.d2);
        let xt = &spec.x_template;
        let yt = &spec.y_template;
        let x_slices = (0..=d1)
            .map(|i| {
                let mut factors = Vec::new();
                let mut degree = d2;
                for &k in &xt.j {
                    let m = l.mk(k);
                    for t in i..m {
                        factors.push(LinearFactor::new(Var::Y, params(&[(E(k as u8), 1)]), t));
                    }
                    degree -= pos(m - i);
                }
                for &k in &xt.i {
                    let m = l.mk(k);
                    for t in d1 - m..i {
                        factors.push(LinearFactor::new(Var::Y, params(&[(H(2), 1), (E(k as u8), -1)]), t));
                    }
                    degree -= pos(i - d1 + m);
                }
                SliceTemplate { index: i, factors, degree }
            })
            .collect();
        let y_slices = (0..=d2)
            .map(|i| {
                let mut factors = Vec::new();
                let mut degree = d1;
                for &k in &yt.i {
                    let m = l.mk(k);
                    for t in i - m..0 {
                        factors.push(LinearFactor::new(Var::X, params(&[(E(k as u8), -1)]), t));
                    }
                    degree -= pos(m - i);
                }
                for &k in &yt.j {
                    let m = l.mk(k);
                    for t in 0..i - d2 + m {
                        factors.push(LinearFactor::new(Var::X, params(&[(E(k as u8), 1), (H(1), -1)]), t));
                    }
                    degree -= pos(i - d2 + m);
                }
                SliceTemplate { index: i, factors, degree }
            })
            .collect();
        ConditionTemplate { lambda: l.clone(), x_slices, y_slices }
    }

    /// Rewrite every factor through a parameter constraint.
    pub fn reduced(&self, map: &MonomialMap) -> Self {
        let red = |ss: &[SliceTemplate]| {
            ss.iter()
                .map(|s| SliceTemplate {
                    index: s.index,
                    factors: s.factors.iter().map(|f| f.mapped(map)).collect(),
                    degree: s.degree,
                })
                .collect()
        };
        ConditionTemplate { lambda: self.lambda.clone(), x_slices: red(&self.x_slices), y_slices: red(&self.y_slices) }
    }

    pub fn slices(&self, var: Var) -> &[SliceTemplate] {
        match var {
            Var::X => &self.x_slices,
            Var::Y => &self.y_slices,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceCheck {
    /// The sliced variable.
    pub var: Var,
    pub index: i32,
    pub divisible: bool,
    pub degree_ok: bool,
}

impl SliceCheck {
    pub fn passed(&self) -> bool {
        self.divisible && self.degree_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// Every monomial of `F` lies in `[0, d1] × [0, d2]`.
    pub in_box: bool,
    pub slices: Vec<SliceCheck>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.in_box && self.slices.iter().all(SliceCheck::passed)
    }

    pub fn failing(&self) -> impl Iterator<Item = &SliceCheck> {
        self.slices.iter().filter(|s| !s.passed())
    }
}

fn check_slice(var: Var, st: &SliceTemplate, poly: &UPoly) -> SliceCheck {
    let mut p = Some(poly.clone());
    for f in &st.factors {
        p = p.and_then(|p| p.div_linear(&f.scale_coeff()));
    }
    let degree_ok = match &p {
        Some(u) if u.is_zero() => true,
        Some(u) => st.degree >= 0 && u.low() >= 0 && u.high().is_some_and(|h| h <= st.degree),
        None => false,
    };
    SliceCheck { var, index: st.index, divisible: p.is_some(), degree_ok }
}

/// Check every slice of `F` against the template.
pub fn check_conditions(t: &ConditionTemplate, f: &SkewElement) -> ConditionReport {
    let (d1, d2) = (t.lambda.d1, t.lambda.d2);
    let in_box = f.terms().all(|(k, _)| k.tau.is_zero() && (0..=d1).contains(&k.x) && (0..=d2).contains(&k.y));
    let mut slices = Vec::new();
    for var in [Var::X, Var::Y] {
        let polys = f.slices(var);
        for st in t.slices(var) {
            let poly = polys.get(&st.index).cloned().unwrap_or_else(UPoly::zero);
            slices.push(check_slice(var, st, &poly));
        }
    }
    ConditionReport { in_box, slices }
}
