use num_traits::{One, Zero};
use rayon::prelude::*;

use super::linalg::{nullspace, rank, rref};
use super::template::{ConditionTemplate, SliceTemplate};
use crate::coeffring::{Assignment, Coefficient, ExponentVector, Rat};
use crate::error::{Error, Result};
use crate::skew::{SkewElement, SkewKey};

/// Solution space of the boundary conditions at one or more
/// specializations.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub dimension: usize,
    /// Echelonized basis per specialization, with rational coefficients.
    pub bases: Vec<Vec<SkewElement>>,
}

/// Coefficients of `Π (1 + c_t v)` at a specialization, lowest first.
fn numeric_prefactor(st: &SliceTemplate, a: &Assignment) -> Result<Vec<Rat>> {
    let mut p = vec![Rat::one()];
    for f in &st.factors {
        let c = a.eval_monomial(&f.scale)?;
        let mut next = vec![Rat::zero(); p.len() + 1];
        for (k, v) in p.iter().enumerate() {
            next[k] += v;
            next[k + 1] += v * &c;
        }
        p = next;
    }
    Ok(p)
}

fn basis_at(t: &ConditionTemplate, a: &Assignment) -> Result<Vec<Vec<Rat>>> {
    let (d1, d2) = (t.lambda.d1, t.lambda.d2);
    if d1 < 0 || d2 < 0 {
        return Err(Error::Invalid(format!("negative degree in {}", t.lambda)));
    }
    let (n1, n2) = (d1 as usize + 1, d2 as usize + 1);
    let nf = n1 * n2;
    let fi = |i: usize, j: usize| i * n2 + j;
    // Extra unknowns: the free cofactors of every slice.
    let mut cols = nf;
    let mut rows: Vec<Vec<(usize, Rat)>> = Vec::new();
    for (along_x, slices) in [(true, &t.x_slices), (false, &t.y_slices)] {
        for st in slices {
            let s = st.index as usize;
            let len = if along_x { n2 } else { n1 };
            let p = numeric_prefactor(st, a)?;
            let base = cols;
            if st.degree >= 0 {
                cols += st.degree as usize + 1;
            }
            for o in 0..len {
                let f = if along_x { fi(s, o) } else { fi(o, s) };
                let mut row = vec![(f, Rat::one())];
                if st.degree >= 0 {
                    for k in 0..=st.degree as usize {
                        if o >= k && o - k < p.len() {
                            row.push((base + k, -p[o - k].clone()));
                        }
                    }
                }
                rows.push(row);
            }
        }
    }
    let m: Vec<Vec<Rat>> = rows
        .into_iter()
        .map(|entries| {
            let mut r = vec![Rat::zero(); cols];
            for (c, v) in entries {
                r[c] += v;
            }
            r
        })
        .collect();
    let ns = nullspace(&m, cols);
    let proj: Vec<Vec<Rat>> = ns.into_iter().map(|v| v[..nf].to_vec()).collect();
    Ok(rref(&proj, nf))
}

fn to_element(v: &[Rat], d2: i32) -> SkewElement {
    let n2 = d2 as usize + 1;
    SkewElement::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (SkewKey::xy((k / n2) as i32, (k % n2) as i32), Coefficient::constant(c.clone()))),
    )
}

/// Coordinates of a specialized polynomial in the `(d1+1)(d2+1)` box, or
/// `None` if it leaves the box or still has symbolic coefficients.
pub fn box_vector(f: &SkewElement, d1: i32, d2: i32) -> Option<Vec<Rat>> {
    let n2 = d2 as usize + 1;
    let mut v = vec![Rat::zero(); (d1 as usize + 1) * n2];
    for (k, c) in f.terms() {
        if !k.tau.is_zero() || !(0..=d1).contains(&k.x) || !(0..=d2).contains(&k.y) {
            return None;
        }
        let (e, r) = c.as_monomial()?;
        if *e != ExponentVector::new() {
            return None;
        }
        v[k.x as usize * n2 + k.y as usize] = r.clone();
    }
    Some(v)
}

/// Solve the boundary conditions at each specialization.
pub fn solve_linear_system(t: &ConditionTemplate, specs: &[Assignment]) -> Result<LinearSolution> {
    let raw: Vec<Vec<Vec<Rat>>> = specs.par_iter().map(|a| basis_at(t, a)).collect::<Result<_>>()?;
    let dims: Vec<usize> = raw.iter().map(Vec::len).collect();
    if dims.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Genericity(format!("dimensions {dims:?} differ across specializations")));
    }
    let bases = raw.iter().map(|b| b.iter().map(|v| to_element(v, t.lambda.d2)).collect()).collect();
    Ok(LinearSolution { dimension: dims.first().copied().unwrap_or(0), bases })
}

/// Whether a specialized polynomial lies in the span of a basis.
pub fn in_span(basis: &[SkewElement], f: &SkewElement, d1: i32, d2: i32) -> bool {
    let Some(v) = box_vector(f, d1, d2) else { return false };
    let mut rows: Vec<Vec<Rat>> = match basis.iter().map(|b| box_vector(b, d1, d2)).collect() {
        Some(r) => r,
        None => return false,
    };
    let cols = v.len();
    let r0 = rank(&rows, cols);
    rows.push(v);
    rank(&rows, cols) == r0
}
