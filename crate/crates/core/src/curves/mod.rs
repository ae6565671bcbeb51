//! Weyl-invariant quantum curves under the multiplicative parameter
//! constraint.

pub mod explicit;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeffring::{Assignment, Coefficient, MonomialMap, Symbol};
use crate::error::{Error, Result};
use crate::fpoly::{in_span, solve_linear_system, ConditionTemplate, Sampler};
use crate::lattice::{GroupSpec, GroupType, LatticeVector};
use crate::skew::{LinearFactor, SkewElement, SkewKey, Var};
use crate::weyl::{TauSection, WeylAction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub group: GroupSpec,
    /// The generator-fixed class.
    pub lambda: LatticeVector,
    /// Parameter removed to impose `e^λ = 1`.
    pub eliminated: Symbol,
    /// The monomial multiplying the free central constant.
    pub free_monomial: (i32, i32),
    pub free_constant: Symbol,
}

impl CurveSpec {
    pub fn new(kind: GroupType) -> Self {
        Self::with_group(GroupSpec::new(kind))
    }

    pub fn with_group(group: GroupSpec) -> Self {
        use Symbol::{Const, E};
        let (lambda, eliminated, free_monomial, free_constant) = match group.kind {
            GroupType::E8 => (LatticeVector::new(6, 3, vec![1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3]), E(1), (3, 1), Const(1)),
            GroupType::E7 => (LatticeVector::new(4, 2, vec![1, 1, 1, 1, 1, 1, 1, 1, 2, 2]), E(1), (2, 1), Const(4)),
            GroupType::E6 => (LatticeVector::new(3, 2, vec![1, 1, 1, 1, 1, 1, 2, 1, 1]), E(8), (1, 1), Const(4)),
            GroupType::D5 => (LatticeVector::new(2, 2, vec![1; 8]), E(2), (1, 1), Const(4)),
        };
        CurveSpec { group, lambda, eliminated, free_monomial, free_constant }
    }

    /// `e_k ↦ e_k e^λ`, which removes `e_k` because its multiplicity is 1.
    pub fn constraint_map(&self) -> MonomialMap {
        let img = self.lambda.param_vec().add(&crate::coeffring::params(&[(self.eliminated, 1)]));
        MonomialMap::identity().with(self.eliminated, img)
    }

    pub fn reduce(&self, c: &Coefficient) -> Coefficient {
        c.map_monomials(&self.constraint_map())
    }

    /// The printed curve with coefficients reduced modulo the constraint.
    pub fn explicit_curve(&self) -> SkewElement {
        explicit::curve(self.group.kind).map_coeffs(|c| self.reduce(c))
    }

    pub fn template(&self, l: &LatticeVector) -> ConditionTemplate {
        ConditionTemplate::new(&self.group, l)
    }

    pub fn action(&self) -> WeylAction {
        WeylAction::new(self.group.clone()).with_reduction(self.constraint_map())
    }

    /// A generic specialization satisfying the constraint.
    pub fn constrained_assignment(&self, sm: &mut Sampler) -> Result<Assignment> {
        let mut a = sm.assignment(self.group.n, &[], Some(self.eliminated));
        let v = a.eval_monomial(&self.constraint_map().image(self.eliminated))?;
        a.set(self.eliminated, v);
        Ok(a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSpaceReport {
    pub group: GroupType,
    pub eliminated: String,
    pub constrained_dimension: usize,
    pub unconstrained_dimension: usize,
    /// Dimension for `λ` with the eliminated multiplicity lowered by one.
    pub auxiliary_dimension: usize,
    /// Under the constraint the auxiliary space equals the constrained one.
    pub auxiliary_matches: bool,
    /// The printed curve and the free monomial span the constrained space.
    pub explicit_spans: bool,
}

impl CurveSpaceReport {
    pub fn passed(&self) -> bool {
        self.constrained_dimension == 2
            && self.unconstrained_dimension == 1
            && self.auxiliary_dimension == 2
            && self.auxiliary_matches
            && self.explicit_spans
    }
}

/// Solve the boundary conditions of `λ` with and without the constraint.
pub fn verify_curve_space(cs: &CurveSpec, seed: u64, trials: usize) -> Result<CurveSpaceReport> {
    let mut sm = Sampler::new(seed);
    let k = match cs.eliminated {
        Symbol::E(k) => k as usize,
        s => return Err(Error::Invalid(format!("cannot eliminate {s}"))),
    };
    let mut mu = cs.lambda.clone();
    mu.set_mk(k, mu.mk(k) - 1);
    let t = cs.template(&cs.lambda);
    let tmu = cs.template(&mu);
    let constrained: Vec<Assignment> =
        (0..trials).map(|_| cs.constrained_assignment(&mut sm)).collect::<Result<_>>()?;
    let free: Vec<Assignment> = (0..trials).map(|_| sm.assignment(cs.group.n, &[], None)).collect();
    let sol = solve_linear_system(&t, &constrained)?;
    let sol_free = solve_linear_system(&t, &free)?;
    let aux_free = solve_linear_system(&tmu, &free)?;
    let aux = solve_linear_system(&tmu, &constrained)?;
    let (d1, d2) = (cs.lambda.d1, cs.lambda.d2);
    let auxiliary_matches = aux
        .bases
        .iter()
        .zip(&sol.bases)
        .all(|(ab, lb)| ab.len() == lb.len() && ab.iter().all(|v| in_span(lb, v, d1, d2)));
    let curve = cs.explicit_curve();
    let (fx, fy) = cs.free_monomial;
    let mut explicit_spans = true;
    for (a, basis) in constrained.iter().zip(&sol.bases) {
        let mut a = a.clone();
        a.set(cs.free_constant, crate::coeffring::rat(0, 1));
        let p = curve.specialize(&a)?;
        let mono = SkewElement::monomial(Coefficient::one(), Default::default(), fx, fy);
        explicit_spans &= in_span(basis, &p, d1, d2) && in_span(basis, &mono, d1, d2) && {
            let v = crate::fpoly::box_vector(&p, d1, d2);
            let w = crate::fpoly::box_vector(&mono, d1, d2);
            match (v, w) {
                (Some(v), Some(w)) => crate::fpoly::linalg::rank(&[v, w], ((d1 + 1) * (d2 + 1)) as usize) == 2,
                _ => false,
            }
        };
    }
    Ok(CurveSpaceReport {
        group: cs.group.kind,
        eliminated: cs.eliminated.name(),
        constrained_dimension: sol.dimension,
        unconstrained_dimension: sol_free.dimension,
        auxiliary_dimension: aux_free.dimension,
        auxiliary_matches,
        explicit_spans,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub group: GroupType,
    pub lambda_fixed: bool,
    /// Generators whose image differs from the curve, with a witness.
    pub failures: Vec<(usize, String)>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.lambda_fixed && self.failures.is_empty()
    }
}

/// Apply every generator to the section `(P, λ)` and compare with `P`.
pub fn verify_curve_invariance(cs: &CurveSpec, p: &SkewElement) -> InvarianceReport {
    verify_curve_invariance_with(cs, &cs.action(), p)
}

/// As [`verify_curve_invariance`] with a given (possibly mutated) action.
pub fn verify_curve_invariance_with(cs: &CurveSpec, a: &WeylAction, p: &SkewElement) -> InvarianceReport {
    let s = TauSection { f: p.clone(), lambda: cs.lambda.clone() };
    let lambda_fixed = (0..cs.group.rank()).all(|g| cs.group.star_action(g, &cs.lambda) == cs.lambda);
    let failures = (0..cs.group.rank())
        .into_par_iter()
        .filter_map(|g| match a.act_on_section(g, &s) {
            Err(e) => Some((g, e.to_string())),
            Ok(img) if img.f == *p => None,
            Ok(img) => {
                let d = &img.f - p;
                let (k, c) = d.terms().next().map(|(k, c)| (k.clone(), c.clone())).unwrap();
                Some((g, format!("differs at x^{} y^{}: {}", k.x, k.y, c)))
            }
        })
        .collect();
    InvarianceReport { group: cs.group.kind, lambda_fixed, failures }
}

/// The cross-multiplied form of
/// `s0(P) = P Π_{i=0}^{2} (1 + q^i h2/e10 y)/(1 + q^i e11 y)` for E8,
/// computed directly from the rational image of `x`.
pub fn verify_e8_s0_factor_form(cs: &CurveSpec, p: &SkewElement) -> Result<bool> {
    use Symbol::{E, H};
    if cs.group.kind != GroupType::E8 {
        return Err(Error::Invalid("factor form is stated for E8 only".into()));
    }
    let a = cs.action();
    let num = |t: i32| LinearFactor::new(Var::Y, crate::coeffring::params(&[(H(2), 1), (E(10), -1)]), t).to_skew();
    let den = |t: i32| LinearFactor::new(Var::Y, crate::coeffring::params(&[(E(11), 1)]), t).to_skew();
    let top = cs.lambda.d1;
    let mut lhs = SkewElement::zero();
    for (i, poly) in p.slices(Var::X) {
        let ai = SkewElement::from_slices(Var::X, &[(0, poly)].into_iter().collect())
            .map_coeffs(|c| a.act_on_parameters(0, c));
        let mut term = SkewElement::x_pow(i);
        for t in 0..i {
            term = &term * &num(t);
        }
        term = &term * &ai;
        for t in i..top {
            term = &term * &den(t);
        }
        lhs = &lhs + &term;
    }
    let mut rhs = p.clone();
    for t in 0..3 {
        rhs = &rhs * &num(t);
    }
    for t in 3..top {
        rhs = &rhs * &den(t);
    }
    let red = |e: &SkewElement| e.map_coeffs(|c| cs.reduce(c));
    Ok(red(&lhs) == red(&rhs))
}

/// Key of the free monomial, for inspection.
pub fn free_key(cs: &CurveSpec) -> SkewKey {
    SkewKey::xy(cs.free_monomial.0, cs.free_monomial.1)
}

#[cfg(test)]
mod tests;
