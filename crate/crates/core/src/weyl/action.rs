use std::collections::BTreeMap;

use super::TauSection;
use crate::coeffring::{params, taus, Coefficient, ExponentVector, MonomialMap, Symbol};
use crate::error::{Error, Result};
use crate::lattice::{Generator, GroupSpec, LatticeVector};
use crate::skew::{FactorBag, LinearFactor, SkewElement, UPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Quantum,
    /// `q = 1`: no twists and no `q`-shifts.
    Classical,
}

/// Deliberate corruptions used to show the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Drop the linear factor from the image of `τ_a` under generator `g`.
    DropTauFactor(usize),
    /// Use `q^1` instead of `q^0` in the numerator of the image of `x` or `y`.
    ShiftPositionFactor(usize),
}

/// Image of one tau variable: `bag · τ^tau`, factors on the left.
#[derive(Clone, Debug)]
struct TauImage {
    bag: FactorBag,
    tau: ExponentVector,
}

/// The generator actions of one group type, with optional constraint
/// reduction and mutation.
#[derive(Clone, Debug)]
pub struct WeylAction {
    pub spec: GroupSpec,
    pub mode: Mode,
    pub reduce: Option<MonomialMap>,
    pub mutation: Option<Mutation>,
}

impl WeylAction {
    pub fn new(spec: GroupSpec) -> Self {
        WeylAction { spec, mode: Mode::Quantum, reduce: None, mutation: None }
    }

    pub fn classical(spec: GroupSpec) -> Self {
        WeylAction { mode: Mode::Classical, ..Self::new(spec) }
    }

    pub fn with_reduction(mut self, map: MonomialMap) -> Self {
        self.reduce = Some(map);
        self
    }

    pub fn with_mutation(mut self, m: Mutation) -> Self {
        self.mutation = Some(m);
        self
    }

    fn quantum(&self) -> bool {
        self.mode == Mode::Quantum
    }

    fn twist(&self, f: &LinearFactor, tau: &ExponentVector) -> LinearFactor {
        if self.quantum() {
            f.twisted(tau)
        } else {
            f.clone()
        }
    }

    fn shift(&self, f: &LinearFactor, t: i32) -> LinearFactor {
        if self.quantum() {
            f.shifted(t)
        } else {
            f.clone()
        }
    }

    fn reduce_coeff(&self, c: &Coefficient) -> Coefficient {
        match &self.reduce {
            Some(m) => c.map_monomials(m),
            None => c.clone(),
        }
    }

    pub fn act_on_parameters(&self, g: usize, c: &Coefficient) -> Coefficient {
        self.reduce_coeff(&c.map_monomials(&self.spec.gens[g].param_map()))
    }

    /// `(numerator, denominator)` factors of the rational image of `x`
    /// (x-type) or `y` (y-type).
    pub fn position_factors(&self, g: usize) -> Option<(LinearFactor, LinearFactor)> {
        use Symbol::{E, H};
        let bump = if self.mutation == Some(Mutation::ShiftPositionFactor(g)) { 1 } else { 0 };
        match self.spec.gens[g] {
            Generator::Swap(..) => None,
            Generator::X(a, b) => Some((
                LinearFactor::new(Var::Y, params(&[(H(2), 1), (E(a as u8), -1)]), bump),
                LinearFactor::new(Var::Y, params(&[(E(b as u8), 1)]), 0),
            )),
            Generator::Y(a, b) => Some((
                LinearFactor::new(Var::X, params(&[(E(b as u8), 1), (H(1), -1)]), bump),
                LinearFactor::new(Var::X, params(&[(E(a as u8), -1)]), 0),
            )),
        }
    }

    fn tau_image(&self, g: usize, sym: Symbol) -> TauImage {
        use Symbol::{Sigma, Tau};
        let gen = self.spec.gens[g];
        let (a, b) = gen.indices();
        let (ta, tb) = (Tau(a as u8), Tau(b as u8));
        let same = TauImage { bag: FactorBag::new(), tau: taus(&[(sym, 1)]) };
        let drop = self.mutation == Some(Mutation::DropTauFactor(g));
        let img = |left: Option<LinearFactor>, right: Option<LinearFactor>, t: ExponentVector| {
            let mut bag = FactorBag::new();
            if let Some(f) = left {
                if !(drop && sym == ta) {
                    bag.add(f, 1);
                }
            }
            if let Some(f) = right {
                bag.add(self.twist(&f, &t), 1);
            }
            TauImage { bag, tau: t }
        };
        match gen {
            Generator::Swap(..) => {
                if sym == ta {
                    TauImage { bag: FactorBag::new(), tau: taus(&[(tb, 1)]) }
                } else if sym == tb {
                    TauImage { bag: FactorBag::new(), tau: taus(&[(ta, 1)]) }
                } else {
                    same
                }
            }
            Generator::X(..) => {
                let (beta, alpha) = self.position_factors(g).unwrap();
                let beta = beta.shifted(-beta.shift());
                if sym == ta {
                    img(Some(alpha), None, taus(&[(Sigma(2), 1), (tb, -1)]))
                } else if sym == tb {
                    img(None, Some(beta), taus(&[(Sigma(2), 1), (ta, -1)]))
                } else if sym == Sigma(1) {
                    img(Some(alpha), None, taus(&[(Sigma(1), 1), (Sigma(2), 1), (ta, -1), (tb, -1)]))
                } else {
                    same
                }
            }
            Generator::Y(..) => {
                let (gamma, delta) = self.position_factors(g).unwrap();
                let gamma = gamma.shifted(-gamma.shift());
                if sym == ta {
                    img(Some(gamma), None, taus(&[(Sigma(1), 1), (tb, -1)]))
                } else if sym == tb {
                    img(None, Some(delta), taus(&[(Sigma(1), 1), (ta, -1)]))
                } else if sym == Sigma(2) {
                    img(None, Some(delta), taus(&[(Sigma(1), 1), (Sigma(2), 1), (ta, -1), (tb, -1)]))
                } else {
                    same
                }
            }
        }
    }

    /// `s_g(τ^tau) = bag · τ^T`.
    fn act_on_tau_monomial(&self, g: usize, tau: &ExponentVector) -> (FactorBag, ExponentVector) {
        let mut bag = FactorBag::new();
        let mut acc = ExponentVector::new();
        for (id, p) in tau.iter() {
            let img = self.tau_image(g, Symbol::tau_from_id(id));
            if p > 0 {
                for _ in 0..p {
                    bag.extend(&twisted_bag(self, &img.bag, &acc), 1);
                    acc = acc.add(&img.tau);
                }
            } else {
                for _ in 0..-p {
                    acc = acc.sub(&img.tau);
                    bag.extend(&twisted_bag(self, &img.bag, &acc), -1);
                }
            }
        }
        (bag, acc)
    }

    /// `s_g(F τ^λ) = F' τ^{s*λ}`.
    pub fn act_on_section(&self, g: usize, s: &TauSection) -> Result<TauSection> {
        let gen = self.spec.gens[g];
        let lam2 = gen.star(&s.lambda);
        let pmap = gen.param_map();
        let fm = s.f.map_coeffs(|c| self.reduce_coeff(&c.map_monomials(&pmap)));
        let Some((num, den)) = self.position_factors(g) else {
            return Ok(TauSection { f: fm, lambda: lam2 });
        };
        let (bag, tau) = self.act_on_tau_monomial(g, &s.lambda.tau_vec());
        if tau != lam2.tau_vec() {
            return Err(Error::Mismatch(format!("tau part of s{g} image is not tau^(s*λ) for λ = {}", s.lambda)));
        }
        // The slices run along the variable that the generator moves.
        let slice_var = num.var.other();
        let mut out = BTreeMap::new();
        for (p, poly) in fm.slices(slice_var) {
            let mut factors = FactorBag::new();
            let (lo, hi, sign) = if p >= 0 { (0, p, 1) } else { (p, 0, -1) };
            for t in lo..hi {
                factors.add(self.shift(&num, t), sign);
                factors.add(self.shift(&den, t), -sign);
            }
            let b = match slice_var {
                Var::X => bag.clone(),
                Var::Y => bag.map_keys(|f| self.shift(f, p)),
            };
            factors.extend(&b, 1);
            let factors = match &self.reduce {
                Some(m) => factors.map_keys(|f| f.mapped(m)),
                None => factors,
            };
            out.insert(p, apply_factors(&poly, &factors, g, p, &s.lambda)?);
        }
        Ok(TauSection { f: SkewElement::from_slices(slice_var, &out), lambda: lam2 })
    }

    /// Apply a word written left to right; the rightmost letter acts first.
    pub fn apply_word(&self, word: &[usize], s: &TauSection) -> Result<TauSection> {
        self.spec.check_word(word)?;
        let mut cur = s.clone();
        for &g in word.iter().rev() {
            cur = self.act_on_section(g, &cur)?;
        }
        Ok(cur)
    }

    /// Act on an element with tau part by splitting it into sections.
    pub fn act_on_element(&self, g: usize, e: &SkewElement) -> Result<SkewElement> {
        let mut out = SkewElement::zero();
        for (tau, f) in e.by_tau() {
            let lambda = LatticeVector::from_tau_vec(&tau, self.spec.n)?;
            let img = self.act_on_section(g, &TauSection { f, lambda })?;
            out = &out + &img.f.right_mul_tau(&img.lambda.tau_vec());
        }
        Ok(out)
    }
}

fn twisted_bag(a: &WeylAction, bag: &FactorBag, tau: &ExponentVector) -> FactorBag {
    bag.map_keys(|f| a.twist(f, tau))
}

/// Multiply `poly` by the positive factors and divide exactly by the
/// negative ones.
fn apply_factors(poly: &UPoly, bag: &FactorBag, g: usize, slice: i32, lambda: &LatticeVector) -> Result<UPoly> {
    let mut p = poly.clone();
    for (f, k) in bag.positives() {
        for _ in 0..k {
            p = p.mul_linear(&f.scale_coeff());
        }
    }
    for (f, k) in bag.negatives() {
        for _ in 0..k {
            p = p.div_linear(&f.scale_coeff()).ok_or_else(|| {
                Error::NotDivisible(format!("s{g} on λ = {lambda}: slice {slice} is not divisible by {f}"))
            })?;
        }
    }
    Ok(p)
}
