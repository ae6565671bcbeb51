//! The quantum birational action on tau sections `F(x, y) τ^λ`.

mod action;
pub mod examples;

pub use action::{Mode, Mutation, WeylAction};

use serde_json::{json, Value};

use crate::coeffring::Coefficient;
use crate::error::{Error, Result};
use crate::lattice::{ActionProbe, GroupSpec, LatticeVector};
use crate::skew::SkewElement;

/// `F(x, y) τ^λ` with `F` a tau-free Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSection {
    pub f: SkewElement,
    pub lambda: LatticeVector,
}

impl TauSection {
    /// `1 · τ^λ`.
    pub fn unit(lambda: LatticeVector) -> Self {
        TauSection { f: SkewElement::one(), lambda }
    }

    /// The seed `τ_k = 1 · τ^{E_k}`.
    pub fn seed(spec: &GroupSpec, k: usize) -> Self {
        Self::unit(LatticeVector::e(spec.n, k))
    }

    /// `F · τ^λ` as a single element.
    pub fn to_element(&self) -> SkewElement {
        self.f.right_mul_tau(&self.lambda.tau_vec())
    }

    pub fn classical_limit(&self) -> Self {
        TauSection { f: self.f.classical_limit(), lambda: self.lambda.clone() }
    }

    /// Scale `F` so that its normalization point takes the value 1.
    ///
    /// The point is `F(0,0)`; if that vanishes, the lowest nonzero of the
    /// `x`-linear and `y`-linear terms is used instead. The chosen value
    /// must be a monomial.
    pub fn normalized(&self) -> Result<Self> {
        let c = [(0, 0), (1, 0), (0, 1)]
            .iter()
            .map(|&(i, j)| self.f.coeff_xy(i, j))
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::Normalization(format!("no normalization point for λ = {}", self.lambda)))?;
        let inv = c
            .monomial_inverse()
            .ok_or_else(|| Error::Normalization(format!("normalization value {c} is not a monomial")))?;
        Ok(TauSection { f: self.f.left_mul_coeff(&inv), lambda: self.lambda.clone() })
    }

    pub fn origin_value(&self) -> Coefficient {
        self.f.origin_value()
    }

    pub fn to_json(&self) -> Value {
        json!({ "lambda": self.lambda.to_json(), "f": self.f.to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let lambda = LatticeVector::from_json(&v["lambda"])?;
        let f = SkewElement::from_json(&v["f"])?;
        Ok(TauSection { f, lambda })
    }
}

/// The quantum action on sections, for relation checking.
pub struct SectionProbe<'a>(pub &'a WeylAction);

impl ActionProbe for SectionProbe<'_> {
    type State = TauSection;
    fn apply(&self, gen: usize, s: &TauSection) -> Result<TauSection> {
        self.0.act_on_section(gen, s)
    }
}

/// Sections `w(τ_k)` for every orbit word up to `depth`, used as probe
/// states.
pub fn orbit_sections(a: &WeylAction, depth: usize) -> Result<Vec<TauSection>> {
    crate::lattice::orbit(&a.spec, depth)
        .entries
        .iter()
        .map(|e| a.apply_word(&e.word, &TauSection::seed(&a.spec, e.seed)))
        .collect()
}

/// `c0 + c1 x + c2 y + c3 xy` with free central constants, on the class
/// `H1 + H2`, where no boundary condition applies.
pub fn generic_bidegree_one(spec: &GroupSpec) -> TauSection {
    use crate::coeffring::Symbol::Const;
    let mut f = SkewElement::zero();
    for (k, (i, j)) in [(0, 0), (1, 0), (0, 1), (1, 1)].into_iter().enumerate() {
        f = &f + &SkewElement::monomial(Coefficient::sym(Const(k as u8)), Default::default(), i, j);
    }
    TauSection { f, lambda: LatticeVector::new(1, 1, vec![0; spec.n]) }
}

/// `c0 (1 + e11 y) + c1 x (1 + h2/e10 y)` on `H1 + H2 - E10 - E11` (E8).
pub fn two_parameter_family() -> TauSection {
    use crate::coeffring::{params, Symbol::*};
    use crate::skew::{LinearFactor, Var};
    let a = LinearFactor::new(Var::Y, params(&[(E(11), 1)]), 0).to_skew();
    let b = LinearFactor::new(Var::Y, params(&[(H(2), 1), (E(10), -1)]), 0).to_skew();
    let f = &SkewElement::constant(Coefficient::sym(Const(0))) * &a
        + &SkewElement::monomial(Coefficient::sym(Const(1)), Default::default(), 1, 0) * &b;
    let mut m = vec![0; 11];
    m[9] = 1;
    m[10] = 1;
    TauSection { f, lambda: LatticeVector::new(1, 1, m) }
}

/// Probe states for relation checks: the generic bidegree-(1,1) section,
/// the two-parameter family (E8) and every seed.
pub fn generic_probe_states(spec: &GroupSpec) -> Vec<TauSection> {
    let mut out = vec![generic_bidegree_one(spec)];
    if spec.kind == crate::lattice::GroupType::E8 {
        out.push(two_parameter_family());
    }
    out.extend((1..=spec.n).map(|k| TauSection::seed(spec, k)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct InvariantReport {
    pub checks: usize,
    /// `(invariant, generator, witness)`.
    pub failures: Vec<(String, usize, String)>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `k1 = x τ10/τ11` and `k2 = y τ7 τ8 τ9/(τ1 ... τ6)` for E8.
pub fn k_invariants() -> Vec<(&'static str, SkewElement)> {
    use crate::coeffring::{taus, Symbol::Tau};
    let k1 = SkewElement::monomial(Coefficient::one(), taus(&[(Tau(10), 1), (Tau(11), -1)]), 1, 0);
    let mut t2: Vec<_> = (7..=9).map(|k| (Tau(k), 1)).collect();
    t2.extend((1..=6).map(|k| (Tau(k), -1)));
    let k2 = SkewElement::monomial(Coefficient::one(), taus(&t2), 0, 1);
    vec![("k1", k1), ("k2", k2)]
}

/// Apply every generator to `k1` and `k2` and compare exactly.
pub fn verify_k_invariants(a: &WeylAction) -> Result<InvariantReport> {
    if a.spec.kind != crate::lattice::GroupType::E8 {
        return Err(Error::Invalid("the invariants k1, k2 are defined for E8".into()));
    }
    let mut checks = 0;
    let mut failures = Vec::new();
    for (name, k) in k_invariants() {
        for g in 0..a.spec.rank() {
            checks += 1;
            match a.act_on_element(g, &k) {
                Ok(img) if img == k => {}
                Ok(img) => failures.push((name.to_string(), g, img.to_string())),
                Err(e) => failures.push((name.to_string(), g, e.to_string())),
            }
        }
    }
    Ok(InvariantReport { checks, failures })
}
