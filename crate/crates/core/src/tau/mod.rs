//! Tau functions on the E8 lattice orbit of the seed classes, and the
//! bilinear relations among them.

mod numeric;
mod relations;

pub use numeric::{fit_seeds, numeric_value, SeedFit};
pub use relations::{
    ex_bilinear, example_values, hirota_miwa, hirota_miwa_printed, seed_relations, transport_relation, verify_relation,
    BilinearRelation, RelationReport, Term,
};

use std::collections::{BTreeMap, VecDeque};

use crate::coeffring::ExponentVector;
use crate::error::{Error, Result};
use crate::lattice::{GroupSpec, GroupType, LatticeVector};
use crate::skew::SkewElement;
use crate::weyl::{TauSection, WeylAction};

const N: usize = 11;

/// A class `d1 H1 + d2 H2 - Σ m_k E_k` from its nonzero multiplicities.
pub fn class(d1: i32, d2: i32, ms: &[(usize, i32)]) -> LatticeVector {
    let mut l = LatticeVector::new(d1, d2, vec![0; N]);
    for &(k, m) in ms {
        l.set_mk(k, m);
    }
    l
}

/// The fifteen seed classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Seed {
    /// `τ(e_k) = τ_k`.
    E(usize),
    /// `τ(h2/e1) = y σ2/τ1`.
    H2E1,
    /// `τ(h2/e7) = σ2/τ7`.
    H2E7,
    /// `τ(h1/e10) = σ1/τ10`.
    H1E10,
    /// `τ(h1/e11) = x σ1/τ11`.
    H1E11,
}

impl Seed {
    pub fn all() -> Vec<Seed> {
        let mut v: Vec<Seed> = (1..=N).map(Seed::E).collect();
        v.extend([Seed::H2E1, Seed::H2E7, Seed::H1E10, Seed::H1E11]);
        v
    }

    pub fn lambda(self) -> LatticeVector {
        match self {
            Seed::E(k) => LatticeVector::e(N, k),
            Seed::H2E1 => class(0, 1, &[(1, 1)]),
            Seed::H2E7 => class(0, 1, &[(7, 1)]),
            Seed::H1E10 => class(1, 0, &[(10, 1)]),
            Seed::H1E11 => class(1, 0, &[(11, 1)]),
        }
    }

    pub fn section(self) -> TauSection {
        let f = match self {
            Seed::H2E1 => SkewElement::y(),
            Seed::H1E11 => SkewElement::x(),
            _ => SkewElement::one(),
        };
        TauSection { f, lambda: self.lambda() }
    }

    /// The monomial whose coefficient is normalized to 1 on the orbit.
    fn normalization_point(self) -> (i32, i32) {
        match self {
            Seed::H1E11 => (1, 0),
            Seed::H2E1 => (0, 1),
            _ => (0, 0),
        }
    }

    pub fn of(l: &LatticeVector) -> Option<Seed> {
        Seed::all().into_iter().find(|s| s.lambda() == *l)
    }
}

/// A tau function value `F τ^λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauFunction {
    pub lambda: LatticeVector,
    pub seed: Seed,
    pub word: Vec<usize>,
    pub section: TauSection,
}

impl TauFunction {
    pub fn value(&self) -> SkewElement {
        self.section.to_element()
    }
}

/// Scale so that the seed's normalization point has coefficient 1: `F(0,0)`
/// in general, `lim x⁻¹F(x,0)` on the orbit of `h1/e11` and
/// `lim y⁻¹F(0,y)` on the orbit of `h2/e1`.
fn normalize(s: &TauSection, seed: Seed) -> Result<TauSection> {
    let (i, j) = seed.normalization_point();
    if (i, j) != (0, 0) && !s.f.coeff_xy(0, 0).is_zero() {
        return Err(Error::Normalization(format!("F(0,0) ≠ 0 on the orbit of {seed:?} at λ = {}", s.lambda)));
    }
    let c = s.f.coeff_xy(i, j);
    let inv = c
        .monomial_inverse()
        .ok_or_else(|| Error::Normalization(format!("value {c} at x^{i} y^{j} for λ = {}", s.lambda)))?;
    Ok(TauSection { f: s.f.left_mul_coeff(&inv), lambda: s.lambda.clone() })
}

/// The E8 tau system.
pub struct TauSystem {
    pub action: WeylAction,
}

impl Default for TauSystem {
    fn default() -> Self {
        Self::new(WeylAction::new(GroupSpec::new(GroupType::E8)))
    }
}

impl TauSystem {
    pub fn new(action: WeylAction) -> Self {
        TauSystem { action }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.action.spec
    }

    /// `τ(λ) = w(τ(λ0))` for the seed `λ0 = w⁻¹(λ)`, normalized.
    pub fn evaluate(&self, l: &LatticeVector, word: &[usize]) -> Result<TauFunction> {
        self.spec().check_word(word)?;
        let inverse: Vec<usize> = word.iter().rev().copied().collect();
        let l0 = self.spec().star_word(&inverse, l);
        let seed = Seed::of(&l0)
            .ok_or_else(|| Error::Mismatch(format!("word {word:?} does not carry a seed class to {l}")))?;
        let raw = self.action.apply_word(word, &seed.section())?;
        Ok(TauFunction { lambda: l.clone(), seed, word: word.to_vec(), section: normalize(&raw, seed)? })
    }

    /// Evaluate along a shortest word from the seeds.
    pub fn tau(&self, l: &LatticeVector, max_len: usize) -> Result<TauFunction> {
        let word = self
            .shortest_word(l, max_len)
            .ok_or_else(|| Error::Invalid(format!("{l} not reached from the seeds within {max_len} steps")))?;
        self.evaluate(l, &word)
    }

    pub fn shortest_word(&self, l: &LatticeVector, max_len: usize) -> Option<Vec<usize>> {
        let mut seen: BTreeMap<LatticeVector, Vec<usize>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for s in Seed::all() {
            seen.insert(s.lambda(), vec![]);
            queue.push_back(s.lambda());
        }
        while let Some(cur) = queue.pop_front() {
            let w = seen[&cur].clone();
            if cur == *l {
                return Some(w);
            }
            if w.len() == max_len {
                continue;
            }
            for g in 0..self.spec().rank() {
                let next = self.spec().star_action(g, &cur);
                if !seen.contains_key(&next) {
                    let mut nw = vec![g];
                    nw.extend(&w);
                    seen.insert(next.clone(), nw);
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// All words up to `max_len` without immediate repeats, grouped by the
    /// class they reach from each seed.
    pub fn words_to(&self, max_len: usize) -> BTreeMap<LatticeVector, Vec<Vec<usize>>> {
        let mut out: BTreeMap<LatticeVector, Vec<Vec<usize>>> = BTreeMap::new();
        let mut layer: Vec<(LatticeVector, Vec<usize>)> =
            Seed::all().into_iter().map(|s| (s.lambda(), vec![])).collect();
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for (l, w) in layer {
                for g in 0..self.spec().rank() {
                    if w.len() == max_len || w.first() == Some(&g) {
                        continue;
                    }
                    let mut nw = vec![g];
                    nw.extend(&w);
                    next.push((self.spec().star_action(g, &l), nw));
                }
                out.entry(l).or_default().push(w);
            }
            layer = next;
        }
        out
    }

    /// Check that every pair of words reaching the same class gives the same
    /// normalized value. Returns the classes compared.
    pub fn path_consistency(&self, max_len: usize, limit: usize) -> Result<PathReport> {
        let mut compared = 0;
        let mut failures = Vec::new();
        for (l, words) in self.words_to(max_len) {
            if words.len() < 2 || compared >= limit {
                continue;
            }
            let first = self.evaluate(&l, &words[0])?;
            for w in &words[1..] {
                let other = self.evaluate(&l, w)?;
                if other.section != first.section {
                    failures.push(format!("{l}: {:?} vs {:?}", words[0], w));
                }
            }
            compared += 1;
        }
        Ok(PathReport { classes: compared, failures })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PathReport {
    pub classes: usize,
    pub failures: Vec<String>,
}

/// Remove the tau part of a single-class element: `F τ^λ ↦ F`.
pub fn strip_tau(e: &SkewElement) -> Result<(ExponentVector, SkewElement)> {
    let parts = e.by_tau();
    if parts.len() != 1 {
        return Err(Error::Invalid(format!("{} tau classes in one term", parts.len())));
    }
    let (tau, f) = parts.into_iter().next().unwrap();
    Ok((tau, f))
}
