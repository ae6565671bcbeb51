use serde::Serialize;

use super::{class, TauSystem};
use crate::coeffring::{params, rat, taus, Coefficient, ExponentVector, Symbol};
use crate::error::Result;
use crate::lattice::LatticeVector;
use crate::skew::{LinearFactor, SkewElement};
use crate::weyl::TauSection;

use Symbol::{Sigma, Tau, E, H};

/// `coeff · τ(left) τ(right)`, in this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coefficient,
    pub left: LatticeVector,
    pub right: LatticeVector,
}

impl Term {
    pub fn new(coeff: Coefficient, left: LatticeVector, right: LatticeVector) -> Self {
        Term { coeff, left, right }
    }

    fn unit(left: LatticeVector, right: LatticeVector) -> Self {
        Self::new(Coefficient::one(), left, right)
    }

    pub fn class(&self) -> LatticeVector {
        self.left.add(&self.right)
    }

    fn value(&self, tau: &dyn Fn(&LatticeVector) -> Result<TauSection>) -> Result<SkewElement> {
        let l = tau(&self.left)?.to_element();
        let r = tau(&self.right)?.to_element();
        Ok(&(&SkewElement::constant(self.coeff.clone()) * &l) * &r)
    }
}

/// `lhs = Σ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearRelation {
    pub name: String,
    pub lhs: Term,
    pub rhs: Vec<Term>,
}

impl BilinearRelation {
    pub fn lattice_sums_match(&self) -> bool {
        let c = self.lhs.class();
        self.rhs.iter().all(|t| t.class() == c)
    }

    pub fn classes(&self) -> Vec<LatticeVector> {
        std::iter::once(&self.lhs).chain(&self.rhs).flat_map(|t| [t.left.clone(), t.right.clone()]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub name: String,
    pub lattice_ok: bool,
    pub passed: bool,
    /// A monomial of `lhs - rhs` when the relation fails.
    pub witness: Option<String>,
}

fn report(r: &BilinearRelation, diff: SkewElement) -> RelationReport {
    let witness = diff.terms().next().map(|(k, c)| format!("x^{} y^{} tau {:?}: {}", k.x, k.y, k.tau, c));
    RelationReport { name: r.name.clone(), lattice_ok: r.lattice_sums_match(), passed: diff.is_zero(), witness }
}

/// Evaluate both sides with the given tau values and compare exactly.
pub fn verify_relation(
    r: &BilinearRelation,
    tau: &dyn Fn(&LatticeVector) -> Result<TauSection>,
) -> Result<RelationReport> {
    let mut diff = r.lhs.value(tau)?;
    for t in &r.rhs {
        diff = &diff - &t.value(tau)?;
    }
    Ok(report(r, diff))
}

/// Apply a word to every coefficient and tau value of a relation and check
/// the image exactly.
pub fn transport_relation(
    sys: &TauSystem,
    r: &BilinearRelation,
    word: &[usize],
    tau: &dyn Fn(&LatticeVector) -> Result<TauSection>,
) -> Result<(BilinearRelation, RelationReport)> {
    let a = &sys.action;
    let coeff = |c: &Coefficient| word.iter().rev().fold(c.clone(), |acc, &g| a.act_on_parameters(g, &acc));
    let image = |l: &LatticeVector| -> Result<SkewElement> { Ok(a.apply_word(word, &tau(l)?)?.to_element()) };
    let term = |t: &Term| -> Result<(Term, SkewElement)> {
        let c = coeff(&t.coeff);
        let v = &(&SkewElement::constant(c.clone()) * &image(&t.left)?) * &image(&t.right)?;
        let st = |l: &LatticeVector| sys.spec().star_word(word, l);
        Ok((Term::new(c, st(&t.left), st(&t.right)), v))
    };
    let (lhs, mut diff) = term(&r.lhs)?;
    let mut rhs = Vec::new();
    for t in &r.rhs {
        let (nt, v) = term(t)?;
        diff = &diff - &v;
        rhs.push(nt);
    }
    let name = format!("{} by {:?}", r.name, word);
    let out = BilinearRelation { name, lhs, rhs };
    let rep = report(&out, diff);
    Ok((out, rep))
}

fn e(k: usize) -> LatticeVector {
    LatticeVector::e(11, k)
}

fn h2_over(k: usize) -> LatticeVector {
    class(0, 1, &[(k, 1)])
}

fn h1_over(k: usize) -> LatticeVector {
    class(1, 0, &[(k, 1)])
}

fn mono(pairs: &[(Symbol, i32)]) -> Coefficient {
    Coefficient::monomial(params(pairs), crate::coeffring::rat(1, 1))
}

/// The five families of seed relations, with the chains split into
/// consecutive equalities.
pub fn seed_relations() -> Vec<BilinearRelation> {
    let mut out = Vec::new();
    for i in 1..=6 {
        for j in 7..=9 {
            out.push(BilinearRelation {
                name: format!("seed1(i={i},j={j})"),
                lhs: Term::unit(e(10), h2_over(10)),
                rhs: vec![Term::new(mono(&[(H(2), 1), (E(10), -1)]), h2_over(i), e(i)), Term::unit(h2_over(j), e(j))],
            });
            out.push(BilinearRelation {
                name: format!("seed2(i={i},j={j})"),
                lhs: Term::unit(h2_over(11), e(11)),
                rhs: vec![Term::new(Coefficient::sym(E(11)), h2_over(i), e(i)), Term::unit(h2_over(j), e(j))],
            });
        }
    }
    for i in 1..=6 {
        out.push(BilinearRelation {
            name: format!("seed3(i={i})"),
            lhs: Term::unit(e(i), h1_over(i)),
            rhs: vec![Term::new(mono(&[(E(i as u8), -1)]), h1_over(11), e(11)), Term::unit(h1_over(10), e(10))],
        });
    }
    for j in 7..=9 {
        out.push(BilinearRelation {
            name: format!("seed4(j={j})"),
            lhs: Term::unit(h1_over(j), e(j)),
            rhs: vec![
                Term::new(mono(&[(E(j as u8), 1), (H(1), -1)]), h1_over(11), e(11)),
                Term::unit(h1_over(10), e(10)),
            ],
        });
    }
    for (lo, hi) in [(1, 6), (7, 9)] {
        for i in lo..hi {
            out.push(BilinearRelation {
                name: format!("seed5(i={i},{})", i + 1),
                lhs: Term::unit(h2_over(i), e(i)),
                rhs: vec![Term::unit(h2_over(i + 1), e(i + 1))],
            });
        }
    }
    out
}

/// The three-term relation among the classes `h1h2/(e10 e11)` obtained by
/// transporting the fourth seed family with `j = 7` by `s0`.
pub fn ex_bilinear() -> BilinearRelation {
    BilinearRelation {
        name: "ex-bilinear".into(),
        lhs: Term::unit(class(1, 1, &[(7, 1), (10, 1), (11, 1)]), e(7)),
        rhs: vec![
            Term::new(mono(&[(E(7), 1), (E(10), 1), (E(11), 1), (H(1), -1), (H(2), -1)]), h1_over(11), h2_over(10)),
            Term::unit(h1_over(10), h2_over(11)),
        ],
    }
}

/// `α_k` and the product `τ(e_k)τ(h1/e_k)` (or the reverse order for
/// `7 ≤ k ≤ 9`) in the third and fourth seed families.
fn hm_part(k: usize) -> (Coefficient, LatticeVector, LatticeVector) {
    if k <= 6 {
        (mono(&[(E(k as u8), -1)]), e(k), h1_over(k))
    } else {
        (mono(&[(E(k as u8), 1), (H(1), -1)]), h1_over(k), e(k))
    }
}

/// `(α_i - α_j) P_k + (α_j - α_k) P_i + (α_k - α_i) P_j = 0`, eliminating
/// `τ(h1/e10)` and `τ(h1/e11)`.
pub fn hirota_miwa(i: usize, j: usize, k: usize) -> BilinearRelation {
    let (ai, li, ri) = hm_part(i);
    let (aj, lj, rj) = hm_part(j);
    let (ak, lk, rk) = hm_part(k);
    BilinearRelation {
        name: format!("hirota-miwa({i},{j},{k})"),
        lhs: Term::new(&ai - &aj, lk, rk),
        rhs: vec![Term::new(&ak - &aj, li, ri), Term::new(&ai - &ak, lj, rj)],
    }
}

/// The two displayed relations.
pub fn hirota_miwa_printed() -> Vec<BilinearRelation> {
    vec![hirota_miwa(1, 2, 3), hirota_miwa(1, 2, 7)]
}

fn tau_mono(pairs: &[(Symbol, i32)]) -> ExponentVector {
    taus(pairs)
}

fn lin_y(pairs: &[(Symbol, i32)], shift: i32) -> SkewElement {
    LinearFactor::new(crate::skew::Var::Y, params(pairs), shift).to_skew()
}

/// The six tau values displayed with the example relation.
pub fn example_values() -> Vec<(LatticeVector, SkewElement)> {
    let k = Coefficient::monomial(params(&[(E(7), 1), (E(10), 1), (E(11), 1), (H(1), -1), (H(2), -1)]), rat(1, 1));
    let big = &lin_y(&[(E(11), 1)], 0)
        + &(&SkewElement::monomial(k, ExponentVector::new(), 1, 0) * &lin_y(&[(H(2), 1), (E(10), -1)], 0));
    vec![
        (
            class(1, 1, &[(7, 1), (10, 1), (11, 1)]),
            big.right_mul_tau(&tau_mono(&[(Sigma(1), 1), (Sigma(2), 1), (Tau(7), -1), (Tau(10), -1), (Tau(11), -1)])),
        ),
        (LatticeVector::e(11, 7), SkewElement::tau(tau_mono(&[(Tau(7), 1)]))),
        (
            class(1, 0, &[(11, 1)]),
            SkewElement::monomial(Coefficient::one(), tau_mono(&[(Sigma(1), 1), (Tau(11), -1)]), 1, 0),
        ),
        (
            class(0, 1, &[(10, 1)]),
            lin_y(&[(H(2), 1), (E(10), -1)], -1).right_mul_tau(&tau_mono(&[(Sigma(2), 1), (Tau(10), -1)])),
        ),
        (class(1, 0, &[(10, 1)]), SkewElement::tau(tau_mono(&[(Sigma(1), 1), (Tau(10), -1)]))),
        (class(0, 1, &[(11, 1)]), lin_y(&[(E(11), 1)], 0).right_mul_tau(&tau_mono(&[(Sigma(2), 1), (Tau(11), -1)]))),
    ]
}
