use super::exponent::ExponentVector;
use super::symbols::{Block, Symbol, SymbolTable};
use crate::error::{Error, Result};

/// Intersection pairing between a TAU exponent vector and a PARAM exponent
/// vector, i.e. the power of `q` in `τ^λ e^μ = q^{λ·μ} e^μ τ^λ`.
///
/// `σ1` pairs with `h2`, `σ2` with `h1`, and `τk` with `ek` (sign `-1`).
pub fn tau_param_pairing(tau: &ExponentVector, param: &ExponentVector) -> i32 {
    let mut s = 0;
    for (id, k) in tau.iter() {
        let partner = match Symbol::tau_from_id(id) {
            Symbol::Sigma(1) => Symbol::H(2).id(),
            Symbol::Sigma(2) => Symbol::H(1).id(),
            Symbol::Tau(j) => {
                s -= k * param.get(Symbol::E(j).id());
                continue;
            }
            _ => unreachable!(),
        };
        s += k * param.get(partner);
    }
    s
}

/// A normal-ordered monomial `e^param · τ^tau · x^x · y^y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistedMonomial {
    pub param: ExponentVector,
    pub tau: ExponentVector,
    pub x: i32,
    pub y: i32,
}

impl TwistedMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn of(sym: Symbol, k: i32) -> Self {
        let mut m = Self::one();
        match sym.block() {
            Block::Param => m.param.set(sym.id(), k),
            Block::Tau => m.tau.set(sym.id(), k),
            Block::Pos => {
                if sym == Symbol::X {
                    m.x = k
                } else {
                    m.y = k
                }
            }
        }
        m
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self.param.ids().map(Symbol::param_from_id).collect();
        out.extend(self.tau.ids().map(Symbol::tau_from_id));
        if self.x != 0 {
            out.push(Symbol::X);
        }
        if self.y != 0 {
            out.push(Symbol::Y);
        }
        out
    }
}

/// `a · b = q^k · (a ⊙ b)` with `⊙` the componentwise product in normal order.
///
/// Moving `b`'s parameters left past `a`'s tau block contributes
/// `⟨a.tau, b.param⟩`, and moving `b`'s `x` past `a`'s `y` contributes
/// `a.y · b.x`.
pub fn monomial_multiply(a: &TwistedMonomial, b: &TwistedMonomial) -> (i32, TwistedMonomial) {
    let k = tau_param_pairing(&a.tau, &b.param) + a.y * b.x;
    let prod = TwistedMonomial { param: a.param.add(&b.param), tau: a.tau.add(&b.tau), x: a.x + b.x, y: a.y + b.y };
    (k, prod)
}

/// Like [`monomial_multiply`] but rejects symbols outside `table`.
pub fn monomial_multiply_in(
    table: &SymbolTable,
    a: &TwistedMonomial,
    b: &TwistedMonomial,
) -> Result<(i32, TwistedMonomial)> {
    for s in a.symbols().into_iter().chain(b.symbols()) {
        if !table.contains(s) {
            return Err(Error::SymbolOutOfTable(s.name()));
        }
    }
    Ok(monomial_multiply(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_mono() -> impl Strategy<Value = TwistedMonomial> {
        (
            proptest::collection::vec((1u8..=13, -3i32..=3), 0..5),
            proptest::collection::vec((0u8..=12, -3i32..=3), 0..5),
            -3i32..=3,
            -3i32..=3,
        )
            .prop_map(|(p, t, x, y)| TwistedMonomial {
                param: ExponentVector::from_pairs(p),
                tau: ExponentVector::from_pairs(t),
                x,
                y,
            })
    }

    fn twist(a: &TwistedMonomial, b: &TwistedMonomial) -> i32 {
        monomial_multiply(a, b).0
    }

    #[test]
    fn defining_relations() {
        let x = TwistedMonomial::of(Symbol::X, 1);
        let y = TwistedMonomial::of(Symbol::Y, 1);
        assert_eq!(monomial_multiply(&y, &x), (1, TwistedMonomial { x: 1, y: 1, ..Default::default() }));
        assert_eq!(monomial_multiply(&x, &y).0, 0);

        let t1 = TwistedMonomial::of(Symbol::Tau(1), 1);
        let e1 = TwistedMonomial::of(Symbol::E(1), 1);
        let (k, p) = monomial_multiply(&t1, &e1);
        assert_eq!(k, -1);
        assert_eq!(p.param.get(Symbol::E(1).id()), 1);
        assert_eq!(p.tau.get(Symbol::Tau(1).id()), 1);

        let s1 = TwistedMonomial::of(Symbol::Sigma(1), 1);
        let s2 = TwistedMonomial::of(Symbol::Sigma(2), 1);
        let h1 = TwistedMonomial::of(Symbol::H(1), 1);
        let h2 = TwistedMonomial::of(Symbol::H(2), 1);
        assert_eq!(twist(&s1, &h2), 1);
        assert_eq!(twist(&s2, &h1), 1);
        assert_eq!(twist(&s1, &h1), 0);
        assert_eq!(twist(&TwistedMonomial::of(Symbol::Tau(2), 1), &e1), 0);

        let e5 = TwistedMonomial::of(Symbol::E(5), 1);
        assert_eq!(twist(&e5, &x), 0);
        let c = TwistedMonomial::of(Symbol::Const(1), 1);
        assert_eq!(twist(&s1, &c) + twist(&t1, &c) + twist(&y, &c), 0);
    }

    #[test]
    fn symbol_table_mismatch() {
        let table = SymbolTable::new(8);
        let a = TwistedMonomial::of(Symbol::E(10), 1);
        let b = TwistedMonomial::of(Symbol::X, 1);
        assert!(monomial_multiply_in(&table, &a, &b).is_err());
        assert!(monomial_multiply_in(&table, &b, &b).is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn associative_with_q_powers(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let (k1, ab) = monomial_multiply(&a, &b);
            let (k2, ab_c) = monomial_multiply(&ab, &c);
            let (k3, bc) = monomial_multiply(&b, &c);
            let (k4, a_bc) = monomial_multiply(&a, &bc);
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(k1 + k2, k3 + k4);
        }

        #[test]
        fn twist_bilinear(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let bc = monomial_multiply(&b, &c).1;
            let ab = monomial_multiply(&a, &b).1;
            prop_assert_eq!(twist(&a, &bc), twist(&a, &b) + twist(&a, &c));
            prop_assert_eq!(twist(&ab, &c), twist(&a, &c) + twist(&b, &c));
        }
    }

    #[test]
    fn twist_bilinear_exhaustive_small() {
        let gens = [
            Symbol::H(1),
            Symbol::H(2),
            Symbol::E(1),
            Symbol::E(7),
            Symbol::Sigma(1),
            Symbol::Sigma(2),
            Symbol::Tau(1),
            Symbol::Tau(7),
            Symbol::X,
            Symbol::Y,
        ];
        let monos: Vec<TwistedMonomial> =
            gens.iter().flat_map(|&g| (-1..=1).map(move |k| TwistedMonomial::of(g, k))).collect();
        for a in &monos {
            for b in &monos {
                for c in &monos {
                    let bc = monomial_multiply(b, c).1;
                    assert_eq!(twist(a, &bc), twist(a, b) + twist(a, c));
                }
            }
        }
    }
}
