//! The two displayed E8 examples: `s3 s2 s1 s0 s2 s4 s3 (τ1)` and
//! `s0 s3 s4 s0 s2 s3 s2 s1 s0 s2 s4 s3 (τ11)`.

use crate::coeffring::{mono, params, rat, Symbol};
use crate::lattice::LatticeVector;
use crate::skew::{LinearFactor, SkewElement, Var};

use Symbol::{E, H};

pub const EX1_WORD: &str = "3 2 1 0 2 4 3";
pub const EX2_WORD: &str = "0 3 4 0 2 3 2 1 0 2 4 3";

pub fn ex1_lambda() -> LatticeVector {
    LatticeVector::new(2, 1, vec![1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1])
}

pub fn ex2_lambda() -> LatticeVector {
    LatticeVector::new(2, 2, vec![1, 1, 0, 0, 0, 0, 1, 1, 0, 2, 1])
}

pub(crate) fn lin(var: Var, pairs: &[(Symbol, i32)], shift: i32) -> SkewElement {
    LinearFactor::new(var, params(pairs), shift).to_skew()
}

pub(crate) fn c(r: (i64, i64), pairs: &[(Symbol, i32)]) -> SkewElement {
    SkewElement::constant(mono(rat(r.0, r.1), pairs))
}

pub(crate) fn prod(items: &[&SkewElement]) -> SkewElement {
    crate::skew::product(items.iter().copied())
}

pub fn ex1_expected() -> SkewElement {
    let a = lin(Var::X, &[(E(1), 1), (E(7), 1), (E(9), 1), (E(10), 1), (E(11), 1), (H(1), -2), (H(2), -1)], 0);
    let b = lin(Var::X, &[(E(1), -1)], -1);
    let first = &a * &b;
    let second = prod(&[
        &c((1, 1), &[(E(11), 1)]),
        &lin(Var::X, &[(E(7), 1), (H(1), -1)], 0),
        &lin(Var::X, &[(E(9), 1), (H(1), -1)], 0),
        &SkewElement::y(),
    ]);
    &first + &second
}

pub fn ex2_expected() -> SkewElement {
    let y10 = lin(Var::Y, &[(H(2), 1), (E(10), -1)], 0);
    let t1 = prod(&[
        &c((1, 1), &[(E(1), -1), (E(2), -1), (Symbol::Q, -2)]),
        &SkewElement::x_pow(2),
        &y10,
        &lin(Var::Y, &[(H(2), 1), (E(10), -1)], 1),
    ]);
    let inner_y = &(&c((1, 1), &[(E(7), -1)]) + &c((1, 1), &[(E(8), -1)]))
        * &(&c((1, 1), &[(H(1), 1), (H(2), 1), (E(1), -1), (E(2), -1), (E(10), -1)]) * &SkewElement::y());
    let inner = &inner_y + &(&c((1, 1), &[(E(1), -1)]) + &c((1, 1), &[(E(2), -1)]));
    let t2 = prod(&[&c((1, 1), &[(Symbol::Q, -1)]), &SkewElement::x(), &y10, &inner]);
    let t3 = &lin(Var::Y, &[(E(11), 1)], 0)
        * &lin(
            Var::Y,
            &[(H(1), 2), (H(2), 2), (E(1), -1), (E(2), -1), (E(7), -1), (E(8), -1), (E(10), -2), (E(11), -1)],
            -1,
        );
    &(&t1 + &t2) + &t3
}

/// `s3` applied to `c0(1 + e11 y) + c1 x(1 + h2/e10 y)` on `h1h2/(e10 e11)`.
pub fn two_parameter_image() -> (SkewElement, LatticeVector) {
    use Symbol::Const;
    let c0 = SkewElement::constant(crate::coeffring::Coefficient::sym(Const(0)));
    let c1x = SkewElement::monomial(crate::coeffring::Coefficient::sym(Const(1)), Default::default(), 1, 0);
    let first = &(&c0 + &c1x) * &lin(Var::X, &[(E(1), -1)], -1);
    let inner = &(&c0 * &c((1, 1), &[(E(11), 1)]))
        + &(&c1x * &c((1, 1), &[(H(1), 1), (H(2), 1), (E(1), -1), (E(7), -1), (E(10), -1)]));
    let second = prod(&[&lin(Var::X, &[(E(7), 1), (H(1), -1)], 0), &inner, &SkewElement::y()]);
    (&first + &second, LatticeVector::new(2, 1, vec![1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1]))
}
