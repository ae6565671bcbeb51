//! The printed curves, before constraint reduction.

use crate::coeffring::{params, rat, Coefficient, ExponentVector, Symbol};
use crate::lattice::GroupType;
use crate::skew::{product, LinearFactor, SkewElement, Var};

use Symbol::{Const, E, H, Q};

fn m(pairs: &[(Symbol, i32)]) -> Coefficient {
    Coefficient::monomial(params(pairs), rat(1, 1))
}

fn sum(cs: impl IntoIterator<Item = Coefficient>) -> Coefficient {
    cs.into_iter().fold(Coefficient::zero(), |a, b| &a + &b)
}

/// `[k]_q = 1 + q + ... + q^{k-1}`.
fn qint(k: i32) -> Coefficient {
    sum((0..k).map(Coefficient::q_pow))
}

fn lin_x(pairs: &[(Symbol, i32)], shift: i32) -> SkewElement {
    LinearFactor::new(Var::X, params(pairs), shift).to_skew()
}

/// `Σ c_k x^k`.
fn xpoly(cs: Vec<(i32, Coefficient)>) -> SkewElement {
    let mut out = SkewElement::zero();
    for (k, c) in cs {
        out = &out + &SkewElement::monomial(c, ExponentVector::new(), k, 0);
    }
    out
}

fn times_y(f: &SkewElement, j: i32) -> SkewElement {
    f * &SkewElement::y_pow(j)
}

fn e(k: u8) -> Coefficient {
    Coefficient::sym(E(k))
}

fn inv_e(k: u8) -> Coefficient {
    m(&[(E(k), -1)])
}

/// `P_0` for E8, with `κ`, `A_{±1}`, `A_{±2}` and `[k]_q` as printed.
pub fn e8_p0() -> SkewElement {
    let a: Vec<Coefficient> = (1..=9u8).map(|i| if i <= 6 { e(i) } else { m(&[(H(1), 1), (E(i), -1)]) }).collect();
    let ainv: Vec<Coefficient> =
        (1..=9u8).map(|i| if i <= 6 { inv_e(i) } else { m(&[(H(1), -1), (E(i), 1)]) }).collect();
    let pairs = |v: &[Coefficient]| {
        let mut s = Coefficient::zero();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                s = &s + &(&v[i] * &v[j]);
            }
        }
        s
    };
    let a1 = sum(a.clone());
    let am1 = sum(ainv.clone());
    let a2 = pairs(&a);
    let am2 = pairs(&ainv);
    let kappa = m(&[(E(7), 1), (E(8), 1), (E(9), 1), (E(10), 1), (E(11), 1), (H(1), -3), (H(2), -1)]);
    let q = Coefficient::q_pow;
    let prod79 = |shift: bool| {
        let fs: Vec<SkewElement> = (7..=9u8)
            .flat_map(|i| {
                let mut v = vec![lin_x(&[(E(i), 1), (H(1), -1)], 0)];
                if shift {
                    v.push(lin_x(&[(E(i), 1), (H(1), -1)], 1));
                }
                v
            })
            .collect();
        product(&fs)
    };
    let c3 = &SkewElement::constant(&q(3) * &Coefficient::sym_pow(E(11), 3)) * &prod79(true);
    let c2_inner = xpoly(vec![(0, qint(3)), (1, &q(1) * &am1), (2, &(&q(1) * &kappa) * &a1), (3, &qint(3) * &kappa)]);
    let c2 = product(&[SkewElement::constant(&q(1) * &Coefficient::sym_pow(E(11), 2)), prod79(false), c2_inner]);
    let k2 = kappa.pow(2);
    let c1 = &SkewElement::constant(e(11))
        * &xpoly(vec![
            (0, qint(3)),
            (1, &qint(2) * &am1),
            (2, &(&kappa * &a1) + &am2),
            (4, &(&kappa * &q(-1)) * &(&(&kappa * &a2) + &am1)),
            (5, &(&(&qint(2) * &k2) * &a1) * &q(-2)),
            (6, &(&qint(3) * &k2) * &q(-3)),
        ]);
    let c0 = product(&(1..=6u8).map(|i| lin_x(&[(E(i), -1)], -1)).collect::<Vec<_>>());
    &(&(&c0 + &times_y(&c1, 1)) + &times_y(&c2, 2)) + &times_y(&c3, 3)
}

/// `P_0 + c1 x^3 y`.
pub fn e8_curve() -> SkewElement {
    &e8_p0() + &SkewElement::monomial(Coefficient::sym(Const(1)), ExponentVector::new(), 3, 1)
}

pub fn e7_curve() -> SkewElement {
    let kappa = m(&[(H(2), 1), (Q, -1), (E(1), -1), (E(2), -1), (E(3), -1), (E(4), -1), (E(9), -1)]);
    let y0 = product(&(1..=4u8).map(|i| lin_x(&[(E(i), -1)], -1)).collect::<Vec<_>>());
    let s1 = sum((5..=8u8).map(|i| m(&[(E(i), 1), (H(1), -1)])).chain((1..=4).map(inv_e)));
    let s2 = sum((5..=8u8).map(|i| m(&[(H(1), 1), (E(i), -1)])).chain((1..=4).map(e)));
    let y1 = xpoly(vec![
        (0, &e(10) * &qint(2)),
        (1, &e(10) * &s1),
        (2, Coefficient::sym(Const(4))),
        (3, &kappa * &s2),
        (4, &(&kappa * &Coefficient::q_pow(-1)) * &qint(2)),
    ]);
    let y2 = &SkewElement::constant(&Coefficient::sym_pow(E(10), 2) * &Coefficient::q_pow(1))
        * &product(&(5..=8u8).map(|i| lin_x(&[(E(i), 1), (H(1), -1)], 0)).collect::<Vec<_>>());
    &(&y0 + &times_y(&y1, 1)) + &times_y(&y2, 2)
}

pub fn e6_curve() -> SkewElement {
    let base = [(H(2), 1), (Q, -1), (E(1), -1), (E(2), -1), (E(3), -1), (E(7), -1)];
    let s = sum((4..=6u8).map(|i| m(&[(H(1), 1), (E(i), -1)])).chain((1..=3).map(e)));
    let mut base2 = base.to_vec();
    base2[1] = (Q, -2);
    let y1 = xpoly(vec![
        (0, &e(8) + &e(9)),
        (1, Coefficient::sym(Const(4))),
        (2, &m(&base) * &s),
        (3, &m(&base2) * &qint(2)),
    ]);
    let y2 = &SkewElement::constant(&e(8) * &e(9))
        * &product(&(4..=6u8).map(|i| lin_x(&[(E(i), 1), (H(1), -1)], 0)).collect::<Vec<_>>());
    let y0 = product(&(1..=3u8).map(|i| lin_x(&[(E(i), -1)], -1)).collect::<Vec<_>>());
    &(&times_y(&y1, 1) + &times_y(&y2, 2)) + &y0
}

pub fn d5_curve() -> SkewElement {
    let y0 = product(&(7..=8u8).map(|i| lin_x(&[(E(i), -1)], -1)).collect::<Vec<_>>());
    let x2 = &(&e(1) + &e(2)) * &m(&[(H(2), 1), (Q, -1), (E(1), -1), (E(2), -1), (E(7), -1), (E(8), -1)]);
    let y1 = xpoly(vec![(0, &e(5) + &e(6)), (1, Coefficient::sym(Const(4))), (2, x2)]);
    let y2 = &SkewElement::constant(&e(5) * &e(6))
        * &product(&(3..=4u8).map(|i| lin_x(&[(E(i), 1), (H(1), -1)], 0)).collect::<Vec<_>>());
    &(&y0 + &times_y(&y1, 1)) + &times_y(&y2, 2)
}

pub fn curve(kind: GroupType) -> SkewElement {
    match kind {
        GroupType::E8 => e8_curve(),
        GroupType::E7 => e7_curve(),
        GroupType::E6 => e6_curve(),
        GroupType::D5 => d5_curve(),
    }
}
