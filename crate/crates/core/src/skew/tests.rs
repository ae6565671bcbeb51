use super::*;
use crate::coeffring::{mono, rat, Rat};
use proptest::prelude::*;
use Symbol::*;

fn c(sym: Symbol) -> Coefficient {
    Coefficient::sym(sym)
}

fn yf(scale: &[(Symbol, i32)], t: i32) -> LinearFactor {
    LinearFactor::new(Var::Y, crate::coeffring::params(scale), t)
}

#[test]
fn xy_and_yx() {
    let xy = &SkewElement::x() * &SkewElement::y();
    assert_eq!(xy, SkewElement::monomial(Coefficient::one(), ExponentVector::new(), 1, 1));
    let yx = &SkewElement::y() * &SkewElement::x();
    assert_eq!(yx, xy.left_mul_coeff(&Coefficient::q_pow(1)));
}

#[test]
fn commuting_factors_in_y() {
    let a = yf(&[(E(11), 1)], 0).to_skew();
    let b = yf(&[(E(11), 1)], 1).to_skew();
    let e11 = c(E(11));
    let expect = &(&SkewElement::one()
        + &SkewElement::y().left_mul_coeff(&(&e11 * &(&Coefficient::q_pow(1) + &Coefficient::one()))))
        + &SkewElement::y_pow(2).left_mul_coeff(&(&(&e11 * &e11) * &Coefficient::q_pow(1)));
    assert_eq!(&a * &b, expect);
}

#[test]
fn binomial_square() {
    let s = &SkewElement::x() + &SkewElement::y();
    let sq = &s * &s;
    let expect = &(&SkewElement::x_pow(2) + &SkewElement::y_pow(2))
        + &(&SkewElement::x() * &SkewElement::y()).left_mul_coeff(&(&Coefficient::one() + &Coefficient::q_pow(1)));
    assert_eq!(sq, expect);
    assert_eq!(sq, oracle_mul(&s, &s));
}

#[test]
fn right_division_examples() {
    let f = yf(&[(Const(4), 1)], 0);
    let g = yf(&[(Const(4), 1)], 1);
    let p = &f.to_skew() * &g.to_skew();
    assert_eq!(p.right_divide_exact(&f).unwrap(), g.to_skew());
    let other = yf(&[(Const(3), 1)], 0);
    assert!(matches!(f.to_skew().right_divide_exact(&other), Err(Error::NotDivisible(_))));
}

#[test]
fn left_division_of_q_run() {
    let f: Vec<LinearFactor> = (0..3).map(|t| yf(&[(E(11), 1)], t)).collect();
    let all = product(f.iter().map(|x| x.to_skew()).collect::<Vec<_>>().iter());
    let tail = product(f[1..].iter().map(|x| x.to_skew()).collect::<Vec<_>>().iter());
    assert_eq!(all.left_divide_exact(&f[0]).unwrap(), tail);
}

#[test]
fn division_needs_matching_side() {
    // (1 + c y) x = x (1 + q c y): dividing on the wrong side fails.
    let f = yf(&[(E(1), 1)], 0);
    let p = &f.to_skew() * &SkewElement::x();
    assert_eq!(p.left_divide_exact(&f).unwrap(), SkewElement::x());
    assert!(p.right_divide_exact(&f).is_err());
    let fx = LinearFactor::new(Var::X, crate::coeffring::params(&[(E(2), 1)]), 0);
    let p = &SkewElement::y() * &fx.to_skew();
    assert_eq!(p.right_divide_exact(&fx).unwrap(), SkewElement::y());
    assert!(p.left_divide_exact(&fx).is_err());
}

#[test]
fn slices_and_limits() {
    let p = &(&SkewElement::x() * &SkewElement::y()).left_mul_coeff(&Coefficient::q_pow(2)) + &SkewElement::y_pow(3);
    assert_eq!(p.coefficient_slice(Var::X, 1), SkewElement::y().left_mul_coeff(&Coefficient::q_pow(2)));
    assert!(p.coefficient_slice(Var::X, 7).is_zero());
    let lim = p.classical_limit();
    assert_eq!(lim, &(&SkewElement::x() * &SkewElement::y()) + &SkewElement::y_pow(3));
    let free = SkewElement::y().left_mul_coeff(&c(E(2)));
    assert_eq!(free.classical_limit(), free);
}

#[test]
fn json_round_trip() {
    let p = &SkewElement::monomial(
        mono(rat(3, 4), &[(Q, -1), (E(2), 1)]),
        crate::coeffring::taus(&[(Tau(3), -1), (Sigma(1), 2)]),
        2,
        1,
    ) + &SkewElement::y();
    assert_eq!(SkewElement::from_json(&p.to_json()).unwrap(), p);
}

// --- brute-force reordering oracle ---------------------------------------

#[derive(Clone, Copy, Debug, PartialEq)]
enum Letter {
    P(u8, i32),
    T(u8, i32),
    X(i32),
    Y(i32),
}

fn rank(l: &Letter) -> (u8, u8) {
    match *l {
        Letter::P(id, _) => (0, id),
        Letter::T(id, _) => (1, id),
        Letter::X(_) => (2, 0),
        Letter::Y(_) => (3, 0),
    }
}

/// Power of `q` in `u v = q^k v u` straight from the defining relations.
fn swap_power(u: &Letter, v: &Letter) -> i32 {
    match (*u, *v) {
        (Letter::Y(a), Letter::X(b)) => a * b,
        (Letter::X(a), Letter::Y(b)) => -a * b,
        (Letter::T(t, a), Letter::P(p, b)) | (Letter::P(p, b), Letter::T(t, a)) => {
            let sign = if matches!(*u, Letter::T(..)) { 1 } else { -1 };
            let pair = match (Symbol::tau_from_id(t), Symbol::param_from_id(p)) {
                (Sigma(1), H(2)) | (Sigma(2), H(1)) => 1,
                (Tau(i), E(j)) if i == j => -1,
                _ => 0,
            };
            sign * pair * a * b
        }
        _ => 0,
    }
}

fn letters(k: &SkewKey, param: &ExponentVector) -> Vec<Letter> {
    let mut w = Vec::new();
    for (id, e) in param.iter() {
        if id != Q.id() {
            let s = e.signum();
            w.extend((0..e.abs()).map(|_| Letter::P(id, s)));
        }
    }
    for (id, e) in k.tau.iter() {
        let s = e.signum();
        w.extend((0..e.abs()).map(|_| Letter::T(id, s)));
    }
    w.extend((0..k.x.abs()).map(|_| Letter::X(k.x.signum())));
    w.extend((0..k.y.abs()).map(|_| Letter::Y(k.y.signum())));
    w
}

fn oracle_mul(a: &SkewElement, b: &SkewElement) -> SkewElement {
    let mut out = SkewElement::zero();
    for (ka, ca) in a.terms() {
        for (ea, ra) in ca.terms() {
            for (kb, cb) in b.terms() {
                for (eb, rb) in cb.terms() {
                    let mut w = letters(ka, ea);
                    w.extend(letters(kb, eb));
                    let mut qpow = ea.get(Q.id()) + eb.get(Q.id());
                    // bubble sort with adjacent transpositions
                    let n = w.len();
                    for i in 0..n {
                        for j in 0..n - 1 - i {
                            if rank(&w[j]) > rank(&w[j + 1]) {
                                qpow += swap_power(&w[j], &w[j + 1]);
                                w.swap(j, j + 1);
                            }
                        }
                    }
                    let mut param = ExponentVector::single(Q.id(), qpow);
                    let mut key = SkewKey::default();
                    for l in w {
                        match l {
                            Letter::P(id, s) => param.add_at(id, s),
                            Letter::T(id, s) => key.tau.add_at(id, s),
                            Letter::X(s) => key.x += s,
                            Letter::Y(s) => key.y += s,
                        }
                    }
                    out.add_term(key, Coefficient::monomial(param, ra * rb));
                }
            }
        }
    }
    out
}

fn arb_coeff() -> impl Strategy<Value = Coefficient> {
    (proptest::collection::vec((proptest::sample::select(vec![Q, H(1), H(2), E(1), E(7)]), -2i32..=2), 0..3), -3i64..=3)
        .prop_map(|(ps, n)| mono(Rat::from_integer(n.into()), &ps))
}

fn arb_poly(with_tau: bool) -> impl Strategy<Value = SkewElement> {
    let tau_syms = if with_tau { vec![Sigma(1), Sigma(2), Tau(1), Tau(7)] } else { vec![Tau(2)] };
    let tau =
        proptest::collection::vec((proptest::sample::select(tau_syms), -1i32..=1), 0..if with_tau { 3 } else { 1 });
    proptest::collection::vec((arb_coeff(), tau, 0i32..=4, 0i32..=4), 0..=5).prop_map(move |ts| {
        let mut s = SkewElement::zero();
        for (c, t, x, y) in ts {
            let tv = if with_tau { crate::coeffring::taus(&t) } else { ExponentVector::new() };
            s.add_term(SkewKey { tau: tv, x, y }, c);
        }
        s
    })
}

fn arb_yfactor() -> impl Strategy<Value = LinearFactor> {
    (proptest::sample::select(vec![H(2), E(1), E(11)]), -1i32..=1, -2i32..=2).prop_map(|(s, k, t)| yf(&[(s, k)], t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn associative_and_distributive(a in arb_poly(true), b in arb_poly(true), c in arb_poly(true)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_reordering_oracle(a in arb_poly(true), b in arb_poly(true)) {
        prop_assert_eq!(&a * &b, oracle_mul(&a, &b));
    }

    #[test]
    fn division_round_trip(p in arb_poly(false), f in arb_yfactor()) {
        let pf = &p * &f.to_skew();
        let back = pf.right_divide_exact(&f).unwrap();
        prop_assert_eq!(&(&back * &f.to_skew()), &pf);
        let fp = &f.to_skew() * &p;
        prop_assert_eq!(fp.left_divide_exact(&f).unwrap(), p.clone());
        let fx = LinearFactor { var: Var::X, scale: f.scale.clone() };
        prop_assert_eq!((&p * &fx.to_skew()).right_divide_exact(&fx).unwrap(), p.clone());
        prop_assert_eq!((&fx.to_skew() * &p).left_divide_exact(&fx).unwrap(), p);
    }

    #[test]
    fn classical_limit_is_homomorphism(a in arb_poly(false), b in arb_poly(false)) {
        // At q = 1 the variables commute, so the right side is the
        // commutative product of the limits.
        prop_assert_eq!(
            (&a * &b).classical_limit(),
            (&a.classical_limit() * &b.classical_limit()).classical_limit()
        );
    }
}
