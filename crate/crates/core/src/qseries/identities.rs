//! The q-binomial theorem, the product identity for the quantum dilogarithm,
//! Heine's transformation and the braid identity `G = G̃`, each checked as
//! truncated series at random exact specializations.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{poch, q_factorial, q_factorial_plus, q_poch_q, Mono, SVar, Series};
use crate::coeffring::{Assignment, Rat, Symbol};
use crate::error::Result;
use crate::fpoly::Sampler;

use SVar::{U, W, X, Y};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub order: u32,
    pub trials: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

impl IdentityReport {
    fn collect(name: &str, order: u32, results: Vec<Option<String>>) -> Self {
        let trials = results.len();
        let witness = results.into_iter().flatten().next();
        IdentityReport { name: name.into(), order, trials, passed: witness.is_none(), witness }
    }
}

fn describe(l: &Series, r: &Series, ctx: &str) -> Option<String> {
    l.first_difference(r).map(|(m, a, b)| format!("{ctx}: coefficient of {} is {a} vs {b}", mono_name(&m)))
}

pub fn mono_name(m: &Mono) -> String {
    let names = ["x", "y", "u", "w"];
    let parts: Vec<String> = m
        .iter()
        .zip(names)
        .filter(|(k, _)| **k > 0)
        .map(|(k, n)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// `(κ v)^+_∞ / (λ v)^+_∞`.
pub fn ratio_plus(like: &Series, kappa: &Rat, lambda: &Rat, v: SVar, q: &Rat) -> Series {
    let den = q_factorial_plus(like, lambda, v, q).inverse().expect("constant term 1");
    &q_factorial_plus(like, kappa, v, q) * &den
}

/// `Π_{i<n} (1 - q^i z)` for a series `z`.
pub fn poch_series(z: &Series, q: &Rat, n: u32) -> Series {
    (0..n).fold(z.like(Rat::one()), |acc, i| {
        &acc * &(&z.like(Rat::one()) - &z.scale(&num_traits::pow::pow(q.clone(), i as usize)))
    })
}

fn pow(s: &Series, n: u32) -> Series {
    (0..n).fold(s.like(Rat::one()), |acc, _| &acc * s)
}

/// `(az)_∞/(z)_∞` computed from the products, and `Σ (a)_n/(q)_n z^n`.
pub fn binomial_sides(a: &Rat, q: &Rat, order: u32) -> (Series, Series) {
    let one = Series::one(Rat::one(), order);
    let lhs = &q_factorial(&one, a, U, q) * &q_factorial(&one, &Rat::one(), U, q).inverse().unwrap();
    let mut rhs = one.like(Rat::zero());
    for n in 0..=order {
        rhs.add_term([0, 0, n, 0], poch(a, q, n) / q_poch_q(q, n));
    }
    (lhs, rhs)
}

/// Both sides of the product identity for `yx = qc·xy`.
pub fn dilog_sides(a: &Rat, b: &Rat, q: &Rat, qc: &Rat, order: u32) -> (Series, Series) {
    let one = Series::one(qc.clone(), order);
    let r = |k: &Rat, l: &Rat, v: SVar| ratio_plus(&one, k, l, v, q);
    let o = Rat::one();
    let lhs = super::product(&r(a, &o, Y), [&r(a, b, X), &r(&o, b, Y)]);
    let rhs = super::product(&r(&o, b, X), [&r(a, b, Y), &r(a, &o, X)]);
    (lhs, rhs)
}

/// Both sides of the reduced product identity, with `x` factors on the
/// left of `y` factors throughout.
pub fn red_ppp_sides(a: &Rat, b: &Rat, q: &Rat, qc: &Rat, order: u32) -> (Series, Series) {
    let one = Series::one(qc.clone(), order);
    let x = one.var(Rat::one(), X);
    let y = one.var(Rat::one(), Y);
    let coef = |n: u32| poch(a, q, n) / q_poch_q(q, n);
    let mut ls = one.like(Rat::zero());
    let mut rs = one.like(Rat::zero());
    for n in 0..=order {
        let bx = poch_series(&x.scale(b), q, n);
        let ax = poch_series(&x.scale(a), q, n).inverse().unwrap();
        ls = &ls + &super::product(&bx, [&ax, &pow(&y, n)]).scale(&coef(n));
        let by = poch_series(&y.scale(b), q, n);
        let ay = poch_series(&y.scale(a), q, n).inverse().unwrap();
        rs = &rs + &super::product(&pow(&x, n), [&by, &ay]).scale(&coef(n));
    }
    let lhs = super::product(&q_factorial(&one, a, X, q), [&ls, &q_factorial(&one, &Rat::one(), Y, q)]);
    let rhs = super::product(&q_factorial(&one, &Rat::one(), X, q), [&rs, &q_factorial(&one, a, Y, q)]);
    (lhs, rhs)
}

/// `₂φ₁(A, B; C; Z)` for series arguments, `Z` without constant term.
pub fn phi21(a: &Series, b: &Series, c: &Series, z: &Series, q: &Rat) -> Series {
    let mut s = a.like(Rat::zero());
    for n in 0..=a.order {
        let num = &poch_series(a, q, n) * &poch_series(b, q, n);
        let den = poch_series(c, q, n).inverse().expect("(c)_n has constant term 1");
        s = &s + &super::product(&num, [&den, &pow(z, n)]).scale(&q_poch_q(q, n).recip());
    }
    s
}

/// Heine's transformation with `x`, `b`, `c` as the formal variables
/// `x`, `u`, `w` and `a` a number.
pub fn heine_sides(a: &Rat, q: &Rat, order: u32) -> (Series, Series) {
    let one = Series::one(Rat::one(), order);
    let x = one.var(Rat::one(), X);
    let b = one.var(Rat::one(), U);
    let c = one.var(Rat::one(), W);
    let lhs = phi21(&one.like(a.clone()), &b, &c, &x, q);
    // (c/b)_n b^n = Π_{i<n} (b - c q^i) keeps the right side a power series.
    let mut sum = one.like(Rat::zero());
    for n in 0..=order {
        let cb =
            (0..n).fold(one.clone(), |acc, i| &acc * &(&b - &c.scale(&num_traits::pow::pow(q.clone(), i as usize))));
        let xn = poch_series(&x, q, n);
        let axn = poch_series(&x.scale(a), q, n).inverse().unwrap();
        sum = &sum + &super::product(&cb, [&xn, &axn]).scale(&q_poch_q(q, n).recip());
    }
    let pre = super::product(
        &q_factorial(&one, a, X, q),
        [
            &q_factorial(&one, &Rat::one(), X, q).inverse().unwrap(),
            &q_factorial(&one, &Rat::one(), U, q),
            &q_factorial(&one, &Rat::one(), W, q).inverse().unwrap(),
        ],
    );
    (lhs, &pre * &sum)
}

fn val(a: &Assignment, pairs: &[(Symbol, i32)]) -> Rat {
    a.eval_monomial(&crate::coeffring::params(pairs)).expect("all parameters assigned")
}

/// The two products whose equality gives the braid relation between the
/// reflections `s0` and `s3` of E8.
pub fn braid_sides(p: &Assignment, order: u32) -> (Series, Series) {
    use Symbol::{E, H};
    let q = p.get(Symbol::Q).expect("q assigned").clone();
    let one = Series::one(q.clone(), order);
    let r = |k: Rat, l: Rat, v: SVar| ratio_plus(&one, &k, &l, v, &q);
    let big_y = val(p, &[(H(1), 1), (H(2), 1), (E(1), -1), (E(7), -1), (E(10), -1)]);
    let big_x = val(p, &[(E(7), 1), (E(10), 1), (E(11), 1), (H(1), -1), (H(2), -1)]);
    let h2e10 = val(p, &[(H(2), 1), (E(10), -1)]);
    let inv_e1 = val(p, &[(E(1), -1)]);
    let e11 = val(p, &[(E(11), 1)]);
    let e7h1 = val(p, &[(E(7), 1), (H(1), -1)]);
    let g = super::product(
        &r(big_y.clone(), h2e10.clone(), Y),
        [&r(inv_e1.clone(), big_x.clone(), X), &r(h2e10, e11.clone(), Y)],
    );
    let gt = super::product(&r(e7h1.clone(), big_x, X), [&r(big_y, e11, Y), &r(inv_e1, e7h1, X)]);
    (g, gt)
}

fn trial_values(seed: u64, trials: usize, k: usize) -> Vec<Vec<Rat>> {
    let mut s = Sampler::new(seed);
    (0..trials).map(|_| (0..k).map(|_| s.value()).collect()).collect()
}

pub fn verify_binomial(order: u32, trials: usize, seed: u64) -> IdentityReport {
    let res = trial_values(seed, trials, 2)
        .into_iter()
        .map(|v| {
            let (l, r) = binomial_sides(&v[0], &v[1], order);
            describe(&l, &r, &format!("a={}, q={}", v[0], v[1]))
        })
        .collect();
    IdentityReport::collect("q-binomial", order, res)
}

pub fn verify_dilog_identity(order: u32, trials: usize, seed: u64) -> IdentityReport {
    let res = trial_values(seed, trials, 3)
        .into_iter()
        .map(|v| {
            let (l, r) = dilog_sides(&v[0], &v[1], &v[2], &v[2], order);
            describe(&l, &r, &format!("a={}, b={}, q={}", v[0], v[1], v[2]))
        })
        .collect();
    IdentityReport::collect("dilog-product", order, res)
}

pub fn verify_heine_chain(order: u32, trials: usize, seed: u64) -> Vec<IdentityReport> {
    let vals = trial_values(seed, trials, 3);
    let red = |comm: bool| -> Vec<Option<String>> {
        vals.iter()
            .map(|v| {
                let qc = if comm { Rat::one() } else { v[2].clone() };
                let (l, r) = red_ppp_sides(&v[0], &v[1], &v[2], &qc, order);
                describe(&l, &r, &format!("a={}, b={}, q={}", v[0], v[1], v[2]))
            })
            .collect()
    };
    let heine = vals
        .iter()
        .map(|v| {
            let (l, r) = heine_sides(&v[0], &v[2], order);
            describe(&l, &r, &format!("a={}, q={}", v[0], v[2]))
        })
        .collect();
    let sym = vals
        .iter()
        .map(|v| {
            let one = Series::one(Rat::one(), order);
            let (a, b) = (one.like(v[0].clone()), one.var(Rat::one(), U));
            let (c, x) = (one.var(Rat::one(), W), one.var(Rat::one(), X));
            describe(&phi21(&a, &b, &c, &x, &v[2]), &phi21(&b, &a, &c, &x, &v[2]), "symmetry")
        })
        .collect();
    vec![
        IdentityReport::collect("red-ppp", order, red(false)),
        IdentityReport::collect("red-ppp-commutative", order, red(true)),
        IdentityReport::collect("heine", order, heine),
        IdentityReport::collect("phi21-symmetry", order, sym),
    ]
}

pub fn verify_braid_product(order: u32, trials: usize, seed: u64) -> IdentityReport {
    let mut s = Sampler::new(seed);
    let res = (0..trials)
        .map(|_| {
            let p = s.assignment(11, &[], None);
            let (g, gt) = braid_sides(&p, order);
            describe(&g, &gt, &format!("q={}", p.get(Symbol::Q).unwrap()))
        })
        .collect();
    IdentityReport::collect("braid-product", order, res)
}

/// Every identity at the given order.
pub fn identity_suite(order: u32, trials: usize, seed: u64) -> Result<Vec<IdentityReport>> {
    let mut out = vec![verify_binomial(order, trials, seed), verify_dilog_identity(order, trials, seed + 1)];
    out.extend(verify_heine_chain(order, trials, seed + 2));
    out.push(verify_braid_product(order, trials, seed + 3));
    Ok(out)
}
