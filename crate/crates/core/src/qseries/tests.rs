use proptest::prelude::*;

use super::adjoint::*;
use super::identities::*;
use super::*;
use crate::coeffring::{rat, Symbol};
use crate::fpoly::Sampler;
use crate::lattice::{GroupSpec, GroupType};
use crate::weyl::{Mutation, WeylAction};

fn e8() -> WeylAction {
    WeylAction::new(GroupSpec::new(GroupType::E8))
}

#[test]
fn finite_factorial_expansion() {
    let q = rat(2, 3);
    let one = Series::one(q.clone(), 4);
    let s = q_factorial_plus_finite(&one, &Rat::one(), SVar::Y, &q, 3);
    // (1+y)(1+qy)(1+q²y) by hand.
    assert_eq!(s.coeff(&[0, 1, 0, 0]), rat(1, 1) + rat(2, 3) + rat(4, 9));
    assert_eq!(s.coeff(&[0, 2, 0, 0]), rat(2, 3) + rat(4, 9) + rat(8, 27));
    assert_eq!(s.coeff(&[0, 3, 0, 0]), rat(8, 27));
    assert_eq!(s.coeff(&[0, 4, 0, 0]), Rat::zero());
}

#[test]
fn factorial_satisfies_its_difference_equation() {
    // f(z) = (1 + z) f(qz) for f = (z)^+_∞.
    let q = rat(-3, 5);
    let one = Series::one(Rat::one(), 9);
    let f = q_factorial_plus(&one, &rat(7, 4), SVar::U, &q);
    let mut fq = one.like(Rat::zero());
    for (m, c) in f.terms() {
        fq.add_term(*m, c * num_traits::pow::pow(q.clone(), m[2] as usize));
    }
    let rhs = &(&one + &one.var(rat(7, 4), SVar::U)) * &fq;
    assert_eq!(f, rhs);
    assert_eq!(&f * &f.inverse().unwrap(), one);
}

#[test]
fn inverse_of_non_unit_fails() {
    let one = Series::one(Rat::one(), 3);
    assert!(one.var(Rat::one(), SVar::X).inverse().is_err());
}

#[test]
fn skew_product_orders_y_before_x() {
    let q = rat(5, 2);
    let one = Series::one(q.clone(), 3);
    let (x, y) = (one.var(Rat::one(), SVar::X), one.var(Rat::one(), SVar::Y));
    assert_eq!(&y * &x, (&x * &y).scale(&q));
    assert_eq!(&(&y * &y) * &x, (&x * &(&y * &y)).scale(&(&q * &q)));
}

#[test]
fn q_binomial() {
    let rep = verify_binomial(8, 4, 31);
    assert!(rep.passed, "{rep:?}");
    // The coefficient of z^2 from the recursion f(qz)(1 - az) = (1 - z) f(z).
    let (a, q) = (rat(3, 2), rat(2, 3));
    let (lhs, _) = binomial_sides(&a, &q, 4);
    let c1 = (Rat::one() - &a) / (Rat::one() - &q);
    let c2 = &c1 * (Rat::one() - &a * &q) / (Rat::one() - &q * &q);
    assert_eq!(lhs.coeff(&[0, 0, 1, 0]), c1);
    assert_eq!(lhs.coeff(&[0, 0, 2, 0]), c2);
}

#[test]
fn dilog_product_identity() {
    let (l, r) = dilog_sides(&rat(3, 2), &rat(5, 7), &rat(2, 3), &rat(2, 3), 8);
    assert_eq!(l, r);
    let rep = verify_dilog_identity(8, 3, 5);
    assert!(rep.passed && rep.trials == 3, "{rep:?}");
}

#[test]
fn dilog_degenerate_cases() {
    let q = rat(4, 9);
    let a = rat(-7, 3);
    let (l, r) = dilog_sides(&a, &a, &q, &q, 6);
    assert_eq!(l, r);
    let one = Series::one(q.clone(), 6);
    assert_eq!(r, &ratio_plus(&one, &Rat::one(), &a, SVar::X, &q) * &ratio_plus(&one, &a, &Rat::one(), SVar::X, &q));
    // Commuting x and y.
    let (l, r) = dilog_sides(&a, &rat(2, 5), &q, &Rat::one(), 6);
    assert_eq!(l, r);
}

#[test]
fn dilog_fails_with_wrong_commutation() {
    let (l, r) = dilog_sides(&rat(3, 2), &rat(5, 7), &rat(2, 3), &rat(3, 2), 6);
    assert!(l.first_difference(&r).is_some());
}

#[test]
fn heine_chain() {
    for rep in verify_heine_chain(8, 3, 11) {
        assert!(rep.passed, "{rep:?}");
    }
}

#[test]
fn heine_detects_a_wrong_prefactor() {
    let (l, r) = heine_sides(&rat(3, 4), &rat(-2, 7), 6);
    assert_eq!(l, r);
    let q = rat(-2, 7);
    let one = Series::one(Rat::one(), 6);
    let bad = &r * &(&one + &one.var(q, SVar::U));
    assert!(l.first_difference(&bad).is_some());
}

#[test]
fn braid_product() {
    let rep = verify_braid_product(8, 3, 2);
    assert!(rep.passed && rep.trials == 3, "{rep:?}");
    // An extra nontrivial factor breaks it.
    let p = Sampler::new(4).assignment(11, &[], None);
    let (g, gt) = braid_sides(&p, 5);
    assert_eq!(g, gt);
    let q = p.get(Symbol::Q).unwrap().clone();
    let one = Series::one(q.clone(), 5);
    let e11 = p.get(Symbol::E(11)).unwrap().clone();
    let skewed = &g * &ratio_plus(&one, &e11, &(&e11 * &q), SVar::Y, &q);
    assert!(skewed.first_difference(&gt).is_some());
}

#[test]
fn adjoint_realization_of_s0_and_s3() {
    let a = e8();
    for g in [0, 3] {
        for sym in [Symbol::X, Symbol::Y, Symbol::Tau(10), Symbol::Tau(11), Symbol::Tau(1), Symbol::Tau(7)] {
            let rep = verify_adjoint_realization(&a, g, sym, 6, 3, 99).unwrap();
            assert!(rep.passed, "{rep:?}");
        }
    }
}

#[test]
fn adjoint_s0_on_x_matches_formula() {
    // x (1 + y h2/e10)(1 + y e11)^{-1}, expanded by hand to y^2.
    let p = Sampler::new(8).assignment(11, &[], None);
    let q = p.get(Symbol::Q).unwrap().clone();
    let beta = p.get(Symbol::H(2)).unwrap() / p.get(Symbol::E(10)).unwrap();
    let alpha = p.get(Symbol::E(11)).unwrap().clone();
    let gs = g_series(e8().spec.gens[0], &p, &Default::default(), 3).unwrap();
    let x = Series::monomial(q, 3, Rat::one(), SVar::X, 1);
    let conj = product(&gs.inverse().unwrap(), [&x, &gs]);
    assert_eq!(conj.coeff(&[1, 0, 0, 0]), Rat::one());
    assert_eq!(conj.coeff(&[1, 1, 0, 0]), &beta - &alpha);
    assert_eq!(conj.coeff(&[1, 2, 0, 0]), -(&beta - &alpha) * &alpha);
}

#[test]
fn adjoint_all_reflections_and_types() {
    for t in [GroupType::E8, GroupType::E7, GroupType::E6, GroupType::D5] {
        let a = WeylAction::new(GroupSpec::new(t));
        for rep in adjoint_suite(&a, 4, 2, 7).unwrap() {
            assert!(rep.passed, "{t:?} {rep:?}");
        }
    }
}

#[test]
fn adjoint_detects_mutations() {
    let spec = GroupSpec::new(GroupType::E8);
    let bad = WeylAction::new(spec.clone()).with_mutation(Mutation::ShiftPositionFactor(0));
    assert!(!verify_adjoint_realization(&bad, 0, Symbol::X, 4, 2, 1).unwrap().passed);
    let bad = WeylAction::new(spec).with_mutation(Mutation::DropTauFactor(3));
    assert!(!verify_adjoint_realization(&bad, 3, Symbol::Tau(1), 4, 2, 1).unwrap().passed);
}

fn arb_series(qc: Rat, order: u32) -> impl Strategy<Value = Series> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -9i64..9, 1i64..5), 1..8).prop_map(move |ts| {
        let mut s = Series::one(qc.clone(), order);
        for ((i, j, k), n, d) in ts.into_iter().filter(|(m, _, _)| *m != (0, 0, 0)) {
            s.add_term([i, j, k, 0], rat(n, d));
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_respects_truncation(a in arb_series(rat(3, 7), 6), b in arb_series(rat(3, 7), 6), m in 1u32..6) {
        prop_assert_eq!((&a * &b).truncate(m), &a.truncate(m) * &b.truncate(m));
        prop_assert_eq!(a.inverse().unwrap().truncate(m), a.truncate(m).inverse().unwrap());
    }

    #[test]
    fn factorials_are_coherent(n in -20i64..20, d in 1i64..20, m in 1u32..7) {
        prop_assume!(n != 0);
        let q = rat(-2, 5);
        let k = rat(n, d);
        let big = q_factorial_plus(&Series::one(q.clone(), 8), &k, SVar::Y, &q);
        let small = q_factorial_plus(&Series::one(q.clone(), m), &k, SVar::Y, &q);
        prop_assert_eq!(big.truncate(m), small);
        let (l8, _) = dilog_sides(&k, &rat(5, 3), &q, &q, 7);
        let (lm, _) = dilog_sides(&k, &rat(5, 3), &q, &q, m);
        prop_assert_eq!(l8.truncate(m), lm);
    }
}
