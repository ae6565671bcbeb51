use super::*;
use crate::coeffring::{params, rat, Assignment};
use crate::fpoly::{check_conditions, check_nonlog, Boundary, NonLogQuery};

fn kinds() -> [GroupType; 4] {
    GroupType::ALL
}

#[test]
fn lambda_star_is_fixed() {
    for kind in kinds() {
        let cs = CurveSpec::new(kind);
        for g in 0..cs.group.rank() {
            assert_eq!(cs.group.star_action(g, &cs.lambda), cs.lambda, "{kind} s{g}");
        }
        assert_eq!(cs.lambda.dimension_count(), 1);
    }
}

#[test]
fn constraint_map_is_idempotent_and_removes_symbol() {
    for kind in kinds() {
        let cs = CurveSpec::new(kind);
        let m = cs.constraint_map();
        let img = m.image(cs.eliminated);
        assert_eq!(img.get(cs.eliminated.id()), 0);
        assert_eq!(m.apply(&img), img);
        let c = cs.explicit_curve();
        assert!(c.terms().all(|(_, v)| v.symbols().all(|s| s != cs.eliminated)));
        assert_eq!(c.map_coeffs(|v| cs.reduce(v)), c);
    }
}

#[test]
fn reduction_commutes_with_generators() {
    for kind in kinds() {
        let cs = CurveSpec::new(kind);
        let a = cs.action();
        let probe = Coefficient::sym(cs.eliminated);
        for g in 0..cs.group.rank() {
            let lhs = a.act_on_parameters(g, &probe);
            let rhs = cs.reduce(&probe.map_monomials(&cs.group.gens[g].param_map()));
            assert_eq!(lhs, rhs);
            // e^λ is fixed, so reducing before or after a generator agrees.
            let before = a.act_on_parameters(g, &cs.reduce(&probe));
            assert_eq!(before, lhs, "{kind} s{g}");
        }
    }
}

#[test]
fn explicit_curves_satisfy_boundary_conditions() {
    for kind in kinds() {
        let cs = CurveSpec::new(kind);
        let t = cs.template(&cs.lambda).reduced(&cs.constraint_map());
        let rep = check_conditions(&t, &cs.explicit_curve());
        assert!(rep.passed(), "{kind}: {:?}", rep.failing().collect::<Vec<_>>());
    }
}

#[test]
fn explicit_curves_are_invariant() {
    for kind in kinds() {
        let cs = CurveSpec::new(kind);
        let rep = verify_curve_invariance(&cs, &cs.explicit_curve());
        assert!(rep.passed(), "{kind}: {:?}", rep.failures);
    }
}

#[test]
fn invariance_fails_without_constraint() {
    let cs = CurveSpec::new(GroupType::E8);
    let a = WeylAction::new(cs.group.clone());
    let s = TauSection { f: explicit::e8_curve(), lambda: cs.lambda.clone() };
    let moved = (0..cs.group.rank()).any(|g| a.act_on_section(g, &s).map_or(true, |img| img.f != s.f));
    assert!(moved);
}

#[test]
fn perturbed_curve_is_not_invariant() {
    for kind in kinds() {
        let cs = CurveSpec::new(kind);
        let mut p = cs.explicit_curve();
        p.add_term(SkewKey::xy(1, 1), Coefficient::sym(crate::coeffring::Symbol::E(3)));
        assert!(!verify_curve_invariance(&cs, &p).passed(), "{kind}");
    }
}

#[test]
fn curve_spaces_have_dimension_two() {
    for kind in kinds() {
        let cs = CurveSpec::new(kind);
        let rep = verify_curve_space(&cs, 40 + kind as u64, 2).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
}

#[test]
fn e8_s0_factor_form() {
    let cs = CurveSpec::new(GroupType::E8);
    assert!(verify_e8_s0_factor_form(&cs, &cs.explicit_curve()).unwrap());
    let mut p = cs.explicit_curve();
    p.add_term(SkewKey::xy(2, 1), Coefficient::one());
    assert!(!verify_e8_s0_factor_form(&cs, &p).unwrap());
}

#[test]
fn e8_classical_constant_terms() {
    let p = explicit::e8_p0().classical_limit();
    // [3]_q e11 → 3 e11 in the y^1 slice, and q^3 e11^3 → e11^3 in y^3.
    let c = |x, y| p.coeff_xy(x, y);
    assert_eq!(c(0, 1), Coefficient::monomial(params(&[(Symbol::E(11), 1)]), rat(3, 1)));
    assert_eq!(c(0, 3), Coefficient::sym_pow(Symbol::E(11), 3));
    assert_eq!(c(0, 0), Coefficient::one());
    assert_eq!(p.degree_range(Var::X), Some((0, 6)));
    assert_eq!(p.degree_range(Var::Y), Some((0, 3)));
}

#[test]
fn e8_p0_is_nonlogarithmic_at_y_zero() {
    let cs = CurveSpec::new(GroupType::E8);
    let p = cs.explicit_curve();
    for k in cs.group.y_template.i.clone() {
        let m = cs.lambda.mk(k);
        let q =
            NonLogQuery::new(p.clone(), Boundary::YZero, params(&[(Symbol::E(k as u8), -1)]), m).with_top(cs.lambda.d2);
        let q = NonLogQuery { scale: cs.constraint_map().apply(&q.scale), ..q };
        assert!(check_nonlog(&q).passed(), "e{k}");
    }
}

#[test]
fn free_monomial_lies_in_the_box() {
    for kind in kinds() {
        let cs = CurveSpec::new(kind);
        let k = free_key(&cs);
        assert!(k.x <= cs.lambda.d1 && k.y <= cs.lambda.d2);
        assert_eq!(cs.explicit_curve().coeff_xy(k.x, k.y), Coefficient::sym(cs.free_constant), "{kind}");
    }
}

/// `P_0` from the boundary conditions alone: the element of the
/// constrained space with `P(0,0) = 1` and no `x^3 y` term.
fn p0_oracle(cs: &CurveSpec, a: &Assignment) -> SkewElement {
    let sol = solve_linear_system(&cs.template(&cs.lambda), std::slice::from_ref(a)).unwrap();
    let (u, v) = (&sol.bases[0][0], &sol.bases[0][1]);
    let c = |f: &SkewElement, x, y| f.coeff_xy(x, y).constant_term();
    let (fx, fy) = cs.free_monomial;
    let (u00, v00, u31, v31) = (c(u, 0, 0), c(v, 0, 0), c(u, fx, fy), c(v, fx, fy));
    let det = &u00 * &v31 - &v00 * &u31;
    let al = Coefficient::constant(&v31 / &det);
    let be = Coefficient::constant(-&u31 / &det);
    &u.left_mul_coeff(&al) + &v.left_mul_coeff(&be)
}

#[test]
fn e8_p0_matches_linear_system_oracle() {
    let cs = CurveSpec::new(GroupType::E8);
    let mut sm = Sampler::new(3);
    for _ in 0..3 {
        let a = cs.constrained_assignment(&mut sm).unwrap();
        let printed = explicit::e8_p0().specialize(&a).unwrap();
        assert_eq!(printed, p0_oracle(&cs, &a));
    }
}

#[test]
fn d5_curve_under_printed_generator_table() {
    let cs = CurveSpec::with_group(GroupSpec::d5_as_printed());
    // The printed table reflects with the indices in the other order at s2.
    let rep = verify_curve_invariance(&cs, &cs.explicit_curve());
    assert_eq!(rep.failures.iter().map(|f| f.0).collect::<Vec<_>>(), vec![2]);
}
