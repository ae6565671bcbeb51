//! Degree/multiplicity data, the intersection pairing, and the per-type
//! generator tables shared by every other layer.

mod coxeter;
mod group;
mod orbit;
mod vector;

pub use coxeter::{relations, verify_coxeter_relations, ActionProbe, CoxeterReport, LatticeProbe, RelationViolation};
pub use group::{parse_word, Generator, GroupSpec, GroupType, Template};
pub use orbit::{orbit, orbit_from, Orbit, OrbitEntry};
pub use vector::LatticeVector;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e8() -> GroupSpec {
        GroupSpec::new(GroupType::E8)
    }

    #[test]
    fn pairing_basics() {
        let n = 11;
        let e1 = LatticeVector::e(n, 1);
        assert_eq!(e1.pairing(&e1), -1);
        assert_eq!(LatticeVector::h1(n).pairing(&LatticeVector::h2(n)), 1);
        assert_eq!(LatticeVector::h1(n).pairing(&LatticeVector::h1(n)), 0);
    }

    #[test]
    fn star_examples() {
        let s = e8();
        let n = s.n;
        let img = s.star_action(0, &LatticeVector::e(n, 10));
        let mut expect = LatticeVector::h2(n);
        expect.set_mk(11, 1);
        assert_eq!(img, expect);
        assert_eq!(s.star_action(4, &LatticeVector::e(n, 1)), LatticeVector::e(n, 2));
        let w = parse_word("3 2 1 0 2 4 3").unwrap();
        let img = s.star_word(&w, &LatticeVector::e(n, 1));
        assert_eq!(img, LatticeVector::new(2, 1, vec![1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1]));
    }

    #[test]
    fn dimension_examples() {
        let s = e8();
        let w = parse_word("3 2 1 0 2 4 3").unwrap();
        let l = s.star_word(&w, &LatticeVector::e(11, 1));
        assert_eq!(l.dimension_count(), 1);
        let curve = LatticeVector::new(6, 3, vec![1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3]);
        assert_eq!(curve.dimension_count(), 1);
        assert_eq!(LatticeVector::e(11, 5).dimension_count(), 1);
    }

    #[test]
    fn dimension_formula_matches_pairing_form() {
        for kind in GroupType::ALL {
            let s = GroupSpec::new(kind);
            let d = s.delta_red();
            for e in orbit(&s, 4).entries {
                let l = &e.lambda;
                let twice = l.pairing(l) + l.pairing(&d) + 2;
                assert_eq!(twice, 2 * l.dimension_count(), "{kind} {l}");
            }
        }
    }

    #[test]
    fn lattice_coxeter_relations() {
        for kind in GroupType::ALL {
            let s = GroupSpec::new(kind);
            let rep = verify_coxeter_relations(&s, &LatticeProbe(&s), &s.basis());
            assert!(rep.passed(), "{kind}: {:?}", rep.violation);
        }
        let s = GroupSpec::d5_as_printed();
        assert!(verify_coxeter_relations(&s, &LatticeProbe(&s), &s.basis()).passed());
    }

    #[test]
    fn corrupted_table_breaks_relations() {
        let mut s = e8();
        s.gens[0] = Generator::X(9, 11);
        let rep = verify_coxeter_relations(&s, &LatticeProbe(&s), &s.basis());
        assert!(!rep.passed());
    }

    #[test]
    fn invariants_of_generators() {
        for kind in GroupType::ALL {
            let s = GroupSpec::new(kind);
            let basis = s.basis();
            for g in 0..s.rank() {
                assert_eq!(s.star_action(g, &s.delta_red()), s.delta_red(), "{kind} s{g}");
                for a in &basis {
                    assert_eq!(s.star_action(g, &s.star_action(g, a)), *a);
                    for b in &basis {
                        assert_eq!(s.star_action(g, a).pairing(&s.star_action(g, b)), a.pairing(b));
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_elements_are_exceptional() {
        for kind in GroupType::ALL {
            let s = GroupSpec::new(kind);
            let orb = orbit(&s, 6);
            assert!(orb.entries.len() > s.n);
            for e in &orb.entries {
                assert_eq!(e.lambda.dimension_count(), 1);
                assert_eq!(e.lambda.pairing(&e.lambda), -1);
                assert_eq!(e.lambda.pairing(&s.delta_red()), 1);
                assert_eq!(s.star_word(&e.word, &LatticeVector::e(s.n, e.seed)), e.lambda);
            }
        }
    }

    #[test]
    fn param_map_matches_star() {
        for kind in GroupType::ALL {
            let s = GroupSpec::new(kind);
            for e in orbit(&s, 2).entries {
                for g in 0..s.rank() {
                    let img = s.gens[g].param_map().apply(&e.lambda.param_vec());
                    assert_eq!(img, s.star_action(g, &e.lambda).param_vec());
                }
            }
        }
    }

    #[test]
    fn json_and_parse() {
        let l = LatticeVector::new(2, 1, vec![1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1]);
        assert_eq!(LatticeVector::from_json(&l.to_json()).unwrap(), l);
        assert_eq!(LatticeVector::parse("2,1;1,0,0,0,0,0,1,0,1,1,1", 11).unwrap(), l);
        assert_eq!(LatticeVector::from_tau_vec(&l.tau_vec(), 11).unwrap(), l);
    }

    fn arb_lambda() -> impl Strategy<Value = LatticeVector> {
        (-3i32..=6, -3i32..=6, proptest::collection::vec(-3i32..=3, 11))
            .prop_map(|(a, b, m)| LatticeVector::new(a, b, m))
    }

    proptest! {
        #[test]
        fn star_preserves_pairing(a in arb_lambda(), b in arb_lambda(), g in 0usize..9) {
            let s = e8();
            prop_assert_eq!(s.star_action(g, &a).pairing(&s.star_action(g, &b)), a.pairing(&b));
            prop_assert_eq!(s.star_action(g, &s.star_action(g, &a)), a);
        }
    }
}
