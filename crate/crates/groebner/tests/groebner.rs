use exact_arith::{Fp, Polynomial, VarId, DEFAULT_PRIME};
use generic_data::{GenericData, Specialization};
use groebner::*;
use proptest::prelude::*;

const P: u64 = DEFAULT_PRIME;

fn fp(s: &str) -> FpPoly {
    Polynomial::<Fp>::parse(s, &P).unwrap()
}

fn texts(gb: &GroebnerBasis) -> Vec<String> {
    gb.gens.iter().map(|g| g.to_string()).collect()
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let gb = buchberger(&[fp("x11"), fp("x12")], P, Budget::default()).unwrap();
    assert_eq!(texts(&gb), vec!["x12", "x11"]);
}

#[test]
fn determinant_and_variable() {
    let gb = buchberger(&[fp("x11*x22 - x12*x21"), fp("x11")], P, Budget::default()).unwrap();
    assert!(texts(&gb).contains(&"x12*x21".to_string()));
    assert_eq!(gb.gens.len(), 2);
}

#[test]
fn unit_ideal_collapses() {
    let gb = buchberger(&[fp("x11*x12 - 1"), fp("x11")], P, Budget::default()).unwrap();
    assert_eq!(texts(&gb), vec!["1"]);
    assert_eq!(codimension(&gb, &[VarId::X(1, 1), VarId::X(1, 2)]), 2);
}

#[test]
fn principal_codimension() {
    let gb = buchberger(&[fp("x11")], P, Budget::default()).unwrap();
    assert_eq!(codimension(&gb, &[VarId::X(1, 1), VarId::X(1, 2), VarId::X(1, 3)]), 1);
}

#[test]
fn budget_is_enforced() {
    let d = GenericData::build_generic(3, 1).unwrap();
    let gens = to_fp(&d.h_ideal(true), P);
    assert!(matches!(buchberger(&gens, P, Budget { max_steps: 10 }), Err(GroebnerError::Budget { .. })));
}

#[test]
fn diagonal_grade() {
    for (n, vars, gens, codim) in [(2, 6, 8, 4), (3, 9, 15, 6)] {
        let d = GenericData::build_generic(n, (n as i64 - 1) / 2).unwrap();
        let r = grade_of_specialization(&d, &Specialization::diagonal(n), P, Budget::default()).unwrap();
        assert_eq!((r.variables, r.generators, r.codim), (vars, gens, codim), "n = {n}");
    }
}

#[test]
fn basis_contains_generators_and_is_idempotent() {
    let d = GenericData::build_generic(3, 1).unwrap();
    let sd = Specialization::diagonal(3).apply_data(&d);
    let gens = to_fp(&sd.h_ideal(true), P);
    let gb = buchberger(&gens, P, Budget::default()).unwrap();
    assert!(gens.iter().all(|g| gb.contains(g)));
    let again = buchberger(&gb.gens, P, Budget::default()).unwrap();
    assert_eq!(again.gens, gb.gens);
}

#[test]
fn generic_grade() {
    for (n, vars, codim) in [(2, 8, 4), (3, 15, 6)] {
        let d = GenericData::build_generic(n, 1).unwrap();
        let r = grade_of_specialization(&d, &Specialization::make("generic", n, 0, P).unwrap(), P, Budget::default()).unwrap();
        assert_eq!((r.specialization.as_str(), r.variables, r.codim), ("generic", vars, codim));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn codimension_ignores_generator_order(perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let d = GenericData::build_generic(2, 0).unwrap();
        let sd = Specialization::diagonal(2).apply_data(&d);
        let gens = to_fp(&sd.h_ideal(true), P);
        let shuffled: Vec<FpPoly> = perm.iter().map(|&k| gens[k].clone()).collect();
        let a = buchberger(&gens, P, Budget::default()).unwrap();
        let b = buchberger(&shuffled, P, Budget::default()).unwrap();
        prop_assert_eq!(&a.gens, &b.gens);
        let vars: Vec<VarId> = [VarId::U(1), VarId::U(2), VarId::V(1), VarId::V(2), VarId::X(1, 1), VarId::X(2, 2)].to_vec();
        prop_assert_eq!(codimension(&a, &vars), 4);
    }

    #[test]
    fn random_binomials_reduce_to_zero(a in 1u64..50, b in 1u64..50) {
        let gens = vec![fp(&format!("{a}*x11*x12 - x21")), fp(&format!("x11^2 - {b}*x22"))];
        let gb = buchberger(&gens, P, Budget::default()).unwrap();
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        let again = buchberger(&gb.gens, P, Budget::default()).unwrap();
        prop_assert_eq!(again.gens, gb.gens);
    }
}
