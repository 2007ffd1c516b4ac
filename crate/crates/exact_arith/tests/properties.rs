//! Seeded property tests: ring axioms, substitution as a homomorphism,
//! canonical text round trip, and integer overflow escalation.

use std::collections::HashMap;

use exact_arith::{Coeff, Fp, IntPoly, Integer, Monomial, Polynomial, VarId};
use proptest::prelude::*;

const N: u8 = 3;

fn var_strategy() -> impl Strategy<Value = VarId> {
    prop_oneof![
        (1..=N).prop_map(VarId::U),
        (1..=N).prop_map(VarId::V),
        (1..=N, 1..=N).prop_map(|(i, j)| VarId::X(i, j)),
    ]
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var_strategy(), 1u8..3), 0..3).prop_map(|vs| {
        vs.into_iter().fold(Monomial::one(), |m, (v, e)| m.mul(&Monomial::var_pow(v, e)))
    })
}

fn poly_strategy() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((monomial_strategy(), -9i64..10), 0..5)
        .prop_map(|ts| Polynomial::from_terms(ts.into_iter().map(|(m, c)| (m, Integer::new(c)))))
}

fn big_poly_strategy() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((monomial_strategy(), any::<i64>()), 0..4)
        .prop_map(|ts| Polynomial::from_terms(ts.into_iter().map(|(m, c)| (m, Integer::new(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&IntPoly::int(1)), a.clone());
    }

    #[test]
    fn overflow_escalates(a in big_poly_strategy(), b in big_poly_strategy()) {
        let ab = a.mul(&b);
        // compare against arithmetic in a prime field
        let p = 1_000_003u64;
        let red = |q: &IntPoly| q.map_coeffs(|c| Fp::new(c.rem_euclid_u64(p), p));
        prop_assert_eq!(red(&ab), red(&a).mul(&red(&b)));
        prop_assert_eq!(ab.sub(&a.mul(&b)), IntPoly::zero());
    }

    #[test]
    fn substitution_is_homomorphism(a in poly_strategy(), b in poly_strategy(), imgs in prop::collection::vec(poly_strategy(), 4)) {
        let keys = [VarId::U(1), VarId::X(1, 2), VarId::X(2, 2), VarId::V(3)];
        let map: HashMap<VarId, IntPoly> = keys.iter().copied().zip(imgs).collect();
        prop_assert_eq!(a.mul(&b).substitute(&map), a.substitute(&map).mul(&b.substitute(&map)));
        prop_assert_eq!(a.add(&b).substitute(&map), a.substitute(&map).add(&b.substitute(&map)));
    }

    #[test]
    fn text_round_trip(a in big_poly_strategy()) {
        let s = a.to_string();
        prop_assert_eq!(IntPoly::parse_int(&s).unwrap(), a);
    }

    #[test]
    fn terms_stay_canonical(a in poly_strategy(), b in poly_strategy()) {
        let c = a.mul(&b).add(&a);
        prop_assert!(c.terms().windows(2).all(|w| w[0].0 > w[1].0));
        prop_assert!(c.terms().iter().all(|(_, k)| !k.is_zero()));
    }
}

#[test]
fn evaluation_oracle_mod_7() {
    let f = IntPoly::parse_int("u1*v1 - x22").unwrap().map_coeffs(|c| Fp::new(c.rem_euclid_u64(7), 7));
    let val = |v: VarId| match v {
        VarId::U(1) => Fp::new(3, 7),
        VarId::V(1) => Fp::new(2, 7),
        VarId::X(2, 2) => Fp::new(6, 7),
        _ => Fp::new(0, 7),
    };
    assert!(f.evaluate(&7, val).is_zero());
}
