//! Generic data, the ideal H, and specializations.

use exact_arith::{IntPoly, VarId, WeightedDegree};
use generic_data::{GenericData, SpecKind, Specialization};

fn p(s: &str) -> IntPoly {
    IntPoly::parse_int(s).unwrap()
}

#[test]
fn build_generic_profiles() {
    let d = GenericData::build_generic(3, 1).unwrap();
    assert_eq!(d.grading.d_v, 1);
    let vars: std::collections::BTreeSet<VarId> = d.h_ideal(false).iter().flat_map(|g| g.variables()).collect();
    assert_eq!(vars.len(), 15);
    assert_eq!(GenericData::build_generic(4, 1).unwrap().grading.d_v, 2);
    assert_eq!(GenericData::build_generic(2, 0).unwrap().grading.d_v, 1);
    assert!(GenericData::build_generic(3, 3).is_err());
    assert!(GenericData::build_generic(1, 0).is_err());
}

#[test]
fn h_generators_n2() {
    let d = GenericData::build_generic(2, 0).unwrap();
    let h = d.h_ideal(false);
    assert_eq!(h.len(), 8);
    assert!(h.contains(&p("u1*x11 + u2*x21")));
    assert!(h.contains(&p("x11*v1 + x12*v2")));
    assert!(h.contains(&p("v1*u1 - x22")));
    for n in 2..=5 {
        assert_eq!(GenericData::build_generic(n, 0).unwrap().h_ideal(false).len(), n * n + 2 * n);
    }
}

#[test]
fn h_generators_weighted_homogeneous() {
    for n in 2..=5 {
        for du in 0..n as i64 {
            let d = GenericData::build_generic(n, du).unwrap();
            let g = d.grading;
            for twist in [false, true] {
                let h = d.h_ideal(twist);
                for (k, gen) in h.iter().enumerate() {
                    let want = if k < n {
                        g.d_u + 1
                    } else if k < 2 * n {
                        g.d_v + 1
                    } else {
                        n as i64 - 1
                    };
                    assert_eq!(gen.weighted_degree(&g).unwrap(), WeightedDegree::Homogeneous(want), "n={n} gen {k}: {gen}");
                }
            }
        }
    }
}

#[test]
fn sign_twist_changes_v() {
    let d = GenericData::build_generic(2, 0).unwrap();
    // n = 2: (−1)^{1} v
    let h = d.h_ideal(true);
    assert!(h.contains(&p("-v1*u1 - x22")));
    let d3 = GenericData::build_generic(3, 1).unwrap();
    // n = 3: (−1)^{3} v
    assert!(d3.h_ideal(true).contains(&p("-x11*v1 - x12*v2 - x13*v3")));
}

#[test]
fn diagonal_specialization() {
    let d = GenericData::build_generic(2, 0).unwrap();
    let s = Specialization::diagonal(2);
    let h: Vec<IntPoly> = d.h_ideal(false).iter().map(|g| s.apply(g)).collect();
    for want in ["v1*u1 - x22", "v1*u2", "v2*u1", "v2*u2 - x11"] {
        assert!(h.contains(&p(want)), "{want}");
    }
    // specializing the data commutes with building H
    for n in 2..=4 {
        let d = GenericData::build_generic(n, 1).unwrap();
        let s = Specialization::diagonal(n);
        let a: Vec<IntPoly> = d.h_ideal(false).iter().map(|g| s.apply(g)).collect();
        assert_eq!(a, s.apply_data(&d).h_ideal(false));
    }
    let s3 = Specialization::diagonal(3);
    assert_eq!(s3.apply(&p("x12 + x33")), p("x33"));
    assert_eq!(s3.assignment.len(), 6);
}

#[test]
fn other_specializations() {
    let tw = Specialization::sign_twist(2);
    assert_eq!(tw.apply(&p("v1*u1 + v2")), p("-v1*u1 - v2"));
    let b = Specialization::block(3);
    assert_eq!(b.apply(&p("x11*x22 + x12 + x23")), p("x22 + x23"));
    let empty = Specialization::make("generic", 2, 0, 7).unwrap();
    assert_eq!(empty.apply(&p("x11*x22 - x12*x21")), p("x11*x22 - x12*x21"));
    assert!(Specialization::make("bogus", 2, 0, 7).is_err());
}

#[test]
fn random_point_is_reproducible_and_serializable() {
    let a = Specialization::random_point(3, 42, 1_000_003);
    let b = Specialization::random_point(3, 42, 1_000_003);
    assert_eq!(a, b);
    assert_ne!(a, Specialization::random_point(3, 43, 1_000_003));
    assert_eq!(a.kind, SpecKind::RandomPoint { seed: 42, prime: 1_000_003 });
    assert!(a.assignment.values().all(|v| v.is_constant()));
    let json = a.to_json().unwrap();
    assert_eq!(Specialization::from_json(&json).unwrap(), a);
    let d = Specialization::diagonal(2);
    assert_eq!(Specialization::from_json(&d.to_json().unwrap()).unwrap(), d);
}
