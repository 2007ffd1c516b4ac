use std::collections::HashMap;

use big_complex::{
    build_f, build_f_signed, build_f_variant, build_g, iso_basis_change, iso_theta_sign, theta_sign, transvection, BasisLabel, BasisSide, BlockSigns, ChainMap,
    ComplexError, FVariant, Label,
};
use exact_arith::{linalg, Coeff, Fp, IntMatrix, IntPoly, PolyMatrix, VarId};
use generic_data::{GenericData, Specialization};
use multilinear::IndexSet;

fn generic(n: usize) -> GenericData {
    GenericData::build_generic(n, (n as i64 - 1) / 2).unwrap()
}

#[test]
fn theta_sign_is_chain_iso_n3() {
    for n in [2, 3] {
        let d = generic(n);
        let tilde = build_f_variant(&d, FVariant::Tilde);
        let minus = build_f_variant(&d, FVariant::MinusV);
        let theta = iso_theta_sign(n);
        let res = theta.residual(&tilde, &minus);
        assert!(res.iter().all(|(_, k)| *k == 0), "n={n}: {res:?}");
        // θ² = id
        let sq = theta.after(&theta);
        for r in -1..=2 * n as i64 + 1 {
            assert_eq!(sq.get(r).unwrap(), &PolyMatrix::identity(tilde.rank(r), &()));
        }
    }
    let b = BasisLabel::new(3, IndexSet::new(&[1, 2]), IndexSet::new(&[3]));
    assert_eq!(theta_sign(&b), 1);
    let b = BasisLabel::new(3, IndexSet::new(&[1]), IndexSet::new(&[3]));
    assert_eq!(theta_sign(&b), -1);
}

#[test]
fn tilde_twice_is_plain() {
    let d = generic(3);
    let t = BlockSigns::cross(-1);
    let twice = build_f_signed(&d, &t.compose(&t));
    let plain = build_f(&d);
    for r in plain.degrees() {
        assert_eq!(twice.diff(r), plain.diff(r));
    }
}

fn check_iso(d: &GenericData, theta: &IntMatrix, side: BasisSide) -> ChainMap {
    let (target, map) = iso_basis_change(d, theta, side).unwrap();
    let (a, b) = (build_f(d), build_f(&target));
    let res = map.residual(&a, &b);
    assert!(res.iter().all(|(_, k)| *k == 0), "{side:?}: {res:?}");
    map
}

#[test]
fn basis_change_isos_n3() {
    let d = generic(3);
    for (i, j, c) in [(1, 2, 1), (3, 1, -2), (2, 3, 5)] {
        let t = transvection(3, i, j, c);
        check_iso(&d, &t, BasisSide::Theta);
        check_iso(&d, &t, BasisSide::Phi);
    }
    let id = PolyMatrix::identity(3, &());
    let (target, m) = iso_basis_change(&d, &id, BasisSide::Theta).unwrap();
    assert_eq!(target.x, d.x);
    for r in -1..=7 {
        assert_eq!(m.get(r).unwrap(), &PolyMatrix::identity(build_f(&d).rank(r), &()));
    }
}

#[test]
fn basis_change_rejects_non_unimodular() {
    let d = generic(2);
    let mut t = PolyMatrix::identity(2, &());
    t.set(0, 0, IntPoly::int(2));
    assert!(matches!(iso_basis_change(&d, &t, BasisSide::Phi), Err(ComplexError::NotUnimodular(_))));
}

#[test]
fn basis_change_composition() {
    // as matrices, iso(θ₁θ₂) = iso(θ₂)·iso(θ₁): the induced maps are contravariant
    let d = generic(3);
    for side in [BasisSide::Theta, BasisSide::Phi] {
        let (t1, t2) = (transvection(3, 1, 3, 2), transvection(3, 2, 1, -1));
        let (_, m1) = iso_basis_change(&d, &t1, side).unwrap();
        let (_, m2) = iso_basis_change(&d, &t2, side).unwrap();
        let (_, m12) = iso_basis_change(&d, &t1.mul(&t2), side).unwrap();
        let comp = m2.after(&m1);
        for r in -1..=7 {
            assert_eq!(comp.get(r), m12.get(r), "{side:?} degree {r}");
        }
    }
}

fn block_data(n: usize) -> GenericData {
    let d = generic(n);
    let s = Specialization::block(n);
    s.apply_data(&d)
}

fn check_block(n: usize) {
    let d = block_data(n);
    let bd = build_g(&d).unwrap();
    let f = build_f(&d);
    assert!(bd.f_hat.d_squared_residuals().iter().all(|(_, k)| *k == 0));
    assert!(bd.g.d_squared_residuals().iter().all(|(_, k)| *k == 0));
    let res = bd.phi.residual(&bd.f_hat, &f);
    assert!(res.iter().all(|(_, k)| *k == 0), "n={n} φ: {res:?}");
    let res = bd.theta_hat.residual(&bd.f_hat, &bd.g);
    assert!(res.iter().all(|(_, k)| *k == 0), "n={n} θ̂: {res:?}");
    let res = bd.iso.residual(&bd.g, &f);
    assert!(res.iter().all(|(_, k)| *k == 0), "n={n} G→F: {res:?}");
    // φ bijective: square with full rank over 𝔽_p at a random point
    let p = 1_000_003u64;
    let point: HashMap<VarId, Fp> = VarId::all(n).into_iter().enumerate().map(|(k, v)| (v, Fp::new(7 + 31 * k as u64, p))).collect();
    for r in f.degrees() {
        let m = bd.phi.get(r).unwrap();
        assert_eq!(m.nrows(), m.ncols());
        let dense: Vec<Vec<Fp>> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m.entry(i, j).map_coeffs(|c| Fp::from_integer(c, &p)).evaluate(&p, |v| point[&v])).collect()).collect();
        assert_eq!(linalg::rank(&dense, m.ncols()), m.ncols(), "degree {r}");
    }
}

#[test]
fn block_decomposition_n3() {
    check_block(3);
}

#[test]
fn block_decomposition_n2_and_n4() {
    check_block(2);
    check_block(4);
}

#[test]
fn h_prime_vanishes_on_family_4() {
    let d = block_data(3);
    let bd = build_g(&d).unwrap();
    for r in bd.f_hat.degrees() {
        let src = bd.f_hat.module(r);
        let tgt = bd.f_hat.module(r - 1);
        for (i, j, _) in bd.f_hat.diff(r).entries() {
            if let (Label::G { summand: 0, .. }, Label::G { summand: 3, inner }) = (tgt.label(i), src.label(j)) {
                assert_ne!(inner.family, 4, "h' nonzero on family 4");
            }
        }
    }
}

#[test]
fn block_form_required() {
    assert!(matches!(build_g(&generic(3)), Err(ComplexError::NotBlockForm(_))));
}
