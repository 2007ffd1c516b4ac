use big_complex::{build_f, ChainComplex};
use exact_arith::{IntMatrix, PolyMatrix};
use generic_data::GenericData;
use minimal_complex::{build_minimal, MinimalComplex, SplittingChoice};

fn setup(n: usize) -> (ChainComplex, MinimalComplex) {
    let d = GenericData::build_generic(n, (n as i64 - 1) / 2).unwrap();
    let f = build_f(&d);
    let choice = if n == 2 { SplittingChoice::RankTwo } else { SplittingChoice::Canonical };
    let m = build_minimal(&d, &f, choice).unwrap();
    (f, m)
}

fn identity(k: usize) -> IntMatrix {
    PolyMatrix::identity(k, &())
}

fn check_splitting_identities(n: usize) {
    let (f, m) = setup(n);
    for r in -1..=2 * n as i64 {
        let dec = m.decomposition.get(r).unwrap();
        let next = m.decomposition.get(r + 1).unwrap();
        let tau = m.tau(r).unwrap();
        let lf = dec.l.coords.mul(&f.diff(r + 1));
        assert_eq!(lf.mul(tau), identity(dec.l.rank()), "n={n} π^L f τ on L_{r}");
        let bn = &next.n.basis;
        assert_eq!(tau.mul(&lf.mul(bn)), *bn, "n={n} τ π^L f on N̂_{}", r + 1);
        // τ lands in N̂
        assert_eq!(next.n.projector().mul(tau), *tau, "n={n} τ_{r} image");
    }
}

fn check_homotopy(n: usize) {
    let (f, m) = setup(n);
    let s_at = |r: i64| m.s(r).cloned().unwrap_or_else(|| PolyMatrix::zeros(f.rank(r + 1), f.rank(r)));
    for r in -1..=2 * n as i64 + 1 {
        let h = s_at(r - 1).mul(&f.diff(r)).add(&f.diff(r + 1).mul(&s_at(r)));
        let bn = &m.decomposition.get(r).unwrap().n.basis;
        assert_eq!(h.mul(bn), *bn, "n={n} (sf + fs) on N̂_{r}");
        if let Some(next) = m.decomposition.get(r + 1) {
            let fb = f.diff(r + 1).mul(&next.n.basis);
            assert_eq!(h.mul(&fb), fb, "n={n} (sf + fs) on f(N̂_{})", r + 1);
        }
    }
}

fn check_comparison(n: usize) {
    let (f, m) = setup(n);
    let mc = &m.complex;
    assert!(mc.d_squared_residuals().iter().all(|(_, k)| *k == 0), "n={n} m² = 0");
    assert!(m.psi.is_chain_map(&f, mc), "n={n} ψ chain map");
    assert!(m.rho.is_chain_map(mc, &f), "n={n} ρ chain map");
    for r in -1..=2 * n as i64 + 1 {
        let dec = m.decomposition.get(r).unwrap();
        let psi = m.psi.get(r).unwrap();
        assert_eq!(psi.mul(m.rho.get(r).unwrap()), identity(dec.m.rank()), "n={n} ψρ in degree {r}");
        assert!(psi.mul(&dec.n.basis).is_zero(), "n={n} ψ on N̂_{r}");
        let next = m.decomposition.get(r + 1).map(|d| d.n.basis.clone()).unwrap_or_else(|| PolyMatrix::zeros(f.rank(r + 1), 0));
        assert!(psi.mul(&f.diff(r + 1)).mul(&next).is_zero(), "n={n} ψ on f(N̂_{})", r + 1);
    }
    for r in mc.degrees() {
        for (_, _, p) in mc.diff(r).entries() {
            assert!(p.constant_term().is_none(), "n={n} m_{r} has a unit entry {p}");
        }
    }
}

#[test]
fn splitting_identities_rank_two() {
    check_splitting_identities(2);
}

#[test]
fn splitting_identities_rank_three() {
    check_splitting_identities(3);
}

#[test]
fn comparison_rank_two() {
    check_comparison(2);
}

#[test]
fn comparison_rank_three() {
    check_comparison(3);
}

#[test]
fn homotopy_rank_two() {
    check_homotopy(2);
}

#[test]
fn homotopy_rank_three() {
    check_homotopy(3);
}

#[test]
fn rank_four() {
    check_splitting_identities(4);
    check_homotopy(4);
    check_comparison(4);
}

#[test]
fn first_differential_rank_three() {
    use exact_arith::IntPoly;
    use multilinear::IndexSet;
    let (_, m) = setup(3);
    let m1 = m.complex.diff(1);
    let module = m.complex.module(1);
    let d = GenericData::build_generic(3, 1).unwrap();
    let p = |s: &str| IntPoly::parse_int(s).unwrap();
    for i in 1..=3usize {
        for j in 1..=3usize {
            let l = big_complex::Label::F(big_complex::BasisLabel::new(1, IndexSet::singleton(j), IndexSet::singleton(i)));
            let col = module.position(&l).unwrap();
            // −u_j v_i − (Adj X)_{ij}
            let adj = d.minors().adjoint_entry(i, j);
            let expected = d.u[j - 1].mul(&d.v[i - 1]).neg().sub(&adj);
            assert_eq!(m1.entry(0, col), expected, "ε{j}⊗ε{i}");
        }
    }
    let l = big_complex::Label::Sub { space: 'M', family: 2, t: 1, part: big_complex::Part::Prime, index: 0 };
    let col = module.position(&l).unwrap();
    assert_eq!(m1.entry(0, col), p("u1*x11 + u2*x21 + u3*x31"));
}

#[test]
fn json_export() {
    let (_, m) = setup(2);
    let j = m.to_json();
    assert_eq!(j["n"], 2);
    assert_eq!(j["tau"].as_array().unwrap().len(), 7);
    assert_eq!(j["psi"].as_array().unwrap().len(), 7);
    assert_eq!(j["complex"]["modules"].as_array().unwrap().len(), 7);
}
