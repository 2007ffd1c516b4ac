use big_complex::{build_f, BasisLabel, ChainComplex, FContext};
use exact_arith::IntPoly;
use generic_data::GenericData;
use minimal_complex::{build_minimal, MinimalComplex, SplittingChoice};
use multilinear::IndexSet;
use tor_algebra::*;

fn setup(n: usize) -> (FContext, ChainComplex, MinimalComplex) {
    let d = GenericData::build_generic(n, (n as i64 - 1) / 2).unwrap();
    let f = build_f(&d);
    let mc = build_minimal(&d, &f, SplittingChoice::Canonical).unwrap();
    (FContext::new(&d), f, mc)
}

fn p(s: &str) -> IntPoly {
    IntPoly::parse_int(s).unwrap()
}

fn label(family: u8, left: &[usize], right: &[usize]) -> BasisLabel {
    BasisLabel::new(family, IndexSet::new(left), IndexSet::new(right))
}

fn sorted(mut im: Vec<(BasisLabel, IntPoly)>) -> Vec<(BasisLabel, IntPoly)> {
    im.retain(|(_, k)| !k.is_zero());
    im.sort_by_key(|a| a.0);
    im
}

#[test]
fn block_33_first_degree() {
    let (c, _, _) = setup(3);
    let a1 = c.basis(multilinear::Side::Primal, IndexSet::singleton(1));
    let im = sorted(block_33(&c, &a1));
    let expected = sorted(vec![
        (label(2, &[], &[1]), p("x11")),
        (label(2, &[], &[2]), p("x12")),
        (label(2, &[], &[3]), p("x13")),
        (label(3, &[1], &[]), p("1")),
    ]);
    assert_eq!(im, expected);
}

#[test]
fn block_23_display() {
    let (c, _, _) = setup(3);
    let im = sorted(block_23(&c, &label(2, &[1], &[]), &label(3, &[2], &[])));
    let expected = sorted(vec![
        (label(2, &[1], &[1]), p("-x21")),
        (label(2, &[1], &[2]), p("-x22")),
        (label(2, &[1], &[3]), p("-x23")),
        (label(3, &[2], &[1]), p("-x11")),
        (label(3, &[2], &[2]), p("-x21")),
        (label(3, &[2], &[3]), p("-x31")),
    ]);
    assert_eq!(im, expected);
}

#[test]
fn gamma_is_antisymmetric() {
    let (c, _, _) = setup(3);
    let (x, y) = (label(1, &[1], &[2]), label(1, &[3], &[1]));
    let neg = |v: Vec<(BasisLabel, IntPoly)>| sorted(v.into_iter().map(|(l, k)| (l, k.neg())).collect());
    assert_eq!(sorted(gamma_two(&c, &x, &y, true)), neg(gamma_two(&c, &y, &x, false)));
    let (a, b) = (label(2, &[1], &[]), label(3, &[2], &[]));
    assert_eq!(sorted(gamma_two(&c, &b, &a, true)), neg(gamma_two(&c, &a, &b, true)));
}

#[test]
fn chain_square_through_degree_two() {
    for n in [3, 4] {
        let (c, f, mc) = setup(n);
        let g = build_gamma(&c, &f, &mc).unwrap();
        assert_eq!(g.labels.len(), n * n + 2 * n);
        for (r, res) in chain_square_residuals(&f, &mc.complex, &g) {
            assert!(res.is_zero(), "n = {n}, degree {r}: {:?}", res.first_nonzero());
        }
    }
}

#[test]
fn pure_families_are_chain_maps() {
    let (c, f, mc) = setup(3);
    let g = build_gamma(&c, &f, &mc).unwrap();
    for family in [2, 3] {
        for (r, res) in pure_residuals(&c, &f, &mc.complex, &g, family, 3) {
            assert!(res.is_zero(), "family {family}, degree {r}");
        }
    }
}

#[test]
fn first_degree_blocks_extend_rho() {
    for n in [3, 4] {
        let (c, f, mc) = setup(n);
        let g = build_gamma(&c, &f, &mc).unwrap();
        for family in [2, 3] {
            let (ts, m) = pure_gamma(&c, &f, &g.labels, family, 1);
            let cols: Vec<usize> = ts.iter().map(|t| t[0]).collect();
            let rho = g.matrix(1);
            let rows: Vec<usize> = (0..rho.nrows()).collect();
            assert_eq!(rho.select(&rows, &cols), m, "n = {n}, family {family}");
        }
    }
}

#[test]
fn product_kernel_matches_presentation() {
    let (c, f, mc) = setup(3);
    let g = build_gamma(&c, &f, &mc).unwrap();
    let sq = tor1_square(mc.psi.get(2).unwrap(), &g);
    assert_eq!((sq.dim_tor1, sq.dim_wedge2, sq.kernel_dim), (15, 105, 105));
    assert!(sq.matches);
    let (c, f, mc) = setup(4);
    let g = build_gamma(&c, &f, &mc).unwrap();
    let sq = tor1_square(mc.psi.get(2).unwrap(), &g);
    assert_eq!((sq.dim_tor1, sq.quotient_dim), (24, 12));
    assert!(sq.matches);
    assert_eq!(sq.quotient_dim as u64, hilbert_of_presentation(4).unwrap()[2]);
}

#[test]
fn presentation_examples() {
    assert_eq!(hilbert_of_presentation(3).unwrap(), vec![1, 15, 0, 0]);
    assert_eq!(hilbert_of_presentation(4).unwrap(), vec![1, 24, 12, 0, 0]);
    assert_eq!(hilbert_of_presentation(5).unwrap()[3], 20);
    assert!(hilbert_of_presentation(2).is_err());
    assert_eq!(presentation(4).unwrap().dims, [16, 4, 4]);
}
