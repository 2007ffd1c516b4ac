use big_complex::build_f;
use exact_arith::IntPoly;
use generic_data::GenericData;
use minimal_complex::build_n2;

fn p(s: &str) -> IntPoly {
    IntPoly::parse_int(s).unwrap()
}

#[test]
fn koszul_on_g() {
    let d = GenericData::build_generic(2, 0).unwrap();
    let f = build_f(&d);
    let m = build_n2(&d, &f).unwrap();
    assert_eq!(m.g, vec![p("x22 + v1*u1"), p("-x21 + v2*u1"), p("-x12 + v1*u2"), p("x11 + v2*u2")]);
    let ranks: Vec<usize> = (0..=4).map(|r| m.minimal.complex.rank(r)).collect();
    assert_eq!(ranks, vec![1, 4, 6, 4, 1]);
    let k = m.koszul();
    for r in 0..=5 {
        assert_eq!(m.minimal.complex.diff(r), k.diff(r), "m_{r}");
    }
    // m₂(w₁₂) = g₁w₂ − g₂w₁
    let col = m.w_index(&[1, 2]).unwrap();
    let d2 = m.minimal.complex.diff(2);
    assert_eq!(d2.entry(m.w_index(&[2]).unwrap(), col), m.g[0]);
    assert_eq!(d2.entry(m.w_index(&[1]).unwrap(), col), m.g[1].neg());
}

#[test]
fn rejects_other_ranks() {
    let d = GenericData::build_generic(3, 1).unwrap();
    assert!(build_n2(&d, &build_f(&d)).is_err());
}
