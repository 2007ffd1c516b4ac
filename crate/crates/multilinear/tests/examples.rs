//! Worked examples for wedge, contraction, comultiplication, minors,
//! adjoints and orientations.

use exact_arith::{IntPoly, Integer, PolyMatrix, VarId};
use multilinear::{ExtElement, IndexSet, Minors, Orientation, Side};

type E = ExtElement<Integer>;

fn e(side: Side, n: usize, s: &[usize]) -> E {
    E::basis(side, n, IndexSet::new(s), &())
}

fn generic_x(n: usize) -> PolyMatrix<Integer> {
    let t = (1..=n).flat_map(|i| (1..=n).map(move |j| (i - 1, j - 1, IntPoly::v(VarId::X(i as u8, j as u8)))));
    PolyMatrix::from_triplets(n, n, t.collect::<Vec<_>>())
}

fn p(s: &str) -> IntPoly {
    IntPoly::parse_int(s).unwrap()
}

#[test]
fn wedge_examples() {
    let d = Side::Dual;
    assert_eq!(e(d, 2, &[1]).wedge(&e(d, 2, &[2])).unwrap(), e(d, 2, &[1, 2]));
    assert_eq!(e(d, 2, &[2]).wedge(&e(d, 2, &[1])).unwrap(), e(d, 2, &[1, 2]).neg());
    assert!(e(Side::Primal, 2, &[1]).wedge(&e(Side::Primal, 2, &[1])).unwrap().is_zero());
    assert!(e(d, 2, &[1]).wedge(&e(Side::Primal, 2, &[1])).is_err());
}

#[test]
fn contraction_examples() {
    let (pr, du) = (Side::Primal, Side::Dual);
    assert_eq!(e(du, 2, &[2]).contract(&e(pr, 2, &[1, 2])).unwrap(), e(pr, 2, &[1]).neg());
    let act = e(du, 2, &[2]).wedge(&e(du, 2, &[1])).unwrap();
    assert_eq!(act.contract(&e(pr, 2, &[1, 2])).unwrap().scalar_value(), IntPoly::int(1));
    assert_eq!(e(du, 3, &[1]).contract(&e(pr, 3, &[1, 2, 3])).unwrap(), e(pr, 3, &[2, 3]));
    assert!(e(du, 3, &[1]).contract(&e(du, 3, &[1])).is_err());
    // equal degrees: a_s(α_s) = α_s(a_s)
    let a = e(pr, 3, &[1, 3]);
    let al = e(du, 3, &[1, 3]);
    assert_eq!(a.contract(&al).unwrap().scalar_value(), al.contract(&a).unwrap().scalar_value());
}

#[test]
fn comultiplication_examples() {
    let du = Side::Dual;
    let x = e(du, 3, &[1, 2, 3]);
    let got: Vec<(E, E)> = x.comult(1, 2).unwrap();
    let want = vec![
        (e(du, 3, &[1]), e(du, 3, &[2, 3])),
        (e(du, 3, &[2]).neg(), e(du, 3, &[1, 3])),
        (e(du, 3, &[3]), e(du, 3, &[1, 2])),
    ];
    assert_eq!(got, want);
    let got = x.comult(0, 3).unwrap();
    assert_eq!(got, vec![(E::scalar(du, 3, IntPoly::int(1)), x.clone())]);
    let got = e(du, 2, &[1, 2]).comult(1, 1).unwrap();
    assert_eq!(got, vec![(e(du, 2, &[1]), e(du, 2, &[2])), (e(du, 2, &[2]).neg(), e(du, 2, &[1]))]);
    assert!(x.comult(1, 1).is_err());
}

#[test]
fn minor_examples() {
    let m2 = Minors::new(&generic_x(2), &());
    let got = m2.apply(&e(Side::Primal, 2, &[1, 2]), false);
    assert_eq!(got, E::monomial(Side::Dual, 2, IndexSet::new(&[1, 2]), p("x11*x22 - x12*x21")));
    assert_eq!(m2.matrix(1, false), generic_x(2));
    assert_eq!(m2.matrix(1, true), generic_x(2).transpose());
    assert_eq!(m2.matrix(0, false), PolyMatrix::identity(1, &()));
    let m3 = Minors::new(&generic_x(3), &());
    assert_eq!(m3.minor(IndexSet::new(&[1, 2]), IndexSet::new(&[1, 3])), &p("x11*x23 - x13*x21"));
}

#[test]
fn minors_match_leibniz_expansion() {
    // brute force over permutations of the column set
    fn perms(v: &[usize]) -> Vec<(i64, Vec<usize>)> {
        if v.len() <= 1 {
            return vec![(1, v.to_vec())];
        }
        let mut out = Vec::new();
        for k in 0..v.len() {
            let mut rest = v.to_vec();
            let x = rest.remove(k);
            for (s, mut q) in perms(&rest) {
                q.insert(0, x);
                out.push((if k % 2 == 0 { s } else { -s }, q));
            }
        }
        out
    }
    let n = 4;
    let m = Minors::new(&generic_x(n), &());
    for k in 0..=n {
        for rows in IndexSet::subsets(n, k) {
            for cols in IndexSet::subsets(n, k) {
                let (r, c) = (rows.to_vec(), cols.to_vec());
                let mut acc = IntPoly::zero();
                for (s, q) in perms(&c) {
                    let term = r.iter().zip(q.iter()).fold(IntPoly::int(s), |t, (&i, &j)| t.mul(&IntPoly::v(VarId::X(i as u8, j as u8))));
                    acc = acc.add(&term);
                }
                assert_eq!(m.minor(rows, cols), &acc, "rows {rows} cols {cols}");
            }
        }
    }
}

#[test]
fn adjoint_examples() {
    let m2 = Minors::new(&generic_x(2), &());
    assert_eq!(m2.adjoint_entry(1, 1), p("x22"));
    assert_eq!(m2.adjoint_entry(1, 2), p("-x12"));
    assert_eq!(m2.adjoint_entry(2, 1), p("-x21"));
    assert_eq!(m2.adjoint_entry(2, 2), p("x11"));
    let o = Orientation::new(2);
    assert_eq!(o.adjoint_via_orientation(&m2, 1, 1, &()), p("-x22"));
    let id = Minors::new(&PolyMatrix::<Integer>::identity(3, &()), &());
    for i in 1..=3 {
        for j in 1..=3 {
            assert_eq!(id.adjoint_entry(i, j), IntPoly::int((i == j) as i64));
        }
    }
}

#[test]
fn orientation_examples() {
    let o = Orientation::new(3);
    assert_eq!(o.contract(&e(Side::Dual, 3, &[1]), &()), e(Side::Primal, 3, &[2, 3]));
    assert_eq!(o.contract(&e(Side::Dual, 3, &[2]), &()), e(Side::Primal, 3, &[1, 3]).neg());
    // n = 2: η(ε_n) = e_1(e_2(ε_n)) = 1 forces e_2(ε_n) = ε_1 and e_1(ε_n) = −ε_2
    let o2 = Orientation::new(2);
    let e2_eps = o2.contract(&e(Side::Primal, 2, &[2]), &());
    assert_eq!(e2_eps, e(Side::Dual, 2, &[1]));
    assert_eq!(o2.contract(&e(Side::Primal, 2, &[1]), &()), e(Side::Dual, 2, &[2]).neg());
    let back = e(Side::Primal, 2, &[1]).contract(&e2_eps).unwrap().scalar_value();
    assert_eq!(back, IntPoly::int(1));
}
