//! The contraction `τ_r: L_r → N̂_{r+1}`.

use big_complex::{tensor, BasisLabel, FContext, Image, Label, LabeledModule, Part};
use exact_arith::{IntMatrix, IntPoly, Integer, PolyMatrix};
use multilinear::{ExtElement, IndexSet, Side};

use crate::decomposition::DegreeDecomposition;
use crate::splitting::{ell, lambda, SplittingChoice};

type Elt = ExtElement<Integer>;

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn contract(a: &Elt, b: &Elt) -> Elt {
    a.contract(b).expect("opposite sides")
}

fn scalar(side: Side, n: usize, p: IntPoly) -> Elt {
    Elt::scalar(side, n, p)
}

/// `ℓ` applied linearly to a dual element, landing in `family`.
fn ell_image(n: usize, family: u8, sign: i64, x: &Elt) -> Image {
    x.terms()
        .flat_map(|(a, c)| ell(n, a).into_iter().map(move |(sg, l, r)| (BasisLabel::new(family, l, r), c.signed(sg * sign))))
        .collect()
}

/// `λ_1[a ⊗ b]` for primal `a` and dual `b` of degree one, rank two.
fn lambda_one(a: &Elt, b: &Elt) -> Elt {
    let mut out = Elt::zero(Side::Dual, 2, 2);
    for (l, lc) in a.terms() {
        for (r, rc) in b.terms() {
            if let Some((sg, s)) = lambda(2, SplittingChoice::RankTwo, l, r) {
                out.add_term(s, &lc.mul(rc).signed(sg));
            }
        }
    }
    out
}

/// Image of one generator of `L_r` under `τ_r`, for the rule set of rank `n ≥ 3`
/// and the entries shared with rank two.
fn tau_general(c: &FContext, r: i64, label: &Label) -> Image {
    let n = c.n;
    let ni = n as i64;
    let eps = c.orient.dual::<Integer>(&());
    let dual = |s: IndexSet| c.basis(Side::Dual, s);
    match label {
        Label::F(b) => {
            let t = b.t() as i64;
            let (left, right) = c.source(b);
            match b.family {
                1 if t == 0 => tensor(2, sign(r + 1), &scalar(Side::Primal, n, IntPoly::int(1)), &right),
                1 => tensor(3, sign(r), &scalar(Side::Primal, n, IntPoly::int(1)), &left),
                2 => {
                    // η ⊗ β
                    let mut img = tensor(4, sign(r + 1), &eps, &right);
                    if r == ni {
                        img.extend(ell_image(n, 3, 1, &contract(&c.u, &eps)));
                    }
                    img
                }
                3 => {
                    let mut img = tensor(4, sign(r + 1), &right, &eps);
                    if r == ni {
                        img.extend(ell_image(n, 2, sign(ni), &contract(&c.v, &eps)));
                    }
                    img
                }
                _ if t == 0 => ell_image(n, 2, 1, &right),
                _ => ell_image(n, 3, -1, &left),
            }
        }
        Label::Sub { family, part: Part::DoublePrime, index, .. } => {
            let beta = dual(IndexSet::subsets(n, (r + 2 - ni) as usize)[*index]);
            if *family == 2 {
                let mut img = tensor(1, 1, &eps, &beta);
                if r == ni - 1 {
                    let s = contract(&c.v, &beta).scalar_value();
                    img.extend(tensor(3, sign(ni), &scalar(Side::Primal, n, s), &eps));
                }
                img
            } else {
                let mut img = tensor(1, 1, &beta, &eps);
                if r == ni - 1 {
                    let s = contract(&c.u, &beta).scalar_value();
                    img.extend(tensor(2, -1, &scalar(Side::Primal, n, s), &eps));
                }
                img
            }
        }
        other => panic!("{other} is not a generator of L"),
    }
}

/// Image under `τ_r` at rank two, where seven generators follow special rules.
fn tau_rank_two(c: &FContext, r: i64, label: &Label) -> Image {
    let n = 2;
    let eps = c.orient.dual::<Integer>(&());
    let one_d = scalar(Side::Dual, n, IntPoly::int(1));
    match (r, label) {
        (1, Label::F(b)) if b.family == 2 => {
            let a = c.basis(Side::Primal, b.left);
            let mut img = tensor(1, 1, &eps, &contract(&a, &eps));
            let s = contract(&c.v.wedge(&a).expect("primal"), &eps).scalar_value();
            img.extend(tensor(3, 1, &scalar(Side::Primal, n, s), &eps));
            img
        }
        (1, Label::F(b)) if b.family == 3 => {
            let a = c.basis(Side::Primal, b.left);
            let mut img = tensor(1, 1, &contract(&a, &eps), &eps);
            let s = contract(&a.wedge(&c.u).expect("primal"), &eps).scalar_value();
            img.extend(tensor(2, 1, &scalar(Side::Primal, n, s), &eps));
            img
        }
        (1, Label::F(b)) if b.family == 4 => {
            let v1 = c.v.coeff(IndexSet::singleton(1));
            let v2 = c.v.coeff(IndexSet::singleton(2));
            let mut img = tensor(1, 1, &eps.scale(&v1), &c.basis(Side::Dual, IndexSet::singleton(2)));
            img.extend(tensor(3, 1, &scalar(Side::Primal, n, v1.mul(&v2)), &eps));
            img.extend(ell_image(n, 2, 1, &one_d));
            img
        }
        (2, Label::F(b)) if b.family == 2 => {
            let mut img = tensor(4, -1, &eps, &one_d);
            img.extend(tensor(3, 1, &c.u, &eps));
            img.extend(tensor(1, -1, &lambda_one(&c.u, &contract(&c.u, &eps)), &eps));
            img
        }
        (2, Label::Sub { family: 3, .. }) => tensor(1, -1, &eps, &eps),
        (2, Label::F(b)) if b.family == 3 => {
            let mut img = tensor(4, -1, &one_d, &eps);
            img.extend(tensor(2, 1, &c.v, &eps));
            img
        }
        (2, Label::F(b)) if b.family == 4 && b.t() == 1 => {
            let a = c.eta(&c.basis(Side::Dual, b.left));
            let mut img = tensor(3, -1, &a, &eps);
            img.extend(tensor(1, 1, &lambda_one(&a, &contract(&c.u, &eps)), &eps));
            img
        }
        _ => tau_general(c, r, label),
    }
}

/// `τ_r` as an `F_{r+1} × L_r` matrix.
pub fn tau_matrix(c: &FContext, dec: &DegreeDecomposition, target: &LabeledModule) -> IntMatrix {
    let r = dec.r;
    let l = &dec.l.module;
    let cols = (0..l.rank())
        .map(|k| {
            let img = if c.n == 2 { tau_rank_two(c, r, l.label(k)) } else { tau_general(c, r, l.label(k)) };
            img.into_iter().map(|(b, p)| (target.pos_f(&b), p)).collect()
        })
        .collect();
    PolyMatrix::from_columns(target.rank(), cols)
}
