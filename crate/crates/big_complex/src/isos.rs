//! The sign isomorphism `θ: F~[u,X,v] → F[u,X,−v]` and the basis-change
//! isomorphisms `Θ: F → F[u, Xθ, θ⁻¹v]`, `Φ: F → F[θ⁻¹u, θ*X, v]`.

use exact_arith::{IntMatrix, IntPoly, Integer, PolyMatrix};
use generic_data::GenericData;
use multilinear::{ExtElement, IndexSet, Minors, Side};

use crate::build_f::pow;
use crate::complex::ChainMap;
use crate::error::ComplexError;
use crate::label::{f_labels, BasisLabel};

/// Scalar of `θ_r` on the summand of `b`.
pub fn theta_sign(b: &BasisLabel) -> i64 {
    let (r, t) = (b.degree(), b.t() as i64);
    match b.family {
        1 => pow(r + 1 - t),
        2 | 4 => pow(r - t),
        _ => pow(t),
    }
}

/// Diagonal map with entry `sign(b)` on each `F` label of rank `n`, degrees `−1..=2n+1`.
pub fn diagonal_map(n: usize, sign: impl Fn(&BasisLabel) -> i64) -> ChainMap {
    let lo = -1;
    let maps = (lo..=2 * n as i64 + 1)
        .map(|r| {
            let labels = f_labels(n, r);
            let k = labels.len();
            PolyMatrix::from_triplets(k, k, labels.iter().enumerate().map(|(i, b)| (i, i, IntPoly::int(sign(b)))).collect::<Vec<_>>())
        })
        .collect();
    ChainMap::new(lo, maps)
}

/// The diagonal chain isomorphism `θ`.
pub fn iso_theta_sign(n: usize) -> ChainMap {
    diagonal_map(n, theta_sign)
}

/// Which of the two basis-change isomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisSide {
    /// `F[u,X,v] → F[u, Xθ, θ⁻¹v]`.
    Theta,
    /// `F[u,X,v] → F[θ⁻¹u, θ*X, v]`.
    Phi,
}

/// Action on one tensor factor.
#[derive(Clone, Copy)]
enum Act {
    Id,
    /// `⋀θ*` on a dual factor.
    Star,
    /// `⋀θ⁻¹` on a primal factor.
    Inv,
}

/// Inverse of a unimodular constant matrix.
pub fn unimodular_inverse(theta: &IntMatrix) -> Result<IntMatrix, ComplexError> {
    let n = theta.nrows();
    if theta.ncols() != n || theta.entries().any(|(_, _, p)| !p.is_constant()) {
        return Err(ComplexError::NotUnimodular("not a square constant matrix".into()));
    }
    let m = Minors::new(theta, &());
    if *m.det() != IntPoly::int(1) {
        return Err(ComplexError::NotUnimodular(format!("determinant {}", m.det())));
    }
    let entries: Vec<_> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| (i - 1, j - 1, m.adjoint_entry(i, j))).collect();
    Ok(PolyMatrix::from_triplets(n, n, entries))
}

fn vec_mul(m: &IntMatrix, v: &[IntPoly]) -> Vec<IntPoly> {
    (0..m.nrows()).map(|i| v.iter().enumerate().fold(IntPoly::zero(), |acc, (j, x)| acc.add(&m.entry(i, j).mul(x)))).collect()
}

/// The target data and the isomorphism `F[d] → F[target]` for `θ` with `det θ = 1`.
pub fn iso_basis_change(d: &GenericData, theta: &IntMatrix, side: BasisSide) -> Result<(GenericData, ChainMap), ComplexError> {
    let n = d.n;
    if theta.nrows() != n {
        return Err(ComplexError::NotUnimodular(format!("expected {n}x{n}, got {}x{}", theta.nrows(), theta.ncols())));
    }
    let inv = unimodular_inverse(theta)?;
    let mut target = d.clone();
    let acts: [(Act, Act); 4] = match side {
        BasisSide::Theta => {
            target.x = d.x.mul(theta);
            target.v = vec_mul(&inv, &d.v);
            [(Act::Id, Act::Star), (Act::Inv, Act::Star), (Act::Id, Act::Id), (Act::Id, Act::Star)]
        }
        BasisSide::Phi => {
            target.x = theta.transpose().mul(&d.x);
            target.u = vec_mul(&inv, &d.u);
            [(Act::Star, Act::Id), (Act::Id, Act::Id), (Act::Inv, Act::Star), (Act::Star, Act::Id)]
        }
    };
    let star = Minors::new(theta, &());
    let inv_m = Minors::new(&inv, &());
    let apply = |act: Act, side: Side, s: IndexSet| -> ExtElement<Integer> {
        let e = ExtElement::basis(side, n, s, &());
        match act {
            Act::Id => e,
            Act::Star => star.apply_as(&e, true, Side::Dual),
            Act::Inv => inv_m.apply_as(&e, false, Side::Primal),
        }
    };
    let lo = -1;
    let maps = (lo..=2 * n as i64 + 1)
        .map(|r| {
            let labels = f_labels(n, r);
            let pos: std::collections::HashMap<BasisLabel, usize> = labels.iter().enumerate().map(|(k, b)| (*b, k)).collect();
            let mut triples = Vec::new();
            for (j, b) in labels.iter().enumerate() {
                let (la, ra) = acts[b.family as usize - 1];
                let l = apply(la, b.left_side(), b.left);
                let rr = apply(ra, Side::Dual, b.right);
                for (ls, lc) in l.terms() {
                    for (rs, rc) in rr.terms() {
                        triples.push((pos[&BasisLabel::new(b.family, ls, rs)], j, lc.mul(rc)));
                    }
                }
            }
            PolyMatrix::from_triplets(labels.len(), labels.len(), triples)
        })
        .collect();
    Ok((target, ChainMap::new(lo, maps)))
}

/// The elementary transvection `1 + c·E_ij` (1-based, `i ≠ j`).
pub fn transvection(n: usize, i: usize, j: usize, c: i64) -> IntMatrix {
    assert!(i != j && (1..=n).contains(&i) && (1..=n).contains(&j), "transvection indices");
    let mut m = PolyMatrix::identity(n, &());
    m.set(i - 1, j - 1, IntPoly::int(c));
    m
}
