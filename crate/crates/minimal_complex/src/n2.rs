//! Rank two: `M` in the basis `w_S`, `S ⊆ {1,2,3,4}`, where it is the Koszul
//! complex on `g₁ = x₂₂+v₁u₁`, `g₂ = −x₂₁+v₂u₁`, `g₃ = −x₁₂+v₁u₂`, `g₄ = x₁₁+v₂u₂`.

use big_complex::{BasisLabel, ChainComplex, Label};
use exact_arith::{IntMatrix, IntPoly, PolyMatrix};
use generic_data::GenericData;
use multilinear::IndexSet;

use crate::decomposition::{build_decomposition, Decomposition, DegreeDecomposition, SVec, Subspace};
use crate::error::MinimalError;
use crate::minimal::{build_minimal_with, MinimalComplex};
use crate::splitting::SplittingChoice;

/// `M` at rank two with the Koszul generators.
#[derive(Clone, Debug)]
pub struct RankTwoComplex {
    pub minimal: MinimalComplex,
    /// `g₁..g₄`.
    pub g: Vec<IntPoly>,
}

impl RankTwoComplex {
    /// Position of `w_S` in `M_{|S|}`.
    pub fn w_index(&self, s: &[usize]) -> Option<usize> {
        self.minimal.complex.module(s.len() as i64).position(&Label::Wedge(s.to_vec()))
    }

    /// The Koszul complex on `g`, in the same bases as `M`.
    pub fn koszul(&self) -> ChainComplex {
        let diffs = (0..=5).map(|r| koszul_differential(&self.g, r)).collect();
        let modules = (-1..=5).map(|r| self.minimal.complex.module(r)).collect();
        ChainComplex::new(-1, modules, diffs)
    }
}

fn set(v: &[usize]) -> IndexSet {
    IndexSet::new(v)
}

/// Subsets of `{1..4}` of size `r` in lex order.
pub fn w_subsets(r: i64) -> Vec<Vec<usize>> {
    if !(0..=4).contains(&r) {
        return Vec::new();
    }
    IndexSet::subsets(4, r as usize).into_iter().map(|s| s.to_vec()).collect()
}

/// `w_S` as signed labels of `F_{|S|}`.
pub fn w_vector(s: &[usize]) -> Vec<(i64, BasisLabel)> {
    let b = |f: u8, l: &[usize], r: &[usize]| BasisLabel::new(f, set(l), set(r));
    let pairs = [(1, 1), (1, 2), (2, 1), (2, 2)];
    match s {
        [] => vec![(1, b(3, &[], &[]))],
        [i] => {
            let (a, c) = pairs[i - 1];
            vec![(-1, b(1, &[a], &[c]))]
        }
        [1, 2] => vec![(1, b(3, &[2], &[1]))],
        [1, 3] => vec![(-1, b(2, &[2], &[1]))],
        [1, 4] => vec![(1, b(3, &[2], &[2]))],
        [2, 3] => vec![(1, b(2, &[1], &[1])), (-1, b(2, &[2], &[2])), (-1, b(3, &[2], &[2]))],
        [2, 4] => vec![(1, b(2, &[1], &[2]))],
        [3, 4] => vec![(-1, b(3, &[1], &[2]))],
        [_, _, _] => {
            let missing = (1..=4).find(|k| !s.contains(k)).expect("three of four");
            let (a, c) = pairs[4 - missing];
            let sign = if missing <= 2 { -1 } else { 1 };
            vec![(sign, b(4, &[a], &[c]))]
        }
        _ => vec![(1, b(3, &[1, 2], &[1, 2]))],
    }
}

/// The Koszul differential `d_r` on `g`: `d(w_S) = Σ_k (−1)^k g_{s_k} w_{S∖s_k}`, `k` from 0.
pub fn koszul_differential(g: &[IntPoly], r: i64) -> IntMatrix {
    let (src, tgt) = (w_subsets(r), w_subsets(r - 1));
    let mut triples = Vec::new();
    for (j, s) in src.iter().enumerate() {
        for k in 0..s.len() {
            let mut t = s.clone();
            let i = t.remove(k);
            let row = tgt.iter().position(|x| *x == t).expect("face");
            triples.push((row, j, g[i - 1].signed(if k % 2 == 0 { 1 } else { -1 })));
        }
    }
    PolyMatrix::from_triplets(tgt.len(), src.len(), triples)
}

fn parts_of(sub: &Subspace) -> Vec<(Label, SVec)> {
    (0..sub.rank())
        .map(|j| {
            let col = sub.basis.column(j).iter().map(|(i, p)| (*i, p.constant_term().and_then(|c| c.to_i64()).expect("integer basis"))).collect();
            (sub.module.label(j).clone(), col)
        })
        .collect()
}

/// The rank two decomposition with `M` in the `w` basis.
pub fn rank_two_decomposition(d_v: i64) -> Result<Decomposition, MinimalError> {
    let base = build_decomposition(2, d_v, SplittingChoice::RankTwo)?;
    let degrees = base
        .degrees()
        .iter()
        .map(|dd| {
            let m: Vec<(Label, SVec)> = w_subsets(dd.r).into_iter().map(|s| {
                let v = w_vector(&s).into_iter().map(|(c, b)| (dd.f.pos_f(&b), c)).collect();
                (Label::Wedge(s), v)
            }).collect();
            if m.len() != dd.m.rank() {
                return Err(MinimalError::RankMismatch(format!("w basis in degree {}", dd.r)));
            }
            DegreeDecomposition::new(dd.r, dd.f.clone(), [parts_of(&dd.l), m, parts_of(&dd.n)])
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Decomposition::from_degrees(2, SplittingChoice::RankTwo, degrees))
}

/// `g₁..g₄` from the data: the entries of `Adj X + v·u` in the order 11, 21, 12, 22.
pub fn koszul_generators(d: &GenericData) -> Vec<IntPoly> {
    let (u, v, x) = (&d.u, &d.v, &d.x);
    let adj = |i: usize, j: usize| -> IntPoly {
        let e = x.entry(1 - j, 1 - i);
        if i == j {
            e
        } else {
            e.neg()
        }
    };
    [(0, 0), (1, 0), (0, 1), (1, 1)].iter().map(|&(i, j)| adj(i, j).add(&v[i].mul(&u[j]))).collect()
}

/// `M` at rank two.
pub fn build_n2(d: &GenericData, f: &ChainComplex) -> Result<RankTwoComplex, MinimalError> {
    if d.n != 2 {
        return Err(MinimalError::Unsupported(format!("rank two construction at n = {}", d.n)));
    }
    let minimal = build_minimal_with(d, f, rank_two_decomposition(d.grading.d_v)?)?;
    Ok(RankTwoComplex { minimal, g: koszul_generators(d) })
}
