//! The product `⋀²Tor₁ → Tor₂` as the reduction of `ψ₂∘γ₂` modulo the maximal ideal.

use exact_arith::{linalg, Coeff, IntMatrix, Rational};
use serde::Serialize;

use crate::gamma::GammaMap;
use crate::presentation::{pair_in_relations, Summand};

/// Kernel of the degree-two product compared with the presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tor1Square {
    pub n: usize,
    pub dim_tor1: usize,
    pub dim_wedge2: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub quotient_dim: usize,
    pub predicted_kernel_dim: usize,
    /// The kernel equals the span of the predicted relation monomials.
    pub matches: bool,
}

/// Constant terms of `m` as a dense rational matrix.
pub fn reduce(m: &IntMatrix) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(&()); m.ncols()]; m.nrows()];
    for (i, j, p) in m.entries() {
        if let Some(c) = p.constant_term() {
            out[i][j] = Rational::from_integer(c, &());
        }
    }
    out
}

/// Kernel of `ψ̄₂∘γ̄₂` on `⋀²M̄₁` against the relation monomials.
pub fn tor1_square(psi2: &IntMatrix, g: &GammaMap) -> Tor1Square {
    let n = g.n;
    let prod = psi2.mul(g.matrix(2));
    let dense = reduce(&prod);
    let tuples = g.tuples(2);
    let rank = linalg::rank(&dense, tuples.len());
    let summand = |k: usize| Summand::of_family(g.labels[k].0.family);
    let predicted: Vec<bool> = tuples.iter().map(|t| pair_in_relations(n, summand(t[0]), summand(t[1]))).collect();
    let predicted_kernel_dim = predicted.iter().filter(|&&p| p).count();
    let killed_columns_vanish = dense.iter().all(|row| row.iter().zip(&predicted).all(|(x, &p)| !p || x.is_zero()));
    let kept: Vec<Vec<Rational>> = dense.iter().map(|row| row.iter().zip(&predicted).filter(|(_, &p)| !p).map(|(x, _)| x.clone()).collect()).collect();
    let kept_cols = tuples.len() - predicted_kernel_dim;
    let kept_independent = linalg::rank(&kept, kept_cols) == kept_cols;
    Tor1Square {
        n,
        dim_tor1: g.labels.len(),
        dim_wedge2: tuples.len(),
        rank,
        kernel_dim: tuples.len() - rank,
        quotient_dim: rank,
        predicted_kernel_dim,
        matches: killed_columns_vanish && kept_independent,
    }
}
